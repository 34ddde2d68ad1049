#pragma once

// Exhaustive desk-scale verification: the per-step invariants and step
// reversal of the psi/omega traces, the counting identities over symmetric
// groups bucketed by ascent/descent sets, and the f_S bijectivity sweep.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddeven/lyndon.hpp"
#include "oddeven/parity_bijection.hpp"
#include "oddeven/permutations.hpp"
#include "oddeven/words.hpp"

namespace oddeven {

/// Thrown when a recorded trace violates one of the step invariants.
struct TraceInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline void trace_require(bool ok, const char* what) {
  if (!ok) throw TraceInvariantError(what);
}

inline bool odd_strictly_decreasing(const std::vector<Word>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].size() % 2 == 0) return false;
    if (i > 0 && !lex_less(factors[i], factors[i - 1])) return false;
  }
  return true;
}

inline bool all_even(const std::vector<Word>& factors) {
  for (const Word& f : factors) {
    if (f.size() % 2 == 1) return false;
  }
  return true;
}

inline std::vector<Word> factors_or_empty(const Word& w) {
  return w.empty() ? std::vector<Word>{} : lyndon_factorize(w);
}

// Multiset equality of factor lists up to insertion of one extra factor.
inline bool factors_with_inserted(const std::vector<Word>& before,
                                  const std::vector<Word>& after,
                                  const Word& extra) {
  std::vector<Word> expected = before;
  expected.push_back(extra);
  std::sort(expected.begin(), expected.end(), [](const Word& a, const Word& b) {
    return lex_less(b, a);
  });
  return expected == after;
}

}  // namespace detail

/// Asserts along a psi trace, for every step (O,E) -> (O',E'):
/// the dispatched rule is the one the state dictates, the moved subword is
/// the dictated one, O' keeps odd pairwise distinct factors with the expected
/// factor list, E' stays below the second-to-last factor of O', the
/// rule-specific bounds between E', the moved word and the last factor of O'
/// hold, all factors of E' are even with the moved word inside the leftmost
/// one, and every step shortens O by a positive even amount.
inline void check_psi_trace(const Word& input, const BijectionTrace& trace) {
  using detail::trace_require;
  trace_require(!trace.rows.empty(), "psi trace: empty");
  trace_require(!trace.rows.front().rule &&
                    trace.rows.front().state == PairState{input, Word{}},
                "psi trace: bad initial row");
  for (std::size_t i = 1; i < trace.rows.size(); ++i) {
    const PairState& before = trace.rows[i - 1].state;
    const PairState& after = trace.rows[i].state;
    trace_require(trace.rows[i].rule.has_value(), "psi trace: missing rule");
    StepRule rule = *trace.rows[i].rule;

    trace_require(!before.odd.empty(), "psi trace: step from empty O");
    if (before.odd.size() == 1) {
      trace_require(rule == StepRule::kInsert1, "psi trace: expected Insert1");
      trace_require(i + 1 == trace.rows.size(), "psi trace: Insert1 not final");
      trace_require(after.odd.empty(), "psi trace: O not emptied by Insert1");
      trace_require(detail::factors_with_inserted(
                        detail::factors_or_empty(before.even),
                        detail::factors_or_empty(after.even), before.odd),
                    "psi trace: Insert1 did not add the letter as a factor");
      continue;
    }

    auto factors = lyndon_factorize(before.odd);
    const std::size_t m = factors.size();
    const Word& last = factors.back();
    WordOrInf neighbour =
        m >= 2 ? WordOrInf{factors[m - 2]} : WordOrInf{Infinity{}};
    bool splittable = false;
    Word part_r, part_s;
    if (last.size() >= 2) {
      auto sf = standard_factorization(last);
      part_r = std::move(sf.prefix);
      part_s = std::move(sf.suffix);
      splittable = lex_less(WordOrInf{part_s}, neighbour);
    }
    StepRule expected = !splittable ? StepRule::kF
                        : part_r.size() % 2 == 1 ? StepRule::kS
                                                 : StepRule::kP;
    trace_require(rule == expected, "psi trace: rule does not match the state");

    Word moved;
    std::vector<Word> expected_factors;
    switch (rule) {
      case StepRule::kS:
        moved = part_s;
        expected_factors.assign(factors.begin(), factors.end() - 1);
        expected_factors.push_back(part_r);
        break;
      case StepRule::kP:
        moved = part_r;
        expected_factors.assign(factors.begin(), factors.end() - 1);
        expected_factors.push_back(part_s);
        break;
      case StepRule::kF:
        trace_require(m >= 2, "psi trace: flip with a single factor");
        moved = detail::concat(last, factors[m - 2]);
        expected_factors.assign(factors.begin(), factors.end() - 2);
        break;
      default:
        trace_require(false, "psi trace: unexpected rule");
    }
    trace_require(after.even == detail::concat(moved, before.even),
                  "psi trace: E' is not moved-word + E");

    auto factors_after = detail::factors_or_empty(after.odd);
    trace_require(factors_after == expected_factors,
                  "psi trace: O' factor list differs from the dictated one");
    trace_require(detail::odd_strictly_decreasing(factors_after),
                  "psi trace: O' factors not odd and strictly decreasing");

    const std::size_t h = factors_after.size();
    if (h >= 2) {
      trace_require(lex_less(after.even, factors_after[h - 2]),
                    "psi trace: E' not below the next-to-last factor of O'");
    }
    if (rule == StepRule::kF && h >= 1) {
      trace_require(lex_less(after.even, factors_after[h - 1]),
                    "psi trace: E' not below the last factor of O' after F");
    }
    if (rule == StepRule::kP) {
      trace_require(h >= 1 && lex_less(after.even, factors_after[h - 1]) &&
                        lex_less(before.even, factors_after[h - 1]),
                    "psi trace: bound on E/E' after P fails");
    }
    auto factors_even = detail::factors_or_empty(after.even);
    if (rule == StepRule::kS) {
      trace_require(h >= 1 && !factors_even.empty() &&
                        factors_even.front() == moved &&
                        lex_less(factors_after[h - 1], moved) &&
                        lex_leq(moved, after.even),
                    "psi trace: suffix placement after S fails");
    }
    trace_require(detail::all_even(factors_even),
                  "psi trace: E' has an odd factor");
    trace_require(!factors_even.empty() &&
                      moved.size() <= factors_even.front().size(),
                  "psi trace: moved word exceeds the leftmost factor of E'");

    std::size_t removed = before.odd.size() - after.odd.size();
    trace_require(removed > 0 && removed % 2 == 0,
                  "psi trace: step did not shorten O by a positive even amount");
  }
  trace_require(trace.rows.back().state.odd.empty(),
                "psi trace: O not empty at the end");
}

/// Asserts along an omega trace, for every step (O',E') -> (O,E): the
/// dispatched rule matches the state, E keeps even factors, O keeps odd
/// pairwise distinct factors with the expected factor list, E stays below the
/// next-to-last factor of O, the leftmost factor of E is at most the standard
/// suffix of the last factor of O, and after S'/P' the standard factorization
/// of the last factor of O splits at the recorded seam.
inline void check_omega_trace(const Word& input, const BijectionTrace& trace) {
  using detail::trace_require;
  trace_require(!trace.rows.empty(), "omega trace: empty");
  trace_require(!trace.rows.front().rule &&
                    trace.rows.front().state == PairState{Word{}, input},
                "omega trace: bad initial row");
  std::size_t i = 1;
  if (input.size() % 2 == 1) {
    trace_require(trace.rows.size() > 1 &&
                      trace.rows[1].rule == StepRule::kExtract1,
                  "omega trace: missing Extract1 on odd input");
    const PairState& after = trace.rows[1].state;
    trace_require(after.odd.size() == 1, "omega trace: Extract1 must move one letter");
    trace_require(detail::factors_with_inserted(
                      detail::factors_or_empty(after.even),
                      detail::factors_or_empty(input), after.odd),
                  "omega trace: Extract1 did not remove a factor");
    i = 2;
  }
  for (; i < trace.rows.size(); ++i) {
    const PairState& before = trace.rows[i - 1].state;
    const PairState& after = trace.rows[i].state;
    trace_require(trace.rows[i].rule.has_value(), "omega trace: missing rule");
    StepRule rule = *trace.rows[i].rule;
    trace_require(!before.even.empty(), "omega trace: step from empty E");

    auto efactors = lyndon_factorize(before.even);
    const Word& e1 = efactors.front();
    auto ofactors = detail::factors_or_empty(before.odd);
    WordOrInf oh = ofactors.empty() ? WordOrInf{Infinity{}}
                                    : WordOrInf{ofactors.back()};

    std::vector<Word> expected_factors;
    Word expected_even(before.even.begin() + static_cast<long>(e1.size()),
                       before.even.end());
    StepRule expected;
    Word seam_prefix, seam_suffix;  // recorded standard split of o_m
    if (lex_less(oh, WordOrInf{e1})) {
      expected = StepRule::kSPrime;
      expected_factors = ofactors;
      if (!expected_factors.empty()) expected_factors.pop_back();
      expected_factors.push_back(
          detail::concat(ofactors.empty() ? Word{} : ofactors.back(), e1));
      seam_prefix = as_word(oh);
      seam_suffix = e1;
    } else {
      auto d = isf(e1, oh);
      const Word& sj = d.suffixes.front();
      Word shifted;
      for (std::size_t t = 1; t < d.suffixes.size(); ++t) {
        shifted.insert(shifted.end(), d.suffixes[t].begin(), d.suffixes[t].end());
      }
      expected_even = detail::concat(shifted, expected_even);
      if (!is_infinite(oh) && lex_leq(as_word(oh), sj)) {
        expected = StepRule::kPPrime;
        expected_factors = ofactors;
        expected_factors.pop_back();
        Word glued = detail::concat(detail::concat(d.head, sj), as_word(oh));
        expected_factors.push_back(glued);
        seam_prefix = detail::concat(d.head, sj);
        seam_suffix = as_word(oh);
      } else {
        expected = StepRule::kFPrime;
        expected_factors = ofactors;
        expected_factors.push_back(sj);
        expected_factors.push_back(d.head);
      }
    }
    trace_require(rule == expected, "omega trace: rule does not match the state");
    trace_require(after.even == expected_even,
                  "omega trace: E does not match the dictated update");

    auto factors_after = detail::factors_or_empty(after.odd);
    trace_require(factors_after == expected_factors,
                  "omega trace: O factor list differs from the dictated one");
    trace_require(detail::odd_strictly_decreasing(factors_after),
                  "omega trace: O factors not odd and strictly decreasing");
    trace_require(detail::all_even(detail::factors_or_empty(after.even)),
                  "omega trace: E has an odd factor");

    const std::size_t m = factors_after.size();
    if (m >= 2) {
      trace_require(lex_less(after.even, factors_after[m - 2]),
                    "omega trace: E not below the next-to-last factor of O");
    }
    if (m >= 1 && factors_after.back().size() >= 2 && !after.even.empty()) {
      auto sf = standard_factorization(factors_after.back());
      trace_require(lex_leq(lyndon_factorize(after.even).front(), sf.suffix),
                    "omega trace: leftmost factor of E above the standard suffix");
    }
    if (rule == StepRule::kSPrime || rule == StepRule::kPPrime) {
      auto sf = standard_factorization(factors_after.back());
      trace_require(sf.prefix == seam_prefix && sf.suffix == seam_suffix,
                    "omega trace: standard split of the new factor is off-seam");
    }
    trace_require(after.even.size() < before.even.size(),
                  "omega trace: step did not shorten E");
  }
  trace_require(trace.rows.back().state.even.empty(),
                "omega trace: E not empty at the end");
}

/// Replays a psi trace backward: on every intermediate state the omega
/// dispatcher must pick the primed counterpart rule and reproduce the
/// previous state (the letter insertion pairs with the letter extraction).
inline void check_psi_trace_reversal(const BijectionTrace& trace) {
  using detail::trace_require;
  for (std::size_t i = trace.rows.size(); i-- > 1;) {
    StepRule rule = *trace.rows[i].rule;
    const PairState& cur = trace.rows[i].state;
    const PairState& prev = trace.rows[i - 1].state;
    if (rule == StepRule::kInsert1) {
      auto [letter, rest] = detail::extract_singleton_factor(cur.even);
      trace_require(cur.odd.empty() && PairState{letter, rest} == prev,
                    "psi reversal: extraction does not undo the insertion");
      continue;
    }
    auto out = omega_step(cur);
    StepRule primed = rule == StepRule::kS   ? StepRule::kSPrime
                      : rule == StepRule::kP ? StepRule::kPPrime
                                             : StepRule::kFPrime;
    trace_require(out.rule == primed, "psi reversal: wrong counterpart rule");
    trace_require(out.state == prev, "psi reversal: state not recovered");
  }
}

/// Replays an omega trace backward through the psi dispatcher.
inline void check_omega_trace_reversal(const BijectionTrace& trace) {
  using detail::trace_require;
  for (std::size_t i = trace.rows.size(); i-- > 1;) {
    StepRule rule = *trace.rows[i].rule;
    const PairState& cur = trace.rows[i].state;
    const PairState& prev = trace.rows[i - 1].state;
    if (rule == StepRule::kExtract1) {
      trace_require(cur.odd.size() == 1 && prev.odd.empty() &&
                        detail::insert_factor(cur.even, cur.odd) == prev.even,
                    "omega reversal: insertion does not undo the extraction");
      continue;
    }
    auto out = psi_step(cur);
    StepRule unprimed = rule == StepRule::kSPrime   ? StepRule::kS
                        : rule == StepRule::kPPrime ? StepRule::kP
                                                    : StepRule::kF;
    trace_require(out.rule == unprimed, "omega reversal: wrong counterpart rule");
    trace_require(out.state == prev, "omega reversal: state not recovered");
  }
}

// --- counting identities ---------------------------------------------------

inline long long double_factorial(int m) {
  long long r = 1;
  for (int x = m; x >= 2; x -= 2) r *= x;
  return r;
}

/// |S^o_n| = |S^e_n|: (n-1)!!^2 for even n, n*(n-2)!!^2 for odd n.
inline long long parity_class_count(int n) {
  if (n % 2 == 0) {
    long long d = double_factorial(n - 1);
    return d * d;
  }
  long long d = double_factorial(n - 2);
  return n * d * d;
}

/// Subset of [n-1] from a bit mask (bit j-1 set means j is in the set).
inline SubsetS subset_from_mask(int n, unsigned mask) {
  std::vector<int> elements;
  for (int j = 1; j < n; ++j) {
    if (mask & (1u << (j - 1))) elements.push_back(j);
  }
  return SubsetS::make(n, std::move(elements));
}

inline std::string subset_text(unsigned mask, int n) {
  std::string out = "{";
  bool first = true;
  for (int j = 1; j < n; ++j) {
    if (mask & (1u << (j - 1))) {
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
    }
  }
  out += '}';
  return out;
}

struct CountRow {
  unsigned mask = 0;
  long long odd_count = 0;
  long long even_count = 0;
  bool pass = false;
};

struct CountReport {
  int n = 0;
  std::vector<CountRow> exact_rows;   // per J: Asc(pi)=J in S^o vs Des(pi)=J in S^e
  std::vector<CountRow> subset_rows;  // per S: Asc(pi) in S vs Des(pi) in S
  bool inclusion_exclusion_ok = false;
  long long closed_form = 0;
  bool totals_ok = false;
  bool pass = false;
};

/// Single sweep over S_n bucketing by (parity class, ascent set); subset rows
/// come from a zeta transform, and a Moebius pass checks that the subset
/// table reproduces the exact table.
inline CountReport verify_theorem_counts(int n) {
  if (n < 1 || n > 9) {
    throw std::invalid_argument("verify_theorem_counts: n outside desk budget 1..9");
  }
  const std::size_t buckets = 1u << (n - 1);
  std::vector<long long> exact_odd(buckets, 0), exact_even(buckets, 0);

  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  do {
    unsigned asc = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (line[static_cast<std::size_t>(i)] < line[static_cast<std::size_t>(i + 1)]) {
        asc |= 1u << i;
      }
    }
    unsigned des = static_cast<unsigned>(buckets - 1) & ~asc;
    auto p = Permutation::from_one_line(line);
    if (all_cycles_odd(p)) ++exact_odd[asc];
    if (even_cycles_up_to_one_fixed_point(p)) ++exact_even[des];
  } while (std::next_permutation(line.begin(), line.end()));

  std::vector<long long> subset_odd = exact_odd, subset_even = exact_even;
  for (std::size_t bit = 0; bit + 1 < static_cast<std::size_t>(n); ++bit) {
    for (std::size_t mask = 0; mask < buckets; ++mask) {
      if (mask & (1u << bit)) {
        subset_odd[mask] += subset_odd[mask ^ (1u << bit)];
        subset_even[mask] += subset_even[mask ^ (1u << bit)];
      }
    }
  }

  CountReport report;
  report.n = n;
  report.pass = true;
  for (std::size_t mask = 0; mask < buckets; ++mask) {
    CountRow exact{static_cast<unsigned>(mask), exact_odd[mask], exact_even[mask],
                   exact_odd[mask] == exact_even[mask]};
    CountRow subset{static_cast<unsigned>(mask), subset_odd[mask],
                    subset_even[mask], subset_odd[mask] == subset_even[mask]};
    report.pass = report.pass && exact.pass && subset.pass;
    report.exact_rows.push_back(exact);
    report.subset_rows.push_back(subset);
  }

  report.inclusion_exclusion_ok = true;
  for (std::size_t j = 0; j < buckets; ++j) {
    long long odd_sum = 0, even_sum = 0;
    unsigned sub = static_cast<unsigned>(j);
    while (true) {
      int flipped = std::popcount(static_cast<unsigned>(j) ^ sub);
      long long sign = flipped % 2 == 0 ? 1 : -1;
      odd_sum += sign * subset_odd[sub];
      even_sum += sign * subset_even[sub];
      if (sub == 0) break;
      sub = (sub - 1) & static_cast<unsigned>(j);
    }
    if (odd_sum != exact_odd[j] || even_sum != exact_even[j]) {
      report.inclusion_exclusion_ok = false;
    }
  }
  report.pass = report.pass && report.inclusion_exclusion_ok;

  report.closed_form = parity_class_count(n);
  report.totals_ok = subset_odd[buckets - 1] == report.closed_form &&
                     subset_even[buckets - 1] == report.closed_form;
  report.pass = report.pass && report.totals_ok;
  return report;
}

inline std::string render(const CountReport& r) {
  std::string out = "theorem counts: n=" + std::to_string(r.n) + "\n";
  out += "closed form: " + std::to_string(r.closed_form) + "\n";
  out += "exact rows (Asc(pi)=J in odd class vs Des(pi)=J in even class):\n";
  for (const CountRow& row : r.exact_rows) {
    out += "J=" + subset_text(row.mask, r.n) + "  odd=" +
           std::to_string(row.odd_count) + "  even=" +
           std::to_string(row.even_count) + (row.pass ? "  ok" : "  MISMATCH") +
           "\n";
  }
  out += "subset rows (Asc(pi) within S vs Des(pi) within S):\n";
  for (const CountRow& row : r.subset_rows) {
    out += "S=" + subset_text(row.mask, r.n) + "  odd=" +
           std::to_string(row.odd_count) + "  even=" +
           std::to_string(row.even_count) + (row.pass ? "  ok" : "  MISMATCH") +
           "\n";
  }
  out += std::string("inclusion-exclusion: ") +
         (r.inclusion_exclusion_ok ? "ok" : "MISMATCH") + "\n";
  out += std::string("totals: ") + (r.totals_ok ? "ok" : "MISMATCH") + "\n";
  out += std::string("RESULT: ") + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

struct FsRow {
  unsigned mask = 0;
  long long domain_size = 0;
  long long codomain_size = 0;
  bool pass = false;
};

struct FsReport {
  int n = 0;
  std::vector<FsRow> rows;
  long long maps_checked = 0;
  bool pass = false;
};

/// For every S: f_S maps {odd cycles, Asc within S} injectively onto
/// {even class, Des within S}, and f_S_inverse undoes it pointwise.
inline FsReport verify_fs_bijectivity(int n) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("verify_fs_bijectivity: n outside desk budget 1..7");
  }
  struct Entry {
    Permutation p;
    unsigned asc = 0, des = 0;
    bool odd = false, even = false;
  };
  std::vector<Entry> entries;
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  const unsigned full = static_cast<unsigned>((1u << (n - 1)) - 1);
  do {
    Entry e;
    e.p = Permutation::from_one_line(line);
    for (int i = 0; i + 1 < n; ++i) {
      if (line[static_cast<std::size_t>(i)] < line[static_cast<std::size_t>(i + 1)]) {
        e.asc |= 1u << i;
      }
    }
    e.des = full & ~e.asc;
    e.odd = all_cycles_odd(e.p);
    e.even = even_cycles_up_to_one_fixed_point(e.p);
    if (e.odd || e.even) entries.push_back(std::move(e));
  } while (std::next_permutation(line.begin(), line.end()));

  FsReport report;
  report.n = n;
  report.pass = true;
  for (unsigned mask = 0; mask <= full; ++mask) {
    SubsetS s = subset_from_mask(n, mask);
    FsRow row;
    row.mask = mask;
    bool ok = true;
    std::set<std::vector<int>> images;
    for (const Entry& e : entries) {
      if (e.even && (e.des & ~mask) == 0) ++row.codomain_size;
      if (!(e.odd && (e.asc & ~mask) == 0)) continue;
      ++row.domain_size;
      Permutation image = f_s(s, e.p);
      ++report.maps_checked;
      ok = ok && even_cycles_up_to_one_fixed_point(image);
      unsigned img_des = 0;
      auto b = boundary_sets(image);
      for (int d : b.descents) img_des |= 1u << (d - 1);
      ok = ok && (img_des & ~mask) == 0;
      ok = ok && f_s_inverse(s, image) == e.p;
      images.insert(image.one_line());
    }
    ok = ok && static_cast<long long>(images.size()) == row.domain_size &&
         row.domain_size == row.codomain_size;
    row.pass = ok;
    report.pass = report.pass && ok;
    report.rows.push_back(row);
    if (mask == full) break;  // guards n == 1, where full == 0
  }
  return report;
}

inline std::string render(const FsReport& r) {
  std::string out = "f_S bijectivity sweep: n=" + std::to_string(r.n) + "\n";
  for (const FsRow& row : r.rows) {
    out += "S=" + subset_text(row.mask, r.n) + "  domain=" +
           std::to_string(row.domain_size) + "  codomain=" +
           std::to_string(row.codomain_size) +
           (row.pass ? "  ok" : "  MISMATCH") + "\n";
  }
  out += "maps checked: " + std::to_string(r.maps_checked) + "\n";
  out += std::string("RESULT: ") + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace oddeven
