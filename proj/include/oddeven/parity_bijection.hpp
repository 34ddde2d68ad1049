#pragma once

// The weight-preserving bijection psi between words whose Lyndon factors are
// odd and pairwise distinct and words whose Lyndon factors are even (up to
// one length-one factor when the length is odd), its inverse omega, step
// traces, and the composed permutation bijection f_S.
//
// psi repeatedly rewrites a pair (O, E), moving an even-length subword from
// the right end of O's factorization to the front of E:
//   S  — the last factor splits as r!s with s below its left neighbour and r
//        odd: s moves to E, r stays as the new last factor;
//   P  — same split with r even: r moves to E, s stays;
//   F  — the last factor does not split that way: the last two factors move
//        to E in swapped order.
// A single leftover letter (odd total length) is inserted into E's
// factorization at the unique slot keeping the factors weakly decreasing.
//
// omega undoes these steps reading E's factorization from the left, using
// the iterated standard factorization with respect to the last factor of O.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddeven/lyndon.hpp"
#include "oddeven/necklaces.hpp"
#include "oddeven/permutations.hpp"
#include "oddeven/words.hpp"

namespace oddeven {

/// Word class by the parity pattern of the Lyndon factors. A single letter
/// (and the empty word) belongs to both classes.
enum class WordClass { kOddDistinct, kEvenUpToSingleton, kBoth, kNeither };

/// All factors odd and pairwise distinct.
inline bool has_odd_distinct_factors(const Word& w) {
  if (w.empty()) return true;
  auto factors = lyndon_factorize(w);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].size() % 2 == 0) return false;
    if (i > 0 && factors[i] == factors[i - 1]) return false;
  }
  return true;
}

/// All factors even, except possibly one factor of length one (exactly one
/// when |w| is odd).
inline bool has_even_factors_up_to_singleton(const Word& w) {
  if (w.empty()) return true;
  int singletons = 0;
  for (const Word& f : lyndon_factorize(w)) {
    if (f.size() % 2 == 1) {
      if (f.size() != 1) return false;
      ++singletons;
    }
  }
  return singletons <= 1;
}

inline WordClass classify_word(const Word& w) {
  bool odd = has_odd_distinct_factors(w);
  bool even = has_even_factors_up_to_singleton(w);
  if (odd && even) return WordClass::kBoth;
  if (odd) return WordClass::kOddDistinct;
  if (even) return WordClass::kEvenUpToSingleton;
  return WordClass::kNeither;
}

inline std::string_view word_class_name(WordClass c) {
  switch (c) {
    case WordClass::kOddDistinct: return "odd-distinct";
    case WordClass::kEvenUpToSingleton: return "even-up-to-singleton";
    case WordClass::kBoth: return "both";
    case WordClass::kNeither: return "neither";
  }
  return "?";
}

/// Thrown when psi/omega is handed a word outside its declared class.
struct WordClassError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class StepRule { kS, kP, kF, kInsert1, kSPrime, kPPrime, kFPrime, kExtract1 };

inline std::string_view rule_name(StepRule r) {
  switch (r) {
    case StepRule::kS: return "S";
    case StepRule::kP: return "P";
    case StepRule::kF: return "F";
    case StepRule::kInsert1: return "Insert1";
    case StepRule::kSPrime: return "S'";
    case StepRule::kPPrime: return "P'";
    case StepRule::kFPrime: return "F'";
    case StepRule::kExtract1: return "Extract1";
  }
  return "?";
}

/// The rewriting state: the odd-side word and the even-side word.
struct PairState {
  Word odd;
  Word even;

  friend bool operator==(const PairState&, const PairState&) = default;
};

/// Snapshot after a rule application; the first row of a trace has no rule.
struct TraceRow {
  std::optional<StepRule> rule;
  PairState state;
};

struct BijectionTrace {
  std::vector<TraceRow> rows;
};

struct BijectionRun {
  Word image;
  BijectionTrace trace;
};

struct StepOutcome {
  StepRule rule;
  PairState state;
};

namespace detail {

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Inserts `factor` into the factorization of e at the leftmost slot that
// keeps the factor sequence weakly decreasing, and returns the concatenation.
inline Word insert_factor(const Word& e, const Word& factor) {
  std::vector<Word> factors = e.empty() ? std::vector<Word>{} : lyndon_factorize(e);
  std::size_t slot = 0;
  while (slot < factors.size() && !lex_leq(factors[slot], factor)) ++slot;
  Word out;
  out.reserve(e.size() + factor.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i == slot) out.insert(out.end(), factor.begin(), factor.end());
    out.insert(out.end(), factors[i].begin(), factors[i].end());
  }
  if (slot == factors.size()) out.insert(out.end(), factor.begin(), factor.end());
  return out;
}

// Removes the unique length-one factor of e; returns {letter, remainder}.
inline std::pair<Word, Word> extract_singleton_factor(const Word& e) {
  auto factors = lyndon_factorize(e);
  Word letter;
  Word rest;
  for (const Word& f : factors) {
    if (f.size() == 1 && letter.empty()) {
      letter = f;
    } else {
      rest.insert(rest.end(), f.begin(), f.end());
    }
  }
  if (letter.empty()) {
    throw std::logic_error("extract_singleton_factor: no length-one factor");
  }
  return {std::move(letter), std::move(rest)};
}

}  // namespace detail

/// One forward step. With |O| >= 2 this applies S, P or F; with |O| == 1 it
/// inserts the leftover letter into E's factorization.
inline StepOutcome psi_step(const PairState& cur) {
  const Word& o = cur.odd;
  if (o.empty()) throw std::logic_error("psi_step: left word is empty");
  if (o.size() == 1) {
    return {StepRule::kInsert1, PairState{Word{}, detail::insert_factor(cur.even, o)}};
  }
  auto factors = lyndon_factorize(o);
  const Word& last = factors.back();
  WordOrInf neighbour = factors.size() >= 2
                            ? WordOrInf{factors[factors.size() - 2]}
                            : WordOrInf{Infinity{}};
  if (last.size() >= 2) {
    auto sf = standard_factorization(last);
    if (lex_less(WordOrInf{sf.suffix}, neighbour)) {
      // splittable; keep one part, move the even one to E
      Word head(o.begin(), o.end() - static_cast<long>(last.size()));
      if (sf.prefix.size() % 2 == 1) {
        return {StepRule::kS, PairState{detail::concat(head, sf.prefix),
                                        detail::concat(sf.suffix, cur.even)}};
      }
      return {StepRule::kP, PairState{detail::concat(head, sf.suffix),
                                      detail::concat(sf.prefix, cur.even)}};
    }
  }
  // not splittable; a lone factor of length >= 2 is always splittable, so
  // there are at least two factors here
  if (factors.size() < 2) {
    throw std::logic_error("psi_step: unsplittable single factor");
  }
  const Word& before_last = factors[factors.size() - 2];
  Word head(o.begin(),
            o.end() - static_cast<long>(last.size() + before_last.size()));
  Word moved = detail::concat(last, before_last);
  return {StepRule::kF, PairState{std::move(head), detail::concat(moved, cur.even)}};
}

/// One inverse step; E must be nonempty. Never produces Extract1, which only
/// happens once at the start of omega.
inline StepOutcome omega_step(const PairState& cur) {
  const Word& e = cur.even;
  if (e.empty()) throw std::logic_error("omega_step: right word is empty");
  auto efactors = lyndon_factorize(e);
  const Word& e1 = efactors.front();
  Word rest(e.begin() + static_cast<long>(e1.size()), e.end());
  WordOrInf oh = WordOrInf{Infinity{}};
  if (!cur.odd.empty()) {
    auto ofactors = lyndon_factorize(cur.odd);
    oh = WordOrInf{ofactors.back()};
  }
  if (lex_less(oh, WordOrInf{e1})) {
    return {StepRule::kSPrime,
            PairState{detail::concat(cur.odd, e1), std::move(rest)}};
  }
  auto d = isf(e1, oh);
  const Word& sj = d.suffixes.front();
  Word shifted;  // s_{j-1} ... s_1, prepended to the rest of E
  for (std::size_t i = 1; i < d.suffixes.size(); ++i) {
    shifted.insert(shifted.end(), d.suffixes[i].begin(), d.suffixes[i].end());
  }
  Word new_even = detail::concat(shifted, rest);
  if (!is_infinite(oh) && lex_leq(as_word(oh), sj)) {
    // the last factor of O is glued onto head * s_j
    const Word& oh_word = as_word(oh);
    Word new_odd(cur.odd.begin(),
                 cur.odd.end() - static_cast<long>(oh_word.size()));
    new_odd.insert(new_odd.end(), d.head.begin(), d.head.end());
    new_odd.insert(new_odd.end(), sj.begin(), sj.end());
    new_odd.insert(new_odd.end(), oh_word.begin(), oh_word.end());
    return {StepRule::kPPrime, PairState{std::move(new_odd), std::move(new_even)}};
  }
  Word new_odd = cur.odd;
  new_odd.insert(new_odd.end(), sj.begin(), sj.end());
  new_odd.insert(new_odd.end(), d.head.begin(), d.head.end());
  return {StepRule::kFPrime, PairState{std::move(new_odd), std::move(new_even)}};
}

/// Maps a word with odd, pairwise distinct Lyndon factors to a word with even
/// Lyndon factors (plus one length-one factor when |w| is odd), preserving
/// the weight. Returns the image together with the full step trace.
inline BijectionRun psi(const Word& w) {
  if (!has_odd_distinct_factors(w)) {
    auto factors = lyndon_factorize(w);
    bool repeated = false;
    for (std::size_t i = 1; i < factors.size(); ++i) {
      repeated = repeated || factors[i] == factors[i - 1];
    }
    throw WordClassError(repeated
                             ? "psi: input has a repeated Lyndon factor"
                             : "psi: input has an even Lyndon factor");
  }
  BijectionTrace trace;
  PairState state{w, Word{}};
  trace.rows.push_back(TraceRow{std::nullopt, state});
  while (!state.odd.empty()) {
    auto out = psi_step(state);
    state = std::move(out.state);
    trace.rows.push_back(TraceRow{out.rule, state});
  }
  return {state.even, std::move(trace)};
}

/// Inverse map: rebuilds the word with odd, distinct Lyndon factors from a
/// word with even factors (up to one singleton), preserving the weight.
inline BijectionRun omega(const Word& w) {
  if (!has_even_factors_up_to_singleton(w)) {
    bool long_odd = false;
    int singletons = 0;
    for (const Word& f : lyndon_factorize(w)) {
      if (f.size() % 2 == 1) {
        long_odd = long_odd || f.size() > 1;
        ++singletons;
      }
    }
    throw WordClassError(long_odd
                             ? "omega: input has an odd Lyndon factor longer than one letter"
                             : "omega: input has more than one length-one Lyndon factor");
  }
  BijectionTrace trace;
  PairState state{Word{}, w};
  trace.rows.push_back(TraceRow{std::nullopt, state});
  if (w.size() % 2 == 1) {
    auto [letter, rest] = detail::extract_singleton_factor(w);
    state = PairState{std::move(letter), std::move(rest)};
    trace.rows.push_back(TraceRow{StepRule::kExtract1, state});
  }
  while (!state.even.empty()) {
    auto out = omega_step(state);
    state = std::move(out.state);
    trace.rows.push_back(TraceRow{out.rule, state});
  }
  return {state.odd, std::move(trace)};
}

/// Composed bijection on permutations: from only-odd-cycle permutations with
/// Asc contained in S to even-cycle-class permutations with Des contained in
/// S, via xi, psi and the inverse of phi.
inline Permutation f_s(const SubsetS& s, const Permutation& p) {
  if (!all_cycles_odd(p)) {
    throw std::invalid_argument("f_s: input must have only odd cycles");
  }
  auto m = xi(s, p);
  Word w = multiset_to_word(m);
  Word image = psi(w).image;
  return phi_inverse(s, multiset_from_word(image));
}

/// Inverse of f_s, via phi, omega and the inverse of xi.
inline Permutation f_s_inverse(const SubsetS& s, const Permutation& p) {
  if (!even_cycles_up_to_one_fixed_point(p)) {
    throw std::invalid_argument("f_s_inverse: input must be in the even cycle class");
  }
  auto m = phi(s, p);
  Word w = multiset_to_word(m);
  Word source = omega(w).image;
  return xi_inverse(s, multiset_from_word(source));
}

// --- trace rendering ------------------------------------------------------
//
// Rows are "<left>  <rule>  <right>" with two-space separators; the rule
// column is "(S)", "(P')", ... and stays empty on the initial row and on the
// Insert1/Extract1 rows. In a psi table the left column shows O's
// factorization with the standard factorization of its last factor marked by
// '!'; the right column is the plain word, except after Insert1 where the
// factorization is shown. In an omega table the right column shows E's
// factorization with the first factor replaced by its iterated standard
// factorization whenever the upcoming step consumes it that way.

namespace detail {

inline std::string rule_field(std::optional<StepRule> rule) {
  if (!rule || *rule == StepRule::kInsert1 || *rule == StepRule::kExtract1) {
    return "";
  }
  return "(" + std::string(rule_name(*rule)) + ")";
}

inline std::string psi_left_field(const Word& o) {
  if (o.empty()) return "-";
  auto factors = lyndon_factorize(o);
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '|';
    if (i + 1 == factors.size() && factors[i].size() >= 2) {
      out += render_standard_factorization(factors[i]);
    } else {
      out += to_text(factors[i]);
    }
  }
  return out;
}

inline std::string omega_right_field(const PairState& state, bool isf_next) {
  if (state.even.empty()) return "-";
  auto factors = lyndon_factorize(state.even);
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '|';
    if (i == 0 && isf_next) {
      WordOrInf oh = WordOrInf{Infinity{}};
      if (!state.odd.empty()) oh = WordOrInf{lyndon_factorize(state.odd).back()};
      out += render_isf(isf(factors[0], oh));
    } else {
      out += to_text(factors[i]);
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_psi_table(const BijectionTrace& trace) {
  std::string out;
  for (const TraceRow& row : trace.rows) {
    std::string right = row.rule == StepRule::kInsert1
                            ? render_factorization(row.state.even)
                            : to_text(row.state.even);
    out += detail::psi_left_field(row.state.odd);
    out += "  " + detail::rule_field(row.rule) + "  ";
    out += right;
    out += '\n';
  }
  return out;
}

inline std::string render_omega_table(const BijectionTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const TraceRow& row = trace.rows[i];
    bool isf_next = false;
    if (i + 1 < trace.rows.size()) {
      auto next = trace.rows[i + 1].rule;
      isf_next = next == StepRule::kPPrime || next == StepRule::kFPrime;
    }
    out += render_factorization(row.state.odd);
    out += "  " + detail::rule_field(row.rule) + "  ";
    out += detail::omega_right_field(row.state, isf_next);
    out += '\n';
  }
  return out;
}

}  // namespace oddeven
