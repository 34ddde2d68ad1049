#pragma once

// Lyndon words: the membership test, the unique weakly decreasing
// factorization (Duval's algorithm plus an independent suffix-minima route),
// the standard factorization, the iterated standard factorization, and
// enumeration up to a length bound.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddeven/words.hpp"

namespace oddeven {

/// Factors of the unique factorization into weakly decreasing Lyndon words.
using LyndonFactorization = std::vector<Word>;

/// True iff w is nonempty and smaller than every proper suffix of itself.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t p = 1; p < w.size(); ++p) {
    Word suffix(w.begin() + static_cast<long>(p), w.end());
    if (!lex_less(w, suffix)) return false;
  }
  return true;
}

/// Start offsets (0-based) of the Lyndon factors of w, by Duval's scan.
inline std::vector<std::size_t> lyndon_factor_starts(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lyndon_factor_starts: empty word");
  std::vector<std::size_t> starts;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] <= w[j]) {
      if (w[k] < w[j]) {
        k = i;
      } else {
        ++k;
      }
      ++j;
    }
    while (i <= k) {
      starts.push_back(i);
      i += j - k;
    }
  }
  return starts;
}

inline LyndonFactorization lyndon_factorize(const Word& w) {
  auto starts = lyndon_factor_starts(w);
  LyndonFactorization factors;
  factors.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    std::size_t end = i + 1 < starts.size() ? starts[i + 1] : w.size();
    factors.emplace_back(w.begin() + static_cast<long>(starts[i]),
                         w.begin() + static_cast<long>(end));
  }
  return factors;
}

/// Start offsets of the Lyndon factors computed the other way: the
/// left-to-right minima of the sequence of suffixes w[0..], w[1..], ...
/// Quadratic, kept deliberately naive as an independent oracle for Duval.
inline std::vector<std::size_t> suffix_minima_factor_starts(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("suffix_minima_factor_starts: empty word");
  }
  std::vector<std::size_t> minima;
  std::size_t best = 0;
  for (std::size_t q = 0; q < w.size(); ++q) {
    Word suffix(w.begin() + static_cast<long>(q), w.end());
    if (q == 0) {
      minima.push_back(q);
      best = q;
      continue;
    }
    Word best_suffix(w.begin() + static_cast<long>(best), w.end());
    if (lex_less(suffix, best_suffix)) {
      minima.push_back(q);
      best = q;
    }
  }
  return minima;
}

/// Position (0-based) where the lexicographically smallest proper suffix of w
/// starts. Direct comparison over all proper suffixes; inputs are tiny.
inline std::size_t smallest_proper_suffix_start(const Word& w) {
  if (w.size() < 2) {
    throw std::invalid_argument("smallest_proper_suffix_start: need length >= 2");
  }
  std::size_t best = 1;
  Word best_suffix(w.begin() + 1, w.end());
  for (std::size_t p = 2; p < w.size(); ++p) {
    Word suffix(w.begin() + static_cast<long>(p), w.end());
    if (lex_less(suffix, best_suffix)) {
      best = p;
      best_suffix = std::move(suffix);
    }
  }
  return best;
}

/// Standard factorization of a Lyndon word of length >= 2: prefix * suffix,
/// where suffix is the smallest proper suffix (equivalently the longest
/// proper suffix that is itself Lyndon). Both parts are Lyndon and
/// prefix < whole < suffix.
struct StandardFactorization {
  Word prefix;
  Word suffix;
};

inline StandardFactorization standard_factorization(const Word& lyndon) {
  if (lyndon.size() < 2) {
    throw std::invalid_argument("standard_factorization: need length >= 2");
  }
  if (!is_lyndon(lyndon)) {
    throw std::invalid_argument("standard_factorization: input is not a Lyndon word");
  }
  std::size_t cut = smallest_proper_suffix_start(lyndon);
  return {Word(lyndon.begin(), lyndon.begin() + static_cast<long>(cut)),
          Word(lyndon.begin() + static_cast<long>(cut), lyndon.end())};
}

/// Thrown when the iterated standard factorization runs out of word: the
/// remainder shrinks below length 2 before the stop condition holds. Cannot
/// happen for even inputs, which is the only case the inverse map produces.
struct IsfUnderflowError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Iterated standard factorization of a Lyndon word with respect to a
/// reference comparand u: head * s_j * s_{j-1} * ... * s_1, where each s_i is
/// the smallest proper suffix of what precedes it together with s_i, every
/// s_i with i < j is even and smaller than u, and s_j is odd or >= u.
struct IsfDecomposition {
  Word head;                   // what remains after the last removal
  std::vector<Word> suffixes;  // s_j first (leftmost in the word), s_1 last
  WordOrInf wrt;               // the reference comparand
};

inline IsfDecomposition isf(const Word& lyndon, const WordOrInf& wrt) {
  if (!is_lyndon(lyndon) || lyndon.size() < 2) {
    throw std::invalid_argument("isf: input must be a Lyndon word of length >= 2");
  }
  std::vector<Word> removed;  // s_1, s_2, ... in removal order
  Word current = lyndon;
  Word head;
  while (true) {
    if (current.size() < 2) {
      throw IsfUnderflowError(
          "isf: remainder shorter than 2 before the stop condition held");
    }
    auto sf = standard_factorization(current);
    bool stop = sf.suffix.size() % 2 == 1 || lex_leq(wrt, WordOrInf{sf.suffix});
    removed.push_back(std::move(sf.suffix));
    if (stop) {
      head = std::move(sf.prefix);
      break;
    }
    current = std::move(sf.prefix);
  }
  IsfDecomposition d;
  d.head = std::move(head);
  d.suffixes.assign(removed.rbegin(), removed.rend());
  d.wrt = wrt;
  return d;
}

/// Every Lyndon word of length <= max_len over the first `alphabet_size`
/// letters, exactly once, in lexicographic order.
inline std::vector<Word> lyndon_words_up_to(int alphabet_size, int max_len) {
  if (alphabet_size < 1 || max_len < 1) {
    throw std::invalid_argument("lyndon_words_up_to: bad parameters");
  }
  std::vector<Word> out;
  Word w{0};
  while (true) {
    out.push_back(w);
    Word t;
    t.reserve(static_cast<std::size_t>(max_len));
    for (int i = 0; i < max_len; ++i) {
      t.push_back(w[static_cast<std::size_t>(i) % w.size()]);
    }
    while (!t.empty() && t.back() == alphabet_size - 1) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }
  return out;
}

/// "d|adccdbccc" style rendering of a factorization; "-" for the empty word.
inline std::string render_factorization(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  bool first = true;
  for (const Word& f : lyndon_factorize(w)) {
    if (!first) out += '|';
    out += to_text(f);
    first = false;
  }
  return out;
}

/// "adccd!bccc" style rendering of the standard factorization; the '!' is the
/// ASCII stand-in for a dashed bar.
inline std::string render_standard_factorization(const Word& lyndon) {
  auto sf = standard_factorization(lyndon);
  return to_text(sf.prefix) + "!" + to_text(sf.suffix);
}

/// "a!d!bccc" style rendering of an iterated standard factorization.
inline std::string render_isf(const IsfDecomposition& d) {
  std::string out = to_text(d.head);
  for (const Word& s : d.suffixes) {
    out += '!';
    out += to_text(s);
  }
  return out;
}

}  // namespace oddeven
