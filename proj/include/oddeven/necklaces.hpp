#pragma once

// Multisets of primitive necklaces, their identification with words via the
// Lyndon factorization, and the two letter-block bijections between
// permutations and necklace multisets: phi (positions ranked by the plain
// lexicographic order of their periodic labels) and xi (ranked by the
// alternating lexicographic order).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddeven/lyndon.hpp"
#include "oddeven/permutations.hpp"
#include "oddeven/words.hpp"

namespace oddeven {

/// True iff w is nonempty and not a proper power of a shorter word.
inline bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = w[i] == w[i - d];
    }
    if (periodic) return false;
  }
  return true;
}

/// Lexicographically smallest rotation; for a primitive word this is the
/// Lyndon representative of its necklace.
inline Word canonical_rotation(const Word& w) {
  if (w.empty()) throw std::invalid_argument("canonical_rotation: empty word");
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (lex_less(rot, best)) best = rot;
  }
  return best;
}

/// S subset of [n-1], the boundary set defining the letter blocks of [n].
struct SubsetS {
  int n = 0;
  std::vector<int> elements;  // strictly increasing, within [1, n-1]

  static SubsetS make(int n, std::vector<int> elements) {
    if (n < 1) throw std::invalid_argument("subset: n must be >= 1");
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] < 1 || elements[i] > n - 1) {
        throw std::invalid_argument("subset: element outside [1, n-1]");
      }
      if (i > 0 && elements[i] == elements[i - 1]) {
        throw std::invalid_argument("subset: repeated element");
      }
    }
    return SubsetS{n, std::move(elements)};
  }

  static SubsetS full(int n) {
    std::vector<int> all(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    std::iota(all.begin(), all.end(), 1);
    return make(n, std::move(all));
  }

  int letter_count() const { return static_cast<int>(elements.size()) + 1; }

  /// Gap sequence (s_1, s_2 - s_1, ..., n - s_{k-1}); k positive parts.
  std::vector<int> composition() const {
    std::vector<int> parts;
    int prev = 0;
    for (int s : elements) {
      parts.push_back(s - prev);
      prev = s;
    }
    parts.push_back(n - prev);
    return parts;
  }

  /// Letter rank of a value: block i covers s_i < v <= s_{i+1}.
  Letter letter_of_value(int v) const {
    if (v < 1 || v > n) throw std::invalid_argument("letter_of_value: value outside [n]");
    Letter rank = 0;
    for (int s : elements) {
      if (s < v) ++rank;
    }
    return rank;
  }
};

/// Multiset of primitive necklaces, each stored as its Lyndon representative,
/// kept weakly decreasing so that multiset equality is plain equality and the
/// word identification is a concatenation.
class NecklaceMultiset {
 public:
  NecklaceMultiset() = default;

  static NecklaceMultiset from_words(std::vector<Word> words) {
    std::vector<Word> reps;
    reps.reserve(words.size());
    for (Word& w : words) {
      if (!is_primitive(w)) {
        throw std::invalid_argument("necklace multiset: necklace is not primitive");
      }
      reps.push_back(canonical_rotation(w));
    }
    std::sort(reps.begin(), reps.end(),
              [](const Word& a, const Word& b) { return lex_less(b, a); });
    NecklaceMultiset m;
    m.reps_ = std::move(reps);
    return m;
  }

  const std::vector<Word>& representatives() const { return reps_; }

  int total_length() const {
    std::size_t n = 0;
    for (const Word& r : reps_) n += r.size();
    return static_cast<int>(n);
  }

  WeightVector weight(int alphabet_size) const {
    WeightVector counts(static_cast<std::size_t>(alphabet_size), 0);
    for (const Word& r : reps_) {
      for (Letter a : r) {
        if (a < 0 || a >= alphabet_size) {
          throw std::invalid_argument("necklace multiset: letter outside alphabet");
        }
        ++counts[static_cast<std::size_t>(a)];
      }
    }
    return counts;
  }

  friend bool operator==(const NecklaceMultiset&, const NecklaceMultiset&) = default;

 private:
  std::vector<Word> reps_;
};

/// Concatenation of the representatives in weakly decreasing order; this is
/// the word whose Lyndon factorization gives back the multiset.
inline Word multiset_to_word(const NecklaceMultiset& m) {
  Word w;
  for (const Word& r : m.representatives()) {
    w.insert(w.end(), r.begin(), r.end());
  }
  return w;
}

inline NecklaceMultiset multiset_from_word(const Word& w) {
  if (w.empty()) return {};
  return NecklaceMultiset::from_words(lyndon_factorize(w));
}

namespace detail {

inline void require_contained(const std::vector<int>& positions,
                              const SubsetS& s, const char* what) {
  for (int i : positions) {
    if (!std::binary_search(s.elements.begin(), s.elements.end(), i)) {
      throw std::invalid_argument(std::string(what) + " set not contained in S");
    }
  }
}

// Replaces the values along each cycle by their block letters.
inline NecklaceMultiset cycles_to_necklaces(const SubsetS& s, const Permutation& p) {
  std::vector<Word> words;
  for (const auto& cycle : cycles_smallest_first(p)) {
    Word w;
    w.reserve(cycle.size());
    for (int v : cycle) w.push_back(s.letter_of_value(v));
    words.push_back(std::move(w));
  }
  return NecklaceMultiset::from_words(std::move(words));
}

// Ranks every position of every necklace copy by cmp on its periodic label
// (ties between identical labels of repeated necklaces broken by copy index),
// then reads each copy as one cycle of the resulting permutation.
template <typename Compare>
Permutation rank_positions(const SubsetS& s, const NecklaceMultiset& m,
                           Compare&& label_compare) {
  struct Pos {
    Word label;  // rotation starting at this position
    std::size_t copy;
    std::size_t offset;
  };
  std::vector<Pos> positions;
  const auto& reps = m.representatives();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Word rot = reps[c];
    for (std::size_t off = 0; off < reps[c].size(); ++off) {
      positions.push_back(Pos{rot, c, off});
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  std::sort(positions.begin(), positions.end(),
            [&](const Pos& a, const Pos& b) {
              auto cmp = label_compare(a.label, b.label);
              if (cmp != 0) return cmp < 0;
              return a.copy < b.copy;
            });
  std::vector<std::vector<int>> ranks(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    ranks[c].assign(reps[c].size(), 0);
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    ranks[positions[i].copy][positions[i].offset] = static_cast<int>(i) + 1;
  }
  return Permutation::from_cycles(
      std::vector<std::vector<int>>(ranks.begin(), ranks.end()), s.n);
}

inline void require_weight(const SubsetS& s, const NecklaceMultiset& m,
                           const char* who) {
  if (m.total_length() != s.n || m.weight(s.letter_count()) != s.composition()) {
    throw std::invalid_argument(std::string(who) + ": multiset weight does not match S");
  }
}

}  // namespace detail

/// Letter-block map on cycle forms, defined whenever Des(p) is contained in S.
inline NecklaceMultiset phi(const SubsetS& s, const Permutation& p) {
  if (p.size() != s.n) throw std::invalid_argument("phi: size mismatch");
  detail::require_contained(boundary_sets(p).descents, s, "phi: descent");
  return detail::cycles_to_necklaces(s, p);
}

/// Inverse of phi: rank positions by the plain lexicographic order of their
/// periodic labels, breaking label ties by copy index.
inline Permutation phi_inverse(const SubsetS& s, const NecklaceMultiset& m) {
  detail::require_weight(s, m, "phi_inverse");
  return detail::rank_positions(s, m, [](const Word& a, const Word& b) {
    return lex_compare_periodic(a, b);
  });
}

/// Same letter-block map, defined whenever Asc(p) is contained in S. On
/// odd-cycle permutations the image consists of distinct odd necklaces.
inline NecklaceMultiset xi(const SubsetS& s, const Permutation& p) {
  if (p.size() != s.n) throw std::invalid_argument("xi: size mismatch");
  detail::require_contained(boundary_sets(p).ascents, s, "xi: ascent");
  return detail::cycles_to_necklaces(s, p);
}

/// Inverse of xi: rank positions by the alternating lexicographic order of
/// their periodic labels. Requires distinct necklaces of odd length, which
/// rules out ties.
inline Permutation xi_inverse(const SubsetS& s, const NecklaceMultiset& m) {
  detail::require_weight(s, m, "xi_inverse");
  const auto& reps = m.representatives();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].size() % 2 == 0) {
      throw std::invalid_argument("xi_inverse: even necklace present");
    }
    if (i > 0 && reps[i] == reps[i - 1]) {
      throw std::invalid_argument("xi_inverse: repeated necklace");
    }
  }
  return detail::rank_positions(s, m, [](const Word& a, const Word& b) {
    return alt_lex_compare_periodic(a, b);
  });
}

/// "(a,b)(a,b)(a,a,b,c)" rendering in stored (weakly decreasing) order.
inline std::string necklace_text(const NecklaceMultiset& m) {
  std::string out;
  for (const Word& r : m.representatives()) {
    out += '(';
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) out += ',';
      out += to_text(Word{r[i]});
    }
    out += ')';
  }
  return out;
}

inline NecklaceMultiset necklaces_from_text(std::string_view text) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '(') {
      throw std::invalid_argument("necklaces: expected '('");
    }
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("necklaces: unbalanced parenthesis");
    }
    Word w;
    bool expect_letter = true;
    for (std::size_t j = i + 1; j < close; ++j) {
      char c = text[j];
      if (c == ' ') continue;
      if (c == ',') {
        if (expect_letter) throw std::invalid_argument("necklaces: stray comma");
        expect_letter = true;
        continue;
      }
      if (!expect_letter || c < 'a' || c > 'z') {
        throw std::invalid_argument("necklaces: expected a lowercase letter");
      }
      w.push_back(c - 'a');
      expect_letter = false;
    }
    if (w.empty() || expect_letter) {
      throw std::invalid_argument("necklaces: malformed necklace");
    }
    words.push_back(std::move(w));
    i = close + 1;
  }
  if (words.empty()) throw std::invalid_argument("necklaces: empty input");
  return NecklaceMultiset::from_words(std::move(words));
}

}  // namespace oddeven
