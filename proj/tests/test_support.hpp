#pragma once

// Shared helpers for the test binaries: permutation enumeration, counting
// helpers, and enumeration of words with a fixed weight vector.

#include <algorithm>
#include <numeric>
#include <vector>

#include "oddeven/permutations.hpp"
#include "oddeven/words.hpp"

namespace testsupport {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  do {
    fn(oddeven::Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
}

inline long long multinomial(const std::vector<int>& parts) {
  long long result = 1;
  long long upper = 1;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      result = result * (upper++) / i;
    }
  }
  return result;
}

/// Calls fn with every word whose weight vector equals `alpha`.
template <typename Fn>
void for_each_word_with_weight(const std::vector<int>& alpha, Fn&& fn) {
  oddeven::Word w;
  for (std::size_t letter = 0; letter < alpha.size(); ++letter) {
    for (int c = 0; c < alpha[letter]; ++c) {
      w.push_back(static_cast<int>(letter));
    }
  }
  std::sort(w.begin(), w.end());
  do {
    fn(static_cast<const oddeven::Word&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace testsupport
