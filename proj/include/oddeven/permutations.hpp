#pragma once

// Permutations of [n]: descent/ascent sets, cycle presentations, the
// odd/even cycle-parity classes, the classical pairing construction between
// them, and the hat transform between cycle form and one-line words.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oddeven {

/// Permutation of [n] = {1, ..., n}, stored in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("permutation: negative size");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  static Permutation from_one_line(std::vector<int> images) {
    std::size_t n = images.size();
    std::vector<char> seen(n + 1, 0);
    for (int v : images) {
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("permutation: not a bijection on [n]");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation(std::move(images));
  }

  /// Builds from a cycle decomposition; the cycles must partition [n].
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 int n) {
    if (n < 0) throw std::invalid_argument("permutation: negative size");
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (const auto& cycle : cycles) {
      if (cycle.empty()) throw std::invalid_argument("permutation: empty cycle");
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i];
        int to = cycle[(i + 1) % cycle.size()];
        if (from < 1 || from > n) {
          throw std::invalid_argument("permutation: cycle entry out of range");
        }
        if (images[static_cast<std::size_t>(from - 1)] != 0) {
          throw std::invalid_argument("permutation: cycles overlap");
        }
        images[static_cast<std::size_t>(from - 1)] = to;
      }
    }
    for (int v : images) {
      if (v == 0) throw std::invalid_argument("permutation: cycles do not cover [n]");
    }
    return from_one_line(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }

  /// Image of i under the permutation, 1 <= i <= n.
  int apply(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& one_line() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// Complementary descent and ascent sets, as sorted positions in [n-1].
struct BoundarySets {
  std::vector<int> descents;
  std::vector<int> ascents;
};

inline BoundarySets boundary_sets(const Permutation& p) {
  BoundarySets b;
  for (int i = 1; i < p.size(); ++i) {
    if (p.apply(i) > p.apply(i + 1)) {
      b.descents.push_back(i);
    } else {
      b.ascents.push_back(i);
    }
  }
  return b;
}

namespace detail {

inline std::vector<std::vector<int>> orbit_cycles(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      cycle.push_back(v);
      seen[static_cast<std::size_t>(v)] = 1;
      v = p.apply(v);
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline void rotate_to_front(std::vector<int>& cycle, int value) {
  auto it = std::find(cycle.begin(), cycle.end(), value);
  std::rotate(cycle.begin(), it, cycle.end());
}

}  // namespace detail

/// Cycle presentation where each cycle starts with its smallest element and
/// cycles are ordered by decreasing first element. This is the presentation
/// the hat transform flattens.
inline std::vector<std::vector<int>> cycles_smallest_first(const Permutation& p) {
  auto cycles = detail::orbit_cycles(p);
  for (auto& c : cycles) {
    detail::rotate_to_front(c, *std::min_element(c.begin(), c.end()));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() > b.front(); });
  return cycles;
}

/// Standard presentation: each cycle starts with its largest element and
/// cycles are ordered by increasing first element.
inline std::vector<std::vector<int>> cycles_largest_first(const Permutation& p) {
  auto cycles = detail::orbit_cycles(p);
  for (auto& c : cycles) {
    detail::rotate_to_front(c, *std::max_element(c.begin(), c.end()));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

/// True iff every cycle has odd length.
inline bool all_cycles_odd(const Permutation& p) {
  for (const auto& c : detail::orbit_cycles(p)) {
    if (c.size() % 2 == 0) return false;
  }
  return true;
}

/// True iff every cycle has even length, except possibly one fixed point.
inline bool even_cycles_up_to_one_fixed_point(const Permutation& p) {
  int odd_cycles = 0;
  for (const auto& c : detail::orbit_cycles(p)) {
    if (c.size() % 2 == 1) {
      if (c.size() != 1) return false;
      ++odd_cycles;
    }
  }
  return odd_cycles <= 1;
}

/// Cycle-parity class. The single fixed point on [1] satisfies both
/// definitions, hence the explicit kBoth value.
enum class CycleParity { kOddCycles, kEvenCycles, kBoth, kNeither };

inline CycleParity classify_parity(const Permutation& p) {
  bool odd = all_cycles_odd(p);
  bool even = even_cycles_up_to_one_fixed_point(p);
  if (odd && even) return CycleParity::kBoth;
  if (odd) return CycleParity::kOddCycles;
  if (even) return CycleParity::kEvenCycles;
  return CycleParity::kNeither;
}

inline std::string_view parity_name(CycleParity c) {
  switch (c) {
    case CycleParity::kOddCycles: return "odd-cycles";
    case CycleParity::kEvenCycles: return "even-cycles";
    case CycleParity::kBoth: return "both";
    case CycleParity::kNeither: return "neither";
  }
  return "?";
}

/// Classical pairing construction for even n: write the (odd-cycle)
/// permutation in standard cycle form C_1, ..., C_{2k}, then move the last
/// element of each C_{2i-1} to the end of C_{2i}. The image has only even
/// cycles.
inline Permutation bona_map(const Permutation& p) {
  if (p.size() % 2 != 0) {
    throw std::invalid_argument("bona_map: defined for even n only");
  }
  if (!all_cycles_odd(p)) {
    throw std::invalid_argument("bona_map: input must have only odd cycles");
  }
  auto cycles = cycles_largest_first(p);
  // n even and all cycle lengths odd forces an even number of cycles.
  for (std::size_t i = 0; i + 1 < cycles.size(); i += 2) {
    cycles[i + 1].push_back(cycles[i].back());
    cycles[i].pop_back();
  }
  std::vector<std::vector<int>> kept;
  for (auto& c : cycles) {
    if (!c.empty()) kept.push_back(std::move(c));
  }
  return Permutation::from_cycles(kept, p.size());
}

/// Hat transform: flatten the smallest-first, decreasing-firsts cycle
/// presentation into a one-line word over [n].
inline std::vector<int> foata_hat(const Permutation& p) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& c : cycles_smallest_first(p)) {
    word.insert(word.end(), c.begin(), c.end());
  }
  return word;
}

/// Inverse of the hat transform: the left-to-right minima of the word mark
/// the cycle starts.
inline Permutation foata_hat_inverse(const std::vector<int>& word) {
  Permutation::from_one_line(word);  // validate it is a word over [n]
  std::vector<std::vector<int>> cycles;
  int running_min = static_cast<int>(word.size()) + 1;
  for (int v : word) {
    if (v < running_min) {
      cycles.emplace_back();
      running_min = v;
    }
    cycles.back().push_back(v);
  }
  return Permutation::from_cycles(cycles, static_cast<int>(word.size()));
}

inline std::string one_line_text(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p.apply(i));
  }
  return out;
}

/// "(3,6)(2,5)(1,4,7,8)" rendering, smallest-first presentation.
inline std::string cycle_text(const Permutation& p) {
  std::string out;
  for (const auto& c : cycles_smallest_first(p)) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

/// Parses either one-line ("4 5 6 7 2 3 8 1") or cycle notation
/// ("(3,6)(2,5)(1,4,7,8)"); cycle notation must partition [n].
inline Permutation permutation_from_text(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    throw std::invalid_argument("permutation: empty input");
  }
  if (text[first] == '(') {
    std::vector<std::vector<int>> cycles;
    int total = 0;
    std::size_t i = first;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '\t') {
        ++i;
        continue;
      }
      if (text[i] != '(') {
        throw std::invalid_argument("permutation: malformed cycle notation");
      }
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw std::invalid_argument("permutation: unbalanced parenthesis");
      }
      std::vector<int> cycle;
      std::string body(text.substr(i + 1, close - i - 1));
      std::istringstream in(body);
      std::string item;
      while (std::getline(in, item, ',')) {
        cycle.push_back(std::stoi(item));
      }
      if (cycle.empty()) {
        throw std::invalid_argument("permutation: empty cycle");
      }
      total += static_cast<int>(cycle.size());
      cycles.push_back(std::move(cycle));
      i = close + 1;
    }
    return Permutation::from_cycles(cycles, total);
  }
  std::vector<int> images;
  std::istringstream in{std::string(text)};
  int v;
  while (in >> v) images.push_back(v);
  if (!in.eof()) {
    throw std::invalid_argument("permutation: malformed one-line notation");
  }
  return Permutation::from_one_line(std::move(images));
}

}  // namespace oddeven
