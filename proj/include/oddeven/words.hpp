#pragma once

// Words over a ranked alphabet, letter-count weights, and the two orders the
// rest of the library is built on: the lexicographic order and the
// alternating lexicographic order on periodic sequences.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oddeven {

/// A letter is its rank in the alphabet: 0, 1, ..., k-1.
using Letter = int;

/// A finite, possibly empty sequence of letter ranks.
using Word = std::vector<Letter>;

/// Occurrence counts per letter; entry i counts the letter of rank i.
using WeightVector = std::vector<int>;

/// Totally ordered alphabet of k letters. Ranks are the real identity of
/// letters; the textual view maps rank i to the (i+1)-th lowercase letter and
/// only exists for k <= 26.
struct Alphabet {
  int size;

  explicit Alphabet(int k) : size(k) {
    if (k < 1) throw std::invalid_argument("alphabet: size must be >= 1");
  }

  bool contains(Letter a) const { return 0 <= a && a < size; }
};

/// Comparand strictly greater than every word. A separate variant rather than
/// a sentinel word, so it can never collide with a real word.
struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

using WordOrInf = std::variant<Word, Infinity>;

inline bool is_infinite(const WordOrInf& w) {
  return std::holds_alternative<Infinity>(w);
}

inline const Word& as_word(const WordOrInf& w) { return std::get<Word>(w); }

/// Lexicographic order; a proper prefix precedes its extensions.
inline std::strong_ordering lex_compare(const Word& u, const Word& v) {
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                v.end());
}

inline std::strong_ordering lex_compare(const WordOrInf& u,
                                        const WordOrInf& v) {
  if (is_infinite(u)) {
    return is_infinite(v) ? std::strong_ordering::equal
                          : std::strong_ordering::greater;
  }
  if (is_infinite(v)) return std::strong_ordering::less;
  return lex_compare(as_word(u), as_word(v));
}

inline bool lex_less(const Word& u, const Word& v) {
  return lex_compare(u, v) < 0;
}
inline bool lex_leq(const Word& u, const Word& v) {
  return lex_compare(u, v) <= 0;
}
inline bool lex_less(const WordOrInf& u, const WordOrInf& v) {
  return lex_compare(u, v) < 0;
}
inline bool lex_leq(const WordOrInf& u, const WordOrInf& v) {
  return lex_compare(u, v) <= 0;
}

namespace detail {

// First 0-based index at which the periodic expansions uuu... and vvv...
// differ, scanning at most `window` characters; -1 if they agree throughout.
inline long first_periodic_difference(const Word& u, const Word& v,
                                      std::size_t window) {
  for (std::size_t i = 0; i < window; ++i) {
    Letter cu = u[i % u.size()];
    Letter cv = v[i % v.size()];
    if (cu != cv) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace detail

/// Lexicographic order of the infinite expansions uuu... and vvv....
/// A window of |u|+|v| characters decides: two periodic sequences with
/// periods |u| and |v| that agree that long are identical (Fine-Wilf bound).
inline std::strong_ordering lex_compare_periodic(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) {
    throw std::invalid_argument("lex_compare_periodic: empty word");
  }
  long i = detail::first_periodic_difference(u, v, u.size() + v.size());
  if (i < 0) return std::strong_ordering::equal;
  return u[i % u.size()] <=> v[i % v.size()];
}

/// Alternating lexicographic order of the infinite expansions: at the first
/// differing position the letter comparison counts directly when the
/// (1-based) position is odd and reversed when it is even.
inline std::strong_ordering alt_lex_compare_periodic(const Word& u,
                                                     const Word& v) {
  if (u.empty() || v.empty()) {
    throw std::invalid_argument("alt_lex_compare_periodic: empty word");
  }
  long i = detail::first_periodic_difference(u, v, u.size() + v.size());
  if (i < 0) return std::strong_ordering::equal;
  auto direct = u[i % u.size()] <=> v[i % v.size()];
  return i % 2 == 0 ? direct : (0 <=> direct);
}

/// Letter counts of w over an alphabet of the given size.
inline WeightVector weight(const Word& w, int alphabet_size) {
  if (alphabet_size < 1) {
    throw std::invalid_argument("weight: alphabet size must be >= 1");
  }
  WeightVector counts(static_cast<std::size_t>(alphabet_size), 0);
  for (Letter a : w) {
    if (a < 0 || a >= alphabet_size) {
      throw std::invalid_argument("weight: letter outside alphabet");
    }
    ++counts[static_cast<std::size_t>(a)];
  }
  return counts;
}

/// Smallest alphabet size containing every letter of w; at least 1.
inline int inferred_alphabet_size(const Word& w) {
  int k = 1;
  for (Letter a : w) k = std::max(k, a + 1);
  return k;
}

/// Textual word format: contiguous lowercase letters, "-" for the empty word.
inline std::string to_text(const Word& w) {
  if (w.empty()) return "-";
  std::string s;
  s.reserve(w.size());
  for (Letter a : w) {
    if (a < 0 || a >= 26) {
      throw std::domain_error("to_text: textual rendering requires ranks < 26");
    }
    s.push_back(static_cast<char>('a' + a));
  }
  return s;
}

inline Word word_from_text(std::string_view text, int alphabet_size = 26) {
  if (alphabet_size < 1 || alphabet_size > 26) {
    throw std::invalid_argument("word_from_text: alphabet size must be in 1..26");
  }
  if (text == "-") return {};
  if (text.empty()) {
    throw std::invalid_argument("word_from_text: empty input (use \"-\" for the empty word)");
  }
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument("word_from_text: expected lowercase letters");
    }
    Letter a = c - 'a';
    if (a >= alphabet_size) {
      throw std::invalid_argument("word_from_text: letter outside alphabet");
    }
    w.push_back(a);
  }
  return w;
}

/// Calls fn with every word of the given length over the first
/// `alphabet_size` letters, in lexicographic order.
template <typename Fn>
void for_each_word(int alphabet_size, int length, Fn&& fn) {
  if (alphabet_size < 1 || length < 0) {
    throw std::invalid_argument("for_each_word: bad parameters");
  }
  Word w(static_cast<std::size_t>(length), 0);
  while (true) {
    fn(static_cast<const Word&>(w));
    int i = length - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == alphabet_size - 1) {
      w[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
}

}  // namespace oddeven
