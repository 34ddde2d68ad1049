#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oddeven/lyndon.hpp"
#include "oddeven/words.hpp"

using namespace oddeven;

namespace {

std::vector<Word> words_of_exact_length(int k, int n) {
  std::vector<Word> out;
  for_each_word(k, n, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> lyndon_pool(int k, int max_len) {
  return lyndon_words_up_to(k, max_len);
}

std::vector<Word> factorize_text(const char* text) {
  return lyndon_factorize(word_from_text(text));
}

}  // namespace

TEST_CASE("lyndon membership", "[lyndon]") {
  CHECK(is_lyndon(word_from_text("aabc")));
  CHECK_FALSE(is_lyndon(word_from_text("aa")));
  CHECK(is_lyndon(word_from_text("b")));
  CHECK_FALSE(is_lyndon(Word{}));
  CHECK_FALSE(is_lyndon(word_from_text("ba")));
}

TEST_CASE("factorization examples", "[lyndon]") {
  CHECK(factorize_text("dadccdbccc") ==
        std::vector<Word>{word_from_text("d"), word_from_text("adccdbccc")});
  CHECK(factorize_text("cdcdadbccc") ==
        std::vector<Word>{word_from_text("cd"), word_from_text("cd"),
                          word_from_text("adbccc")});
  CHECK(factorize_text("aaa") ==
        std::vector<Word>{word_from_text("a"), word_from_text("a"),
                          word_from_text("a")});
  CHECK_THROWS_AS(lyndon_factorize(Word{}), std::invalid_argument);
}

TEST_CASE("suffix minima route", "[lyndon]") {
  CHECK(suffix_minima_factor_starts(word_from_text("dadccdbccc")) ==
        std::vector<std::size_t>{0, 1});
  CHECK(suffix_minima_factor_starts(word_from_text("abc")) ==
        std::vector<std::size_t>{0});
  CHECK(suffix_minima_factor_starts(word_from_text("cba")) ==
        std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(suffix_minima_factor_starts(Word{}), std::invalid_argument);
}

TEST_CASE("factorization invariants hold exhaustively", "[lyndon]") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 10; ++n) {
      for (const Word& w : words_of_exact_length(k, n)) {
        auto factors = lyndon_factorize(w);
        Word glued;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          REQUIRE(is_lyndon(factors[i]));
          if (i > 0) REQUIRE(lex_leq(factors[i], factors[i - 1]));
          glued.insert(glued.end(), factors[i].begin(), factors[i].end());
        }
        REQUIRE(glued == w);
        REQUIRE(lyndon_factor_starts(w) == suffix_minima_factor_starts(w));
      }
    }
  }
}

TEST_CASE("standard factorization examples", "[lyndon]") {
  auto sf = standard_factorization(word_from_text("adccdbccc"));
  CHECK(sf.prefix == word_from_text("adccd"));
  CHECK(sf.suffix == word_from_text("bccc"));
  sf = standard_factorization(word_from_text("abacabc"));
  CHECK(sf.prefix == word_from_text("abac"));
  CHECK(sf.suffix == word_from_text("abc"));
  sf = standard_factorization(word_from_text("ab"));
  CHECK(sf.prefix == word_from_text("a"));
  CHECK(sf.suffix == word_from_text("b"));
  CHECK_THROWS_AS(standard_factorization(word_from_text("a")), std::invalid_argument);
  CHECK_THROWS_AS(standard_factorization(word_from_text("ba")), std::invalid_argument);
  CHECK(render_standard_factorization(word_from_text("adccdbccc")) == "adccd!bccc");
}

TEST_CASE("standard factorization properties", "[lyndon]") {
  auto check_pool = [](int k, int max_len) {
    for (const Word& ell : lyndon_pool(k, max_len)) {
      if (ell.size() < 2) continue;
      auto sf = standard_factorization(ell);
      REQUIRE(is_lyndon(sf.prefix));
      REQUIRE(is_lyndon(sf.suffix));
      REQUIRE(lex_less(sf.prefix, ell));
      REQUIRE(lex_less(ell, sf.suffix));
      // the suffix is simultaneously the smallest proper suffix and the
      // longest proper suffix that is Lyndon
      for (std::size_t p = 1; p < ell.size(); ++p) {
        Word suffix(ell.begin() + static_cast<long>(p), ell.end());
        REQUIRE(lex_leq(sf.suffix, suffix));
        if (is_lyndon(suffix)) REQUIRE(suffix.size() <= sf.suffix.size());
      }
    }
  };
  check_pool(2, 10);
  check_pool(3, 8);
}

TEST_CASE("appending a larger Lyndon word splits at the seam iff within the suffix",
          "[lyndon]") {
  auto pool = lyndon_pool(3, 6);
  for (const Word& ell : pool) {
    if (ell.size() < 2) continue;
    Word s = standard_factorization(ell).suffix;
    for (const Word& t : pool) {
      if (ell.size() + t.size() > 8 || !lex_less(ell, t)) continue;
      Word glued = ell;
      glued.insert(glued.end(), t.begin(), t.end());
      REQUIRE(is_lyndon(glued));
      auto sf = standard_factorization(glued);
      bool seam = sf.prefix == ell && sf.suffix == t;
      REQUIRE(seam == lex_leq(t, s));
    }
  }
}

TEST_CASE("products below a Lyndon word stay below it", "[lyndon]") {
  auto check = [](int k, int max_word, int max_ell) {
    std::vector<Word> words;
    for (int n = 1; n <= max_word; ++n) {
      for (const Word& w : words_of_exact_length(k, n)) words.push_back(w);
    }
    for (const Word& ell : lyndon_pool(k, max_ell)) {
      for (const Word& u : words) {
        if (!lex_less(u, ell)) continue;
        for (const Word& v : words) {
          if (!lex_leq(v, ell)) continue;
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          REQUIRE(lex_less(uv, ell));
        }
      }
    }
  };
  check(2, 4, 4);
  check(3, 3, 3);
}

TEST_CASE("iterated standard factorization examples", "[lyndon]") {
  auto d = isf(word_from_text("adbccc"), WordOrInf{word_from_text("ccd")});
  CHECK(render_isf(d) == "a!d!bccc");
  CHECK(d.head == word_from_text("a"));
  CHECK(d.suffixes == std::vector<Word>{word_from_text("d"), word_from_text("bccc")});

  d = isf(word_from_text("ccedcd"), WordOrInf{word_from_text("dde")});
  CHECK(render_isf(d) == "c!ced!cd");

  d = isf(word_from_text("adcdbcdcbcbc"), WordOrInf{word_from_text("c")});
  CHECK(render_isf(d) == "ad!cd!bcdc!bc!bc");

  d = isf(word_from_text("adcdbcdcbcbc"), WordOrInf{Infinity{}});
  CHECK(render_isf(d) == "a!d!cd!bcdc!bc!bc");
}

TEST_CASE("iterated standard factorization error paths", "[lyndon]") {
  CHECK_THROWS_AS(isf(word_from_text("aab"), WordOrInf{word_from_text("b")}),
                  IsfUnderflowError);
  CHECK_THROWS_AS(isf(word_from_text("a"), WordOrInf{Infinity{}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(isf(word_from_text("ba"), WordOrInf{Infinity{}}),
                  std::invalid_argument);
}

TEST_CASE("iterated standard factorization chain inequality", "[lyndon]") {
  auto check = [](int k, int max_ell) {
    std::vector<WordOrInf> refs;
    refs.push_back(WordOrInf{Infinity{}});
    for (int n = 1; n <= 4; ++n) {
      for (const Word& u : words_of_exact_length(k, n)) refs.push_back(WordOrInf{u});
    }
    for (const Word& ell : lyndon_pool(k, max_ell)) {
      if (ell.size() < 2 || ell.size() % 2 == 1) continue;
      for (const WordOrInf& u : refs) {
        auto d = isf(ell, u);
        Word glued = d.head;
        for (const Word& s : d.suffixes) glued.insert(glued.end(), s.begin(), s.end());
        REQUIRE(glued == ell);
        REQUIRE(lex_less(d.head, ell));
        REQUIRE(lex_less(ell, d.suffixes.back()));
        for (std::size_t i = 0; i + 1 < d.suffixes.size(); ++i) {
          REQUIRE(lex_leq(d.suffixes[i + 1], d.suffixes[i]));
        }
        // conditions on the removed suffixes
        for (std::size_t i = 1; i < d.suffixes.size(); ++i) {
          REQUIRE(d.suffixes[i].size() % 2 == 0);
          REQUIRE(lex_less(WordOrInf{d.suffixes[i]}, u));
        }
        REQUIRE((d.suffixes.front().size() % 2 == 1 ||
                 lex_leq(u, WordOrInf{d.suffixes.front()})));
      }
    }
  };
  check(2, 10);
  check(3, 8);
}

TEST_CASE("lyndon word enumeration", "[lyndon]") {
  auto texts = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(to_text(w));
    return out;
  };
  CHECK(texts(lyndon_words_up_to(2, 2)) == std::vector<std::string>{"a", "ab", "b"});
  CHECK(texts(lyndon_words_up_to(1, 5)) == std::vector<std::string>{"a"});
  CHECK(texts(lyndon_words_up_to(2, 3)) ==
        std::vector<std::string>{"a", "aab", "ab", "abb", "b"});

  for (int k = 1; k <= 3; ++k) {
    std::vector<Word> filtered;
    for (int n = 1; n <= 6; ++n) {
      for (const Word& w : words_of_exact_length(k, n)) {
        if (is_lyndon(w)) filtered.push_back(w);
      }
    }
    std::sort(filtered.begin(), filtered.end(), [](const Word& a, const Word& b) {
      return lex_less(a, b);
    });
    REQUIRE(lyndon_words_up_to(k, 6) == filtered);
  }
}

TEST_CASE("factorization rendering", "[lyndon]") {
  CHECK(render_factorization(word_from_text("dadccdbccc")) == "d|adccdbccc");
  CHECK(render_factorization(Word{}) == "-");
  CHECK(render_factorization(word_from_text("aaa")) == "a|a|a");
}
