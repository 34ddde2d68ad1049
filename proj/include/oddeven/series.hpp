#pragma once

// Truncated multivariate polynomials with exact integer coefficients, and the
// generating-function identities relating Lyndon words of odd and even length
// to the two word classes.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddeven/lyndon.hpp"
#include "oddeven/parity_bijection.hpp"
#include "oddeven/words.hpp"

namespace oddeven {

/// Polynomial in k variables truncated above a total-degree cap. Terms are
/// kept sparsely, keyed by the full exponent vector; coefficients are exact.
class TruncatedPolynomial {
 public:
  using Exponents = std::vector<int>;

  TruncatedPolynomial(int var_count, int degree_cap)
      : var_count_(var_count), degree_cap_(degree_cap) {
    if (var_count < 1 || degree_cap < 0) {
      throw std::invalid_argument("truncated polynomial: bad parameters");
    }
  }

  static TruncatedPolynomial constant(int var_count, int degree_cap,
                                      long long c) {
    TruncatedPolynomial p(var_count, degree_cap);
    if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(var_count), 0)] = c;
    return p;
  }

  static TruncatedPolynomial monomial(int var_count, int degree_cap,
                                      Exponents exponents, long long c = 1) {
    TruncatedPolynomial p(var_count, degree_cap);
    p.add_term(exponents, c);
    return p;
  }

  static TruncatedPolynomial variable(int var_count, int degree_cap, int index) {
    Exponents e(static_cast<std::size_t>(var_count), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(var_count, degree_cap, std::move(e));
  }

  int var_count() const { return var_count_; }
  int degree_cap() const { return degree_cap_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }

  long long coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Exponents& exponents, long long c) {
    if (static_cast<int>(exponents.size()) != var_count_) {
      throw std::invalid_argument("truncated polynomial: wrong exponent arity");
    }
    if (c == 0 || degree(exponents) > degree_cap_) return;
    long long& slot = terms_[exponents];
    slot += c;
    if (slot == 0) terms_.erase(exponents);
  }

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  TruncatedPolynomial& operator-=(const TruncatedPolynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  TruncatedPolynomial& operator*=(const TruncatedPolynomial& rhs) {
    check_compatible(rhs);
    TruncatedPolynomial out(var_count_, degree_cap_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        Exponents e(ea);
        bool fits = true;
        int total = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] += eb[i];
          total += e[i];
        }
        fits = total <= degree_cap_;
        if (fits) out.add_term(e, ca * cb);
      }
    }
    terms_ = std::move(out.terms_);
    return *this;
  }

  friend TruncatedPolynomial operator+(TruncatedPolynomial a,
                                       const TruncatedPolynomial& b) {
    a += b;
    return a;
  }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a,
                                       const TruncatedPolynomial& b) {
    a -= b;
    return a;
  }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a,
                                       const TruncatedPolynomial& b) {
    a *= b;
    return a;
  }

  /// Substitutes -x_i for every variable: each term picks up the sign of its
  /// total degree.
  TruncatedPolynomial negated_variables() const {
    TruncatedPolynomial out(var_count_, degree_cap_);
    for (const auto& [e, c] : terms_) {
      out.add_term(e, degree(e) % 2 == 0 ? c : -c);
    }
    return out;
  }

  /// 1 + m + m^2 + ... truncated, for a monomial m of positive degree; this
  /// is the expansion of 1/(1 - m).
  static TruncatedPolynomial geometric_series(int var_count, int degree_cap,
                                              const Exponents& exponents) {
    int d = degree(exponents);
    if (d < 1) {
      throw std::invalid_argument("geometric series: monomial degree must be >= 1");
    }
    TruncatedPolynomial out = constant(var_count, degree_cap, 1);
    Exponents power(static_cast<std::size_t>(var_count), 0);
    for (int total = d; total <= degree_cap; total += d) {
      for (std::size_t i = 0; i < power.size(); ++i) power[i] += exponents[i];
      out.add_term(power, 1);
    }
    return out;
  }

  static int degree(const Exponents& e) {
    int total = 0;
    for (int x : e) total += x;
    return total;
  }

  friend bool operator==(const TruncatedPolynomial&,
                         const TruncatedPolynomial&) = default;

 private:
  void check_compatible(const TruncatedPolynomial& rhs) const {
    if (rhs.var_count_ != var_count_ || rhs.degree_cap_ != degree_cap_) {
      throw std::invalid_argument("truncated polynomial: mismatched parameters");
    }
  }

  int var_count_;
  int degree_cap_;
  std::map<Exponents, long long> terms_;
};

/// 1 + x_1 + ... + x_k.
inline TruncatedPolynomial one_plus_variables(int var_count, int degree_cap) {
  auto p = TruncatedPolynomial::constant(var_count, degree_cap, 1);
  for (int i = 0; i < var_count; ++i) {
    p += TruncatedPolynomial::variable(var_count, degree_cap, i);
  }
  return p;
}

/// Outcome of checking the factored identity
///   prod over odd Lyndon words (1 + wt) * prod over even (1 - wt)
///     = 1 + x_1 + ... + x_k
/// through total degree D. Lyndon words longer than D cannot touch the
/// compared range, so the product is finite.
struct IdentityReport {
  int var_count = 0;
  int degree_cap = 0;
  TruncatedPolynomial lhs;
  TruncatedPolynomial rhs;
  bool pass = false;
  struct Mismatch {
    std::vector<int> exponents;
    long long lhs_coefficient = 0;
    long long rhs_coefficient = 0;
  };
  std::optional<Mismatch> first_mismatch;
};

inline IdentityReport verify_gf_identity(int var_count, int degree_cap) {
  if (var_count < 1 || degree_cap < 1) {
    throw std::invalid_argument("verify_gf_identity: bad parameters");
  }
  auto lhs = TruncatedPolynomial::constant(var_count, degree_cap, 1);
  for (const Word& ell : lyndon_words_up_to(var_count, degree_cap)) {
    auto wt = weight(ell, var_count);
    std::vector<int> exponents(wt.begin(), wt.end());
    long long sign = ell.size() % 2 == 1 ? 1 : -1;
    auto factor = TruncatedPolynomial::constant(var_count, degree_cap, 1);
    factor.add_term(exponents, sign);
    lhs *= factor;
  }
  auto rhs = one_plus_variables(var_count, degree_cap);
  IdentityReport report{var_count, degree_cap, lhs, rhs, lhs == rhs, {}};
  if (!report.pass) {
    // find the smallest exponent vector where the two sides differ
    auto it = lhs.terms().begin();
    auto jt = rhs.terms().begin();
    while (it != lhs.terms().end() || jt != rhs.terms().end()) {
      if (jt == rhs.terms().end() ||
          (it != lhs.terms().end() && it->first < jt->first)) {
        report.first_mismatch = {it->first, it->second, rhs.coefficient(it->first)};
        break;
      }
      if (it == lhs.terms().end() || jt->first < it->first) {
        report.first_mismatch = {jt->first, lhs.coefficient(jt->first), jt->second};
        break;
      }
      if (it->second != jt->second) {
        report.first_mismatch = {it->first, it->second, jt->second};
        break;
      }
      ++it;
      ++jt;
    }
  }
  return report;
}

inline std::string render(const IdentityReport& r) {
  std::string out = "gf identity: k=" + std::to_string(r.var_count) +
                    " degree=" + std::to_string(r.degree_cap) + "\n";
  out += "lhs = prod(odd: 1+wt) * prod(even: 1-wt), rhs = 1 + sum(x_i)\n";
  if (r.pass) {
    out += "RESULT: PASS\n";
  } else {
    out += "first mismatch at exponents (";
    for (std::size_t i = 0; i < r.first_mismatch->exponents.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(r.first_mismatch->exponents[i]);
    }
    out += "): lhs=" + std::to_string(r.first_mismatch->lhs_coefficient) +
           " rhs=" + std::to_string(r.first_mismatch->rhs_coefficient) + "\n";
    out += "RESULT: FAIL\n";
  }
  return out;
}

/// Brute-force census of the two word classes: for every word of the given
/// length, bucket its weight vector. A single letter lands in both maps.
struct WordClassCounts {
  std::map<WeightVector, long long> odd_distinct;
  std::map<WeightVector, long long> even_up_to_singleton;
};

inline WordClassCounts count_word_classes(int alphabet_size, int length) {
  if (alphabet_size < 1 || length < 0) {
    throw std::invalid_argument("count_word_classes: bad parameters");
  }
  double cost = 1;
  for (int i = 0; i < length; ++i) cost *= alphabet_size;
  if (cost > 2e7) {
    throw std::invalid_argument("count_word_classes: budget exceeded");
  }
  WordClassCounts counts;
  for_each_word(alphabet_size, length, [&](const Word& w) {
    WordClass c = classify_word(w);
    if (c == WordClass::kOddDistinct || c == WordClass::kBoth) {
      ++counts.odd_distinct[weight(w, alphabet_size)];
    }
    if (c == WordClass::kEvenUpToSingleton || c == WordClass::kBoth) {
      ++counts.even_up_to_singleton[weight(w, alphabet_size)];
    }
  });
  return counts;
}

}  // namespace oddeven
