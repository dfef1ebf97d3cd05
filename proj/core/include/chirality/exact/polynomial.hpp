#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace chirality::exact {

/// Dense univariate polynomial with exact coefficients.
///
/// Coefficients are stored in ascending order of exponent with trailing
/// zeros trimmed, so the zero polynomial has an empty coefficient vector and
/// `degree()` is the index of the last stored coefficient.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coefficients)
      : coefficients_(coefficients) {
    trim();
  }

  static Polynomial monomial(const Coeff& c, std::size_t exponent) {
    std::vector<Coeff> v(exponent + 1, Coeff(0));
    v[exponent] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial constant(const Coeff& c) { return Polynomial({c}); }

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return coefficients_; }
  Coeff coeff(std::size_t exponent) const {
    return exponent < coefficients_.size() ? coefficients_[exponent] : Coeff(0);
  }
  /// Requires a nonzero polynomial.
  const Coeff& leading() const { return coefficients_.back(); }

  Coeff operator()(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Coeff> v = coefficients_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> v(std::max(a.coefficients_.size(), b.coefficients_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) v[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) v[i] += b.coefficients_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coefficients_.size() + b.coefficients_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      if (a.coefficients_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        v[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    std::vector<Coeff> v = p.coefficients_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  /// Human-readable form in descending powers, e.g. "X^4 - X + 1".
  std::string to_string(char variable = 'X') const;

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Coeff> coefficients_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p) {
  std::vector<Coeff> v;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    v.push_back(Coeff(static_cast<unsigned long>(i)) * p.coefficients()[i]);
  }
  return Polynomial<Coeff>(std::move(v));
}

RatPolynomial to_rational(const IntPolynomial& p);

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// True iff gcd(p, p') is constant over Q. Throws on the zero polynomial.
bool poly_is_squarefree(const IntPolynomial& p);

/// Number of distinct real roots, from sign variations of the Sturm chain at
/// -inf and +inf. Throws on zero or non-squarefree input.
std::size_t sturm_real_root_count(const IntPolynomial& p);

/// The Sturm chain p, p', -rem(...), ... used by `sturm_real_root_count`.
std::vector<RatPolynomial> sturm_chain(const IntPolynomial& p);

/// X^deg p * p(1/X), negated if needed so its leading sign matches p's.
/// Throws when p(0) = 0.
IntPolynomial reciprocal_poly(const IntPolynomial& p);

}  // namespace chirality::exact
