#include "chirality/exact/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace chirality::exact {

template <class Coeff>
std::string Polynomial<Coeff>::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Coeff c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) {
      out << c;
      if (i > 0) out << "*";
    }
    if (i >= 1) out << variable;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

template class Polynomial<mpz_class>;
template class Polynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1), mpq_class(0));
  const mpq_class& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const mpq_class q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const mpq_class lead = a.leading();
  return mpq_class(1) / lead * a;
}

bool poly_is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("poly_is_squarefree: zero polynomial");
  const RatPolynomial q = to_rational(p);
  return gcd(q, derivative(q)).degree() <= 0;
}

std::vector<RatPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<RatPolynomial> chain;
  chain.push_back(to_rational(p));
  RatPolynomial next = derivative(chain.back());
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -divmod(chain[chain.size() - 2], chain.back()).second;
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::size_t sturm_real_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
  if (!poly_is_squarefree(p)) {
    throw std::invalid_argument("sturm_real_root_count: polynomial is not squarefree");
  }
  const auto chain = sturm_chain(p);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& q : chain) {
    const int s = sgn(q.leading());
    at_pos_inf.push_back(s);
    at_neg_inf.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return static_cast<std::size_t>(sign_variations(at_neg_inf) - sign_variations(at_pos_inf));
}

IntPolynomial reciprocal_poly(const IntPolynomial& p) {
  if (p.is_zero() || p.coeff(0) == 0) {
    throw std::invalid_argument("reciprocal_poly: constant term must be nonzero");
  }
  std::vector<mpz_class> v(p.coefficients().rbegin(), p.coefficients().rend());
  IntPolynomial r(std::move(v));
  if (sgn(r.leading()) != sgn(p.leading())) r = -r;
  return r;
}

}  // namespace chirality::exact
