#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chirality::dga {

/// Exponent vector over the generators of an algebra; odd-degree generators
/// carry exponent 0 or 1. A monomial stands for the product of its
/// generators in index order, e.g. a*A*beta.
using Monomial = std::vector<unsigned>;

/// Canonical term order: larger exponents on earlier generators come first,
/// so the degree-2 part of a*b*c lists as a, b, c.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const { return y < x; }
};

/// Sparse rational combination of monomials (no zero coefficients stored).
class AlgElement {
 public:
  using Terms = std::map<Monomial, mpq_class, MonomialOrder>;

  AlgElement() = default;
  explicit AlgElement(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(const Monomial& m) const;

  /// Adds c * m; drops the term if the sum vanishes.
  void add_term(const Monomial& m, const mpq_class& c);

  AlgElement operator-() const;
  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const mpq_class& s, const AlgElement& x);
  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void require_arity(const AlgElement& o) const;

  std::size_t arity_ = 0;
  Terms terms_;
};

struct Generator {
  std::string name;
  unsigned degree = 1;
};

/// Free graded-commutative algebra over Q with a differential, Koszul signs:
/// x*y = (-1)^(|x||y|) y*x and d(xy) = dx*y + (-1)^|x| x*dy.
class GcAlgebra {
 public:
  /// Differential zero on every generator until set.
  explicit GcAlgebra(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t index_of(std::string_view name) const;
  bool is_odd(std::size_t i) const { return generators_[i].degree % 2 == 1; }

  void set_differential(std::size_t generator, AlgElement image);
  const AlgElement& generator_differential(std::size_t i) const { return differentials_[i]; }

  /// Throws std::invalid_argument unless every d(g) is homogeneous of
  /// degree |g| + 1 and d(d(g)) = 0.
  void validate() const;

  AlgElement zero() const { return AlgElement(size()); }
  AlgElement one() const;
  AlgElement generator(std::size_t i) const;
  AlgElement generator(std::string_view name) const { return generator(index_of(name)); }
  AlgElement scalar(const mpq_class& c) const;
  AlgElement monomial(const Monomial& m) const;

  unsigned degree(const Monomial& m) const;
  /// Degree of a nonzero homogeneous element; throws on mixed degrees or 0.
  unsigned degree(const AlgElement& x) const;
  bool is_homogeneous(const AlgElement& x) const;

  AlgElement multiply(const AlgElement& x, const AlgElement& y) const;
  AlgElement power(const AlgElement& x, unsigned e) const;
  AlgElement differential(const AlgElement& x) const;

  /// All monomials of the given total degree, in MonomialOrder.
  std::vector<Monomial> basis(unsigned degree) const;

  /// Polynomial expression over the generator names with + - * ^, rational
  /// constants and parentheses, e.g. "2*a*A - b*B" or "(2*a*A - b*B)*beta".
  AlgElement parse(std::string_view expression) const;
  /// "2*a*A - b*B"; "0" for zero.
  std::string to_string(const AlgElement& x) const;
  std::string to_string(const Monomial& m) const;

 private:
  void require_member(const AlgElement& x) const;
  /// Product of two monomials with its Koszul sign; sign 0 when it vanishes.
  int multiply_monomials(const Monomial& x, const Monomial& y, Monomial& out) const;

  std::vector<Generator> generators_;
  std::vector<AlgElement> differentials_;
};

/// Algebra from a line-oriented description:
///   gen a 2
///   gen A 3
///   d A = b*c
/// Blank lines and lines starting with '#' are ignored. The result is
/// validated; malformed text throws std::invalid_argument.
GcAlgebra parse_algebra(std::string_view text);

/// Exact span of a set of homogeneous elements, kept in sparse echelon form
/// keyed by leading monomial. Reduction yields the unique remainder free of
/// pivot monomials, so x lies in the span iff reduce(x) is zero.
class SpanReducer {
 public:
  explicit SpanReducer(std::size_t arity) : arity_(arity) {}
  /// Returns false when v already lies in the span.
  bool insert(AlgElement v);
  AlgElement reduce(AlgElement v) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t arity_;
  std::map<Monomial, AlgElement, MonomialOrder> pivots_;
};

/// Span of d(basis(degree - 1)); reducing a closed element of `degree`
/// modulo it decides exactness.
SpanReducer boundaries(const GcAlgebra& alg, unsigned degree);

}  // namespace chirality::dga
