#pragma once

#include <optional>
#include <string>

#include "chirality/cert/certificate.hpp"
#include "chirality/exact/matrix.hpp"
#include "chirality/exact/polynomial.hpp"

namespace chirality::torus {

using exact::IntMatrix;
using exact::IntPolynomial;

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct BinaryQuadraticForm {
  mpz_class a, b, c;

  mpz_class discriminant() const { return b * b - 4 * a * c; }
  bool negative_definite() const { return a < 0 && discriminant() < 0; }
  bool positive_definite() const { return a > 0 && discriminant() < 0; }
  mpz_class operator()(const mpz_class& x, const mpz_class& y) const { return a * x * x + b * x * y + c * y * y; }
  /// Gauss-reduced representative of a definite form (|b| <= a <= c, and
  /// b >= 0 when |b| = a or a = c); a negative definite form is reduced
  /// through its negation. Throws for indefinite or degenerate forms.
  BinaryQuadraticForm reduced() const;
  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// Bounded search for an integer G solving an intertwining equation with a
/// prescribed determinant. The search walks the exact solution lattice, so
/// it sees precisely the solutions whose entries lie in [-bound, bound].
struct FalsifierResult {
  std::uint64_t bound = 0;
  std::uint64_t solutions_examined = 0;
  /// Lexicographically first (row-major) counterexample, if any.
  std::optional<IntMatrix> counterexample;

  Json to_json() const;
};

struct ConditionA {
  Verdict verdict = Verdict::Fail;
  mpz_class det_f_minus_identity;
};

struct ConditionB {
  Verdict verdict = Verdict::Inconclusive;
  bool squarefree = false;
  std::optional<std::size_t> real_root_count;
  FalsifierResult falsifier;
};

struct ConditionC {
  Verdict verdict = Verdict::Inconclusive;
  IntPolynomial reciprocal;
  bool palindromic = false;
  std::string route;
  /// Filled in the palindromic case.
  std::optional<std::vector<IntMatrix>> lattice;
  std::optional<BinaryQuadraticForm> determinant_form;
  FalsifierResult falsifier;
};

struct MappingTorusCertificate {
  std::size_t n = 0;
  IntMatrix f;
  IntPolynomial char_poly;
  mpz_class det_f;
  ConditionA condition_a;
  ConditionB condition_b;
  ConditionC condition_c;
  std::string rationale;

  Verdict verdict() const;
};

/// Companion matrix of X^n - X + 1 (n even, n >= 2); determinant 1.
IntMatrix build_family_matrix(std::size_t n);

/// det(F - I) = +-1.
ConditionA certify_condition_a(const IntMatrix& f);

/// No G in GL(n,Z) with FG = GF and det G = -1. PASS when char_poly(F) is
/// squarefree with no real roots: every rational polynomial in F then has
/// determinant prod |p(lambda)|^2 >= 0. FAIL only on an explicit
/// counterexample; otherwise INCONCLUSIVE.
ConditionB certify_condition_b(const IntMatrix& f, std::uint64_t brute_bound,
                               const exact::ProgressHook& progress = {});

/// No G in SL(n,Z) with F^{-1} G = G F. PASS when the characteristic
/// polynomial differs from its reciprocal, when no nonzero intertwiner
/// exists, or (n = 2) when det restricted to the rank-2 intertwiner lattice
/// is a negative definite form. Throws std::domain_error unless det F = +-1.
ConditionC certify_condition_c(const IntMatrix& f, std::uint64_t brute_bound,
                               const exact::ProgressHook& progress = {});

/// Builds the family matrix for n and runs all three conditions.
MappingTorusCertificate certify_mapping_torus(std::size_t n, std::uint64_t brute_bound,
                                              const exact::ProgressHook& progress = {});

/// Default falsifier bound used by the CLI and planner when none is given.
std::uint64_t default_brute_bound(std::size_t n);

Certificate to_certificate(const MappingTorusCertificate& cert);

}  // namespace chirality::torus
