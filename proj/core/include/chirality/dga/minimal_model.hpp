#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chirality/cert/certificate.hpp"
#include "chirality/dga/algebra.hpp"
#include "chirality/exact/matrix.hpp"

namespace chirality::dga {

using exact::IntMatrix;

/// Q[a,b,c,A,B,C,alpha,beta] with |a|=|b|=|c|=2, |A|=|B|=|C|=3,
/// |alpha|=|beta|=4 and dA = bc, dB = 2ac, dC = 3ab,
/// d alpha = 2aA - bB, d beta = 3aA - cC.
GcAlgebra minimal_model();

/// minimal_model() tensored with Q[x], |x| = 2, dx = 0. Generator order
/// a, b, c, x, A, B, C, alpha, beta, so the degree-2 basis is (a, b, c, x).
GcAlgebra minimal_model_with_x();

/// The description of minimal_model() in the parse_algebra text format.
std::string minimal_model_text();

struct FundamentalClassReport {
  /// (d alpha) beta + epsilon * ABC
  AlgElement representative;
  int epsilon = 0;
  AlgElement d_plus;   // d((d alpha) beta + ABC)
  AlgElement d_minus;  // d((d alpha) beta - ABC)
  std::size_t degree8_basis_size = 0;
  /// Degree-8 basis monomials whose differential has an ABC term.
  std::vector<Monomial> degree8_with_abc;
  std::size_t degree9_boundary_rank = 0;
  bool exact = true;
};

/// Computes the sign making (d alpha) beta + eps * ABC closed and checks
/// that the class is not a boundary. Needs generators named a, b, c, A, B,
/// C, alpha, beta. Throws std::logic_error if neither or both signs close.
FundamentalClassReport fundamental_class(const GcAlgebra& alg);

/// Images of every generator under an algebra endomorphism.
using GeneratorImages = std::vector<AlgElement>;

AlgElement apply(const GcAlgebra& alg, const GeneratorImages& images, const AlgElement& x);

struct Extension {
  /// Empty when the assignment does not extend (a REJECT verdict).
  std::optional<GeneratorImages> images;
  std::string reason;
  /// d(T g) = T(d g) for every generator; only meaningful when extended.
  bool commutes_with_d = false;

  bool extended() const { return images.has_value(); }
};

/// Extends T(g_j) = sum_i base_map(i, j) g_i on the degree-2 generators
/// (columns are images) to the whole algebra, degree by degree, by solving
/// d(T g) = T(d g) with T g in the integer span of the generators of the
/// same degree. REJECT when no rational solution exists or the unique
/// solution is not integral. Throws std::domain_error when d is not
/// injective on some generator degree (the extension would not be unique)
/// or a degree-2 generator is not closed.
Extension extend_automorphism(const GcAlgebra& alg, const IntMatrix& base_map);

/// Quadratic transgression images over a polynomial base.
struct TransgressionData {
  std::vector<std::string> base;   // degree-2 variables, e.g. a, b, c
  std::vector<std::string> fibre;  // e.g. A, B, C
  /// images[v][(i, j)] with i <= j: coefficient of base_i * base_j in tau(v).
  std::vector<std::map<std::pair<std::size_t, std::size_t>, mpz_class>> images;

  /// A -> bc, B -> 2ac, C -> 3ab, over (a, b, c) or (a, b, c, x).
  static TransgressionData standard(bool with_x = false);
  /// Read off from the differentials of the degree-3 generators, which must
  /// be integral quadratic polynomials in the degree-2 generators.
  static TransgressionData from_algebra(const GcAlgebra& alg);

  /// Coordinates over the monomials base_i*base_j (i <= j, row-major).
  std::vector<mpz_class> coordinates(std::size_t v) const;
  /// Hermite basis of the integer span of all tau(v).
  IntMatrix image_lattice() const;
  std::string image_to_string(const std::map<std::pair<std::size_t, std::size_t>, mpz_class>& q) const;
};

/// tau(v) after substituting T(base_j) = sum_i m(i, j) base_i.
std::map<std::pair<std::size_t, std::size_t>, mpz_class> transformed_image(const IntMatrix& m,
                                                                           const TransgressionData& tau,
                                                                           std::size_t v);

/// True iff T tau(v) lies in the integer span of the tau images for every
/// fibre generator v. Throws std::invalid_argument unless m is square of the
/// base size and unimodular.
bool admissible_h2_matrix(const IntMatrix& m, const TransgressionData& tau);

/// All k! 2^k signed permutation matrices, in a fixed order.
std::vector<IntMatrix> signed_permutation_matrices(std::size_t k);
std::vector<IntMatrix> enumerate_admissible_signed_permutations(const TransgressionData& tau);
std::vector<IntMatrix> diagonal_sign_matrices(std::size_t k);
bool is_diagonal(const IntMatrix& m);

struct UnimodularSweep {
  int bound = 0;
  std::uint64_t examined = 0;
  std::uint64_t unimodular = 0;
  std::vector<IntMatrix> admissible;
  std::vector<IntMatrix> non_diagonal_admissible;
};

/// Every 3x3 integer matrix with entries in [-bound, bound] and det +-1,
/// tested for admissibility. Requires a 3-variable base.
UnimodularSweep sweep_unimodular(const TransgressionData& tau, int bound, const exact::ProgressHook& progress = {});

/// T(z) - z is a boundary. Throws std::invalid_argument if z is not closed.
bool class_fixed_under(const GcAlgebra& alg, const GeneratorImages& images, const AlgElement& z);

struct SignAutomorphismResult {
  IntMatrix base_map;
  bool extended = false;
  bool fixed = false;
  GeneratorImages images;
};

struct Dim9Report {
  bool d_squared_zero = false;
  FundamentalClassReport fundamental;
  std::vector<SignAutomorphismResult> sign_automorphisms;
  std::size_t signed_permutations = 0;
  std::vector<IntMatrix> admissible_signed_permutations;
  std::optional<UnimodularSweep> sweep;
  TransgressionData tau;
};

/// Runs every degree-9 check on `alg` (default: the built-in model). The
/// unimodular sweep is skipped when sweep_bound is 0 or the base is not
/// 3-dimensional.
Dim9Report verify_dim9(const GcAlgebra& alg, int sweep_bound = 2, const exact::ProgressHook& progress = {});

struct Dim13Report {
  int star_bound = 0;
  std::uint64_t samples = 0;
  std::uint64_t inadmissible = 0;
  std::uint64_t extension_failures = 0;
  std::uint64_t fixed = 0;     // coefficient +1
  std::uint64_t reversed = 0;  // coefficient -1
  std::uint64_t other = 0;
  /// Samples where T(w) has components with x-degree != 2 that are not
  /// boundaries (recorded; they do not affect the coefficient).
  std::uint64_t mixed_components = 0;
  std::optional<IntMatrix> first_bad_sample;
  std::uint64_t deviations_tested = 0;
  std::uint64_t deviations_rejected = 0;
  AlgElement representative;  // ((d alpha) beta + eps ABC) x^2

  bool passed() const;
};

/// For every matrix with diagonal +-1 entries, integer stars in [-S, S] in
/// the last column above the diagonal and zeros elsewhere, extends the
/// automorphism of minimal_model_with_x() and compares the image of
/// w = z x^2 with w modulo boundaries (x-degree 2 component). Also checks
/// that matrices mixing x into the images of a, b, c are inadmissible.
Dim13Report dim13_check(int star_bound, const exact::ProgressHook& progress = {});

Certificate to_certificate(const Dim9Report& r, const std::string& algebra_source);
Certificate to_certificate(const Dim13Report& r);

/// Unimodularity, admissibility, extension and class-fixing checks for one
/// H^2 matrix on `alg`. Throws std::invalid_argument on a size mismatch.
Certificate admissibility_certificate(const GcAlgebra& alg, const IntMatrix& m);

}  // namespace chirality::dga
