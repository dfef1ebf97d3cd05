#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chirality/cert/certificate.hpp"
#include "chirality/exact/number_theory.hpp"

namespace chirality::lens {

/// L_t(q_1, ..., q_n): quotient of S^(2n-1) by Z/t, of dimension 2n - 1.
class LensSpace {
 public:
  /// Throws std::invalid_argument unless t >= 2, n >= 1 and every q_i is a
  /// unit mod t. Parameters are stored reduced into [0, t).
  LensSpace(std::uint64_t t, std::vector<std::uint64_t> params);

  std::uint64_t t() const { return t_; }
  const std::vector<std::uint64_t>& params() const { return params_; }
  std::size_t n() const { return params_.size(); }
  std::size_t dimension() const { return 2 * params_.size() - 1; }
  /// "L_7(1,1)"
  std::string to_string() const;

 private:
  std::uint64_t t_;
  std::vector<std::uint64_t> params_;
};

/// Realizable self-map degrees mod t: {e^n mod t}, each mapped to the
/// smallest e in [0, t) producing it.
std::map<std::uint64_t, std::uint64_t> degree_set(const LensSpace& l);

struct ChiralityResult {
  bool strongly_chiral = false;
  /// Smallest e with e^n = -1 mod t when a degree -1 self-map exists.
  std::optional<std::uint64_t> witness;
};

/// Degree -1 test over all of Z/t. Throws for t <= 2.
ChiralityResult is_strongly_chiral(const LensSpace& l);

struct LinkingEvidence {
  /// PASS when -1 is not a square mod t, NO_OBSTRUCTION otherwise.
  Verdict verdict = Verdict::NoObstruction;
  std::uint64_t t = 0;
  std::size_t dimension = 0;
  exact::QuadraticResidueAnswer residue;
};

/// Linking-form test for a (4k-1)-manifold whose middle torsion is Z/t.
/// Throws std::invalid_argument unless dim = 3 mod 4 and t >= 2.
LinkingEvidence linking_obstruction(std::uint64_t t, std::size_t dim);

struct OrderEvidence {
  Verdict verdict = Verdict::Pass;
  std::uint64_t m = 0;
  /// Number of e in Z/t with e^m = 1.
  std::uint64_t candidates = 0;
  /// Smallest e with e^m = 1 and e^n = -1, when one exists.
  std::optional<std::uint64_t> witness;
  /// True when m divides n, in which case e^n = (e^m)^(n/m) = 1 != -1.
  bool divides_n = false;
};

/// Certifies that no self-map of degree -1 has order dividing m, by
/// sweeping every e with e^m = 1 mod t. Throws for t <= 2 or m = 0.
OrderEvidence no_reversal_of_order(const LensSpace& l, std::uint64_t m);

/// Thrown when the progression holds no suitable prime below the limit.
struct NoPrimeFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MinimalOrderCertificate {
  unsigned k = 0;
  std::uint64_t p = 0;
  std::uint64_t l = 0;  // p - 1 = 2^k * l, l odd
  std::uint64_t c = 0;  // smallest primitive root mod p
  std::uint64_t n = 0;  // (p - 1) / 2
  std::vector<Check> checks;
  std::string claim;

  Verdict verdict() const;
};

struct MinimalOrderConstruction {
  MinimalOrderCertificate certificate;
  LensSpace lens;
};

/// Smallest prime p >= 5 in the progression m * 2^k + 1 (m odd, p <= search
/// limit) and the lens space L_p(c, c^2, ..., c^n) with c a primitive root,
/// which carries an orientation-reversing diffeomorphism of order 2^k and
/// none of smaller order. Throws NoPrimeFound.
MinimalOrderConstruction theoremc_construct(unsigned k, std::uint64_t search_limit = 1'000'000);

Certificate to_certificate(const LensSpace& l, const ChiralityResult& r);
Certificate to_certificate(const MinimalOrderConstruction& c);

}  // namespace chirality::lens
