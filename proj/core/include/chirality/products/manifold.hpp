#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chirality/cert/certificate.hpp"

namespace chirality::products {

/// STRONGLY_CHIRAL: no self-map of degree -1. WEAKLY_AMPHICHEIRAL: some
/// self-map of degree -1 exists. AMPHICHEIRAL: an orientation-reversing
/// self-diffeomorphism exists (implies the weak form).
enum class Chirality { StronglyChiral, WeaklyAmphicheiral, Amphicheiral, Unknown };

std::string_view to_string(Chirality c);
Chirality chirality_from_string(std::string_view s);

/// Rational Betti data and chirality status of a closed oriented manifold.
/// Betti numbers may be unknown (nullopt), e.g. middle degrees nobody
/// computed; rules only ever use the values they need.
struct ManifoldDescriptor {
  std::string name;
  std::size_t dimension = 0;
  std::vector<std::optional<std::uint64_t>> betti;
  bool simply_connected = false;
  std::optional<long> signature;
  Chirality chirality = Chirality::Unknown;
  /// Where the chirality status comes from: a certificate hash or a cited result.
  std::string provenance;

  /// Throws std::invalid_argument unless betti has dimension + 1 entries,
  /// b_0 = b_dim = 1 where known, signature only in dimensions 0 mod 4.
  void validate() const;
  /// b_i = b_(dim - i) wherever both are known.
  bool satisfies_poincare_duality() const;
  std::optional<std::uint64_t> b(std::size_t i) const { return i < betti.size() ? betti[i] : std::optional<std::uint64_t>(0); }

  Json to_json() const;
};

ManifoldDescriptor sphere(std::size_t n);
/// Complex projective space CP^k (real dimension 2k); signature 1 for k even.
ManifoldDescriptor complex_projective(std::size_t k);
/// Rational homology sphere of the given dimension, e.g. a lens space.
ManifoldDescriptor rational_homology_sphere(std::string name, std::size_t n, bool simply_connected);
/// Connected sum of closed manifolds of equal dimension n >= 2.
ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

/// Betti numbers are exactly those of a sphere: 1 in degrees 0 and dim, 0
/// elsewhere. Unknown entries make the answer false.
bool is_rational_homology_sphere(const ManifoldDescriptor& d);

/// Rational Kunneth: b_k = sum_i b_i(A) b_(k-i)(B). An unknown factor times a
/// known zero counts as zero. Chirality is left UNKNOWN.
ManifoldDescriptor kunneth(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

struct ProductVerdict {
  Chirality chirality = Chirality::Unknown;
  bool rule_applies = false;
  std::string reason;
};

/// Sigma a rational homology sphere, M of the same dimension and not one:
/// the product is strongly chiral iff both factors are.
ProductVerdict product_chirality_same_dim(const ManifoldDescriptor& sigma, const ManifoldDescriptor& m);

/// Sigma a rational homology sphere of dimension s, dim M != s and
/// b_s(M) = 0: the product is strongly chiral iff both factors are.
ProductVerdict product_chirality_diff_dim(const ManifoldDescriptor& sigma, const ManifoldDescriptor& m);

/// Applies whichever product rule fits and returns the product descriptor
/// carrying the resulting chirality.
ManifoldDescriptor product(const ManifoldDescriptor& sigma, const ManifoldDescriptor& m, ProductVerdict* verdict = nullptr);

struct SignatureEvidence {
  Verdict verdict = Verdict::NoObstruction;
  long signature = 0;
};

/// Nonzero signature forbids self-maps of negative degree. Throws
/// std::invalid_argument unless dim = 0 mod 4 and the signature is known.
SignatureEvidence signature_obstruction(const ManifoldDescriptor& d);

Certificate signature_certificate(const ManifoldDescriptor& d);
/// Linking-form certificate for a (4k-1)-manifold with middle torsion Z/t.
Certificate linking_certificate(std::uint64_t t, std::size_t dimension, const std::string& manifold);

}  // namespace chirality::products
