#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chirality/cert/certificate.hpp"
#include "chirality/products/manifold.hpp"

namespace chirality::products {

struct PlanOptions {
  /// Falsifier bound for live mapping-torus certificates; unset uses
  /// torus::default_brute_bound.
  std::optional<std::uint64_t> torus_bound;
  int dga_sweep_bound = 1;
  int dim13_star_bound = 1;
  /// Attach the bordism-class note and its supporting certificates.
  bool bordism_notes = false;
};

/// A strongly chiral construction in one dimension, or the statement that
/// every manifold of that dimension (and track) is amphicheiral.
struct Recipe {
  std::size_t dimension = 0;
  bool simply_connected = false;
  std::string rule_id;
  /// STRONGLY_CHIRAL for constructions, AMPHICHEIRAL for the cited low
  /// dimensional classification results.
  Chirality chirality = Chirality::Unknown;
  std::vector<ManifoldDescriptor> components;
  std::optional<ManifoldDescriptor> result;
  std::string citation;
  /// The chirality rests on a cited result that is not re-verified here.
  bool citation_only = false;
  std::vector<Certificate> sub_certificates;
  std::optional<std::string> bordism_note;
  std::vector<Certificate> bordism_certificates;
  /// Why the product rule applied (or did not).
  std::string rule_reason;

  /// Product rules: component dimensions sum to the target; single rules:
  /// the one component has the target dimension.
  bool dimensions_consistent() const;
};

/// Total for n >= 1; throws std::invalid_argument for n = 0.
Recipe plan_dimension(std::size_t n, bool simply_connected, const PlanOptions& opts = {});

Certificate to_certificate(const Recipe& r);

}  // namespace chirality::products
