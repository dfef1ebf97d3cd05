#include "chirality/products/manifold.hpp"

#include <array>
#include <stdexcept>

#include "chirality/lens/lens.hpp"

namespace chirality::products {
namespace {

constexpr std::array<std::pair<Chirality, std::string_view>, 4> kChiralityNames{{
    {Chirality::StronglyChiral, "STRONGLY_CHIRAL"},
    {Chirality::WeaklyAmphicheiral, "WEAKLY_AMPHICHEIRAL"},
    {Chirality::Amphicheiral, "AMPHICHEIRAL"},
    {Chirality::Unknown, "UNKNOWN"},
}};

Chirality combine_factors(Chirality a, Chirality b) {
  if (a == Chirality::StronglyChiral && b == Chirality::StronglyChiral) return Chirality::StronglyChiral;
  if (a == Chirality::Amphicheiral || b == Chirality::Amphicheiral) return Chirality::Amphicheiral;
  return Chirality::WeaklyAmphicheiral;
}

// Some Betti number strictly between 0 and dim is known to be nonzero.
bool certainly_not_qhs(const ManifoldDescriptor& d) {
  for (std::size_t i = 1; i < d.dimension; ++i)
    if (d.betti[i] && *d.betti[i] != 0) return true;
  return false;
}

}  // namespace

std::string_view to_string(Chirality c) {
  for (const auto& [v, name] : kChiralityNames)
    if (v == c) return name;
  return "UNKNOWN";
}

Chirality chirality_from_string(std::string_view s) {
  for (const auto& [v, name] : kChiralityNames)
    if (name == s) return v;
  throw std::invalid_argument("unknown chirality status: " + std::string(s));
}

void ManifoldDescriptor::validate() const {
  if (betti.size() != dimension + 1) throw std::invalid_argument(name + ": need dimension + 1 Betti numbers");
  if (betti.front() && *betti.front() != 1) throw std::invalid_argument(name + ": b_0 must be 1");
  if (betti.back() && *betti.back() != 1) throw std::invalid_argument(name + ": b_dim must be 1");
  if (signature && dimension % 4 != 0) throw std::invalid_argument(name + ": signature needs dimension 0 mod 4");
}

bool ManifoldDescriptor::satisfies_poincare_duality() const {
  for (std::size_t i = 0; i <= dimension; ++i) {
    const auto& x = betti[i];
    const auto& y = betti[dimension - i];
    if (x && y && *x != *y) return false;
  }
  return true;
}

Json ManifoldDescriptor::to_json() const {
  Json b = Json::array();
  for (const auto& x : betti) b.push_back(x ? Json(*x) : Json(nullptr));
  return {{"name", name},
          {"dimension", dimension},
          {"betti", b},
          {"simply_connected", simply_connected},
          {"signature", signature ? Json(*signature) : Json(nullptr)},
          {"chirality", to_string(chirality)},
          {"provenance", provenance}};
}

ManifoldDescriptor sphere(std::size_t n) {
  ManifoldDescriptor d = rational_homology_sphere("S^" + std::to_string(n), n, n != 1);
  if (n % 4 == 0) d.signature = 0;
  d.chirality = Chirality::Amphicheiral;
  d.provenance = "reflection";
  return d;
}

ManifoldDescriptor complex_projective(std::size_t k) {
  ManifoldDescriptor d;
  d.name = "CP^" + std::to_string(k);
  d.dimension = 2 * k;
  for (std::size_t i = 0; i <= d.dimension; ++i) d.betti.emplace_back(i % 2 == 0 ? 1 : 0);
  d.simply_connected = true;
  if (k % 2 == 0) d.signature = 1;
  return d;
}

ManifoldDescriptor rational_homology_sphere(std::string name, std::size_t n, bool simply_connected) {
  ManifoldDescriptor d;
  d.name = std::move(name);
  d.dimension = n;
  d.betti.assign(n + 1, std::uint64_t{0});
  d.betti.front() = 1;
  d.betti.back() = 1;
  d.simply_connected = simply_connected;
  return d;
}

ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (a.dimension != b.dimension || a.dimension < 2) {
    throw std::invalid_argument("connected sum needs equal dimensions >= 2");
  }
  ManifoldDescriptor d;
  d.name = "(" + a.name + ")#(" + b.name + ")";
  d.dimension = a.dimension;
  d.betti.resize(d.dimension + 1);
  for (std::size_t i = 0; i <= d.dimension; ++i) {
    if (i == 0 || i == d.dimension) {
      d.betti[i] = 1;
    } else if (a.betti[i] && b.betti[i]) {
      d.betti[i] = *a.betti[i] + *b.betti[i];
    }
  }
  d.simply_connected = a.simply_connected && b.simply_connected;
  if (a.signature && b.signature) d.signature = *a.signature + *b.signature;
  return d;
}

bool is_rational_homology_sphere(const ManifoldDescriptor& d) {
  for (std::size_t i = 0; i <= d.dimension; ++i) {
    const std::uint64_t expected = (i == 0 || i == d.dimension) ? 1 : 0;
    if (!d.betti[i] || *d.betti[i] != expected) return false;
  }
  return true;
}

ManifoldDescriptor kunneth(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  ManifoldDescriptor d;
  d.name = a.name + " x " + b.name;
  d.dimension = a.dimension + b.dimension;
  d.betti.resize(d.dimension + 1);
  for (std::size_t k = 0; k <= d.dimension; ++k) {
    std::uint64_t sum = 0;
    bool known = true;
    for (std::size_t i = 0; i <= a.dimension; ++i) {
      if (k < i || k - i > b.dimension) continue;
      const auto& x = a.betti[i];
      const auto& y = b.betti[k - i];
      if ((x && *x == 0) || (y && *y == 0)) continue;
      if (!x || !y) {
        known = false;
        continue;
      }
      sum += *x * *y;
    }
    if (known) d.betti[k] = sum;
  }
  d.simply_connected = a.simply_connected && b.simply_connected;
  if (d.dimension % 4 == 0) {
    // Multiplicative with sigma = 0 off dimensions 0 mod 4.
    if (a.dimension % 4 != 0 || b.dimension % 4 != 0) {
      d.signature = 0;
    } else if (a.signature && b.signature) {
      d.signature = *a.signature * *b.signature;
    }
  }
  d.provenance = "kunneth";
  return d;
}

ProductVerdict product_chirality_same_dim(const ManifoldDescriptor& sigma, const ManifoldDescriptor& m) {
  ProductVerdict v;
  if (sigma.dimension != m.dimension) {
    v.reason = "factors have different dimensions";
  } else if (!is_rational_homology_sphere(sigma)) {
    v.reason = sigma.name + " is not known to be a rational homology sphere";
  } else if (!certainly_not_qhs(m)) {
    v.reason = m.name + " is not known to have a nonzero middle Betti number";
  } else if (sigma.chirality == Chirality::Unknown || m.chirality == Chirality::Unknown) {
    v.reason = "a factor has unknown chirality";
  } else {
    v.rule_applies = true;
    v.chirality = combine_factors(sigma.chirality, m.chirality);
    v.reason = "equal-dimension product rule: rational homology sphere times a manifold that is not one";
  }
  return v;
}

ProductVerdict product_chirality_diff_dim(const ManifoldDescriptor& sigma, const ManifoldDescriptor& m) {
  ProductVerdict v;
  const std::size_t s = sigma.dimension;
  if (s == m.dimension) {
    v.reason = "factors have equal dimensions";
  } else if (!is_rational_homology_sphere(sigma)) {
    v.reason = sigma.name + " is not known to be a rational homology sphere";
  } else if (const auto bs = m.b(s); !bs || *bs != 0) {
    v.reason = "b_" + std::to_string(s) + "(" + m.name + ") is not known to vanish";
  } else if (sigma.chirality == Chirality::Unknown || m.chirality == Chirality::Unknown) {
    v.reason = "a factor has unknown chirality";
  } else {
    v.rule_applies = true;
    v.chirality = combine_factors(sigma.chirality, m.chirality);
    v.reason = "different-dimension product rule: b_" + std::to_string(s) + " of the second factor vanishes";
  }
  return v;
}

ManifoldDescriptor product(const ManifoldDescriptor& sigma, const ManifoldDescriptor& m, ProductVerdict* verdict) {
  const ProductVerdict v = sigma.dimension == m.dimension ? product_chirality_same_dim(sigma, m)
                                                          : product_chirality_diff_dim(sigma, m);
  ManifoldDescriptor d = kunneth(sigma, m);
  d.chirality = v.rule_applies ? v.chirality : Chirality::Unknown;
  d.provenance = v.reason;
  if (verdict) *verdict = v;
  return d;
}

SignatureEvidence signature_obstruction(const ManifoldDescriptor& d) {
  if (d.dimension % 4 != 0) {
    throw std::invalid_argument("the intersection form in dimension " + std::to_string(d.dimension) +
                                " is isomorphic to its negative; signature only obstructs in dimensions 0 mod 4");
  }
  if (!d.signature) throw std::invalid_argument(d.name + ": signature unknown");
  return {*d.signature != 0 ? Verdict::Pass : Verdict::NoObstruction, *d.signature};
}

Certificate signature_certificate(const ManifoldDescriptor& d) {
  const SignatureEvidence ev = signature_obstruction(d);
  Certificate c;
  c.kind = CertificateKind::Obstruction;
  c.claim = d.name + " admits no self-map of negative degree (nonzero signature)";
  c.inputs = {{"manifold", d.name}, {"dimension", d.dimension}, {"signature", ev.signature}};
  c.add({"signature_nonzero", ev.verdict, {{"signature", ev.signature}}});
  c.references = {"signature-obstruction"};
  c.timestamp = current_utc_timestamp();
  return c;
}

Certificate linking_certificate(std::uint64_t t, std::size_t dimension, const std::string& manifold) {
  const lens::LinkingEvidence ev = lens::linking_obstruction(t, dimension);
  Certificate c;
  c.kind = CertificateKind::Obstruction;
  c.claim = manifold + " admits no self-map of degree -1 (-1 is not a square modulo " + std::to_string(t) + ")";
  c.inputs = {{"manifold", manifold}, {"dimension", dimension}, {"t", t}};
  Json data = {{"minus_one_is_square", ev.residue.is_residue}, {"witness", nullptr}};
  if (ev.residue.witness) data["witness"] = *ev.residue.witness;
  c.add({"linking_form_obstruction", ev.verdict, data});
  c.references = {"linking-form-quadratic-residue"};
  c.timestamp = current_utc_timestamp();
  return c;
}

}  // namespace chirality::products
