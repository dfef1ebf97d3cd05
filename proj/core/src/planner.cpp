#include "chirality/products/planner.hpp"

#include <numeric>
#include <stdexcept>

#include "chirality/dga/minimal_model.hpp"
#include "chirality/exact/number_theory.hpp"
#include "chirality/groups/metacyclic.hpp"
#include "chirality/lens/lens.hpp"
#include "chirality/torus/mapping_torus.hpp"

namespace chirality::products {
namespace {

std::string provenance_of(const Certificate& c) {
  return std::string(to_string(c.kind)) + " certificate " + determinism_hash(c);
}

std::uint64_t torus_bound(std::size_t fibre_dim, const PlanOptions& opts) {
  return opts.torus_bound.value_or(torus::default_brute_bound(fibre_dim));
}

// Mapping torus of the family matrix on T^(n-1); b_1 = 1 because F - I is invertible.
ManifoldDescriptor mapping_torus(std::size_t n, const PlanOptions& opts, std::vector<Certificate>& certs) {
  const auto mt = torus::certify_mapping_torus(n - 1, torus_bound(n - 1, opts));
  certs.push_back(torus::to_certificate(mt));
  ManifoldDescriptor d;
  d.name = "T_F^" + std::to_string(n);
  d.dimension = n;
  d.betti.resize(n + 1);
  d.betti[0] = d.betti[1] = d.betti[n - 1] = d.betti[n] = 1;
  d.simply_connected = false;
  d.chirality = mt.verdict() == Verdict::Pass ? Chirality::StronglyChiral : Chirality::Unknown;
  d.provenance = provenance_of(certs.back());
  return d;
}

// L_3(1, ..., 1) with `params` entries; strongly chiral exactly for even counts.
ManifoldDescriptor lens3(std::size_t params, std::vector<Certificate>& certs) {
  const lens::LensSpace l(3, std::vector<std::uint64_t>(params, 1));
  const auto r = lens::is_strongly_chiral(l);
  certs.push_back(lens::to_certificate(l, r));
  ManifoldDescriptor d = rational_homology_sphere(l.to_string(), l.dimension(), false);
  d.chirality = r.strongly_chiral ? Chirality::StronglyChiral : Chirality::WeaklyAmphicheiral;
  d.provenance = provenance_of(certs.back());
  return d;
}

ManifoldDescriptor cp(std::size_t k, std::vector<Certificate>& certs) {
  ManifoldDescriptor d = complex_projective(k);
  certs.push_back(signature_certificate(d));
  d.chirality = certs.back().verdict() == Verdict::Pass ? Chirality::StronglyChiral : Chirality::Unknown;
  d.provenance = provenance_of(certs.back());
  return d;
}

// S^(2k-1)-bundle over S^(2k) with Euler class 6: a simply connected
// rational homology sphere of dimension n = 4k - 1 with H^2k = Z/6.
ManifoldDescriptor euler6_bundle(std::size_t n, std::vector<Certificate>& certs) {
  const std::size_t k = (n + 1) / 4;
  const std::string name = "E^" + std::to_string(n) + " (S^" + std::to_string(2 * k - 1) + "-bundle over S^" +
                           std::to_string(2 * k) + ", Euler class 6)";
  certs.push_back(linking_certificate(6, n, name));
  ManifoldDescriptor d = rational_homology_sphere(name, n, true);
  d.chirality = certs.back().verdict() == Verdict::Pass ? Chirality::StronglyChiral : Chirality::Unknown;
  d.provenance = provenance_of(certs.back());
  return d;
}

// (S^p x S^(7-p)) # E^7; the Z/6 linking form on the torsion survives the sum.
ManifoldDescriptor euler6_sum(std::size_t p, std::vector<Certificate>& certs) {
  ManifoldDescriptor e7 = euler6_bundle(7, certs);
  ManifoldDescriptor d = connected_sum(kunneth(sphere(p), sphere(7 - p)), e7);
  d.name = "(S^" + std::to_string(p) + " x S^" + std::to_string(7 - p) + ")#E^7";
  d.chirality = e7.chirality;
  d.provenance = e7.provenance;
  return d;
}

ManifoldDescriptor dga_dim9(const PlanOptions& opts, std::vector<Certificate>& certs) {
  const auto report = dga::verify_dim9(dga::minimal_model(), opts.dga_sweep_bound);
  certs.push_back(dga::to_certificate(report, "built-in"));
  ManifoldDescriptor d;
  d.name = "M^9 (realizes the degree-9 minimal model)";
  d.dimension = 9;
  d.betti = {1, 0, 3, std::nullopt, std::nullopt, std::nullopt, std::nullopt, 3, 0, 1};
  d.simply_connected = true;
  d.chirality = certs.back().verdict() == Verdict::Pass ? Chirality::StronglyChiral : Chirality::Unknown;
  d.provenance = provenance_of(certs.back());
  return d;
}

// deg T = k^2 mod 3 for every self-map of the 10-manifold built from
// K(Z/3,3); degree -1 would need -1 to be a square mod 3.
Certificate k3_arithmetic_certificate() {
  const auto qr = exact::minus_one_is_qr(3);
  Json squares = Json::array();
  bool minus_one_hit = false;
  for (std::uint64_t k = 0; k < 3; ++k) {
    squares.push_back(k * k % 3);
    minus_one_hit = minus_one_hit || k * k % 3 == 2;
  }
  Certificate c;
  c.kind = CertificateKind::Obstruction;
  c.claim = "Every self-map of M^10 has degree congruent to a square mod 3, so none has degree -1";
  c.inputs = {{"manifold", "M^10"}, {"dimension", 10}, {"t", 3}};
  c.add({"minus_one_not_square_mod_3", qr.is_residue ? Verdict::Fail : Verdict::Pass,
         {{"minus_one_is_square", qr.is_residue}}});
  c.add({"square_sweep_mod_3", minus_one_hit ? Verdict::Fail : Verdict::Pass, {{"squares", squares}}});
  c.references = {"k-z3-3-degree-is-square-mod-3"};
  c.timestamp = current_utc_timestamp();
  return c;
}

ManifoldDescriptor k3_manifold(std::vector<Certificate>& certs) {
  certs.push_back(k3_arithmetic_certificate());
  ManifoldDescriptor d;
  d.name = "M^10 (from K(Z/3,3))";
  d.dimension = 10;
  d.betti.assign(11, std::uint64_t{0});
  d.betti[0] = d.betti[10] = 1;
  d.betti[5] = std::nullopt;
  d.simply_connected = true;
  d.chirality = certs.back().verdict() == Verdict::Pass ? Chirality::StronglyChiral : Chirality::Unknown;
  d.provenance = provenance_of(certs.back());
  return d;
}

Recipe amphicheiral(std::size_t n, bool sc, std::string citation) {
  Recipe r;
  r.dimension = n;
  r.simply_connected = sc;
  r.rule_id = "amphicheiral-classification";
  r.chirality = Chirality::Amphicheiral;
  r.citation = std::move(citation);
  r.citation_only = true;
  return r;
}

Recipe single(std::size_t n, bool sc, std::string rule, ManifoldDescriptor m, std::vector<Certificate> certs,
              std::string citation) {
  Recipe r;
  r.dimension = n;
  r.simply_connected = sc;
  r.rule_id = std::move(rule);
  r.chirality = m.chirality;
  r.components = {m};
  r.result = std::move(m);
  r.sub_certificates = std::move(certs);
  r.citation = std::move(citation);
  r.rule_reason = "single manifold";
  return r;
}

Recipe product_recipe(std::size_t n, bool sc, std::string rule, ManifoldDescriptor sigma, ManifoldDescriptor m,
                      std::vector<Certificate> certs, std::string citation) {
  Recipe r;
  r.dimension = n;
  r.simply_connected = sc;
  r.rule_id = std::move(rule);
  ProductVerdict v;
  r.result = product(sigma, m, &v);
  r.chirality = r.result->chirality;
  r.rule_reason = v.reason;
  r.components = {std::move(sigma), std::move(m)};
  r.sub_certificates = std::move(certs);
  r.citation = std::move(citation);
  return r;
}

Recipe plan_general(std::size_t n, const PlanOptions& opts) {
  std::vector<Certificate> certs;
  if (n <= 2) return amphicheiral(n, false, "closed one- and two-dimensional manifolds admit a reflection");
  if (n % 2 == 1) {
    auto m = mapping_torus(n, opts, certs);
    return single(n, false, "mapping-torus", std::move(m), std::move(certs),
                  "mapping torus of F on T^(n-1) with characteristic polynomial X^(n-1) - X + 1");
  }
  if (n % 4 == 0) {
    auto m = cp(n / 2, certs);
    return single(n, false, "signature", std::move(m), std::move(certs), "nonzero signature forbids negative degree");
  }
  if (n % 8 == 6) {
    const std::size_t h = n / 2;
    auto sigma = lens3((h + 1) / 2, certs);
    auto m = mapping_torus(h, opts, certs);
    return product_recipe(n, false, "lens-times-mapping-torus", std::move(sigma), std::move(m), std::move(certs),
                          "equal-dimension product of a strongly chiral lens space and mapping torus");
  }
  auto sigma = lens3(2, certs);
  auto m = lens3((n - 2) / 2, certs);
  return product_recipe(n, false, "lens-times-lens", std::move(sigma), std::move(m), std::move(certs),
                        "product of strongly chiral rational homology spheres of different dimensions");
}

Recipe plan_simply_connected(std::size_t n, const PlanOptions& opts) {
  std::vector<Certificate> certs;
  switch (n) {
    case 1:
    case 2:
      return amphicheiral(n, true, "the only simply connected closed manifold is a sphere");
    case 3:
      return amphicheiral(n, true, "every simply connected closed 3-manifold is S^3");
    case 5:
    case 6:
      return amphicheiral(n, true, "classification of simply connected 5- and 6-manifolds: all are amphicheiral");
    case 9: {
      auto m = dga_dim9(opts, certs);
      return single(n, true, "dga-dim9", std::move(m), std::move(certs),
                    "the degree-9 fundamental class is fixed by every admissible automorphism");
    }
    case 10: {
      auto m = k3_manifold(certs);
      return single(n, true, "k-z3-3", std::move(m), std::move(certs),
                    "self-map degrees of the K(Z/3,3) model are squares mod 3");
    }
    case 13: {
      auto m9 = dga_dim9(opts, certs);
      auto m4 = cp(2, certs);
      const auto report = dga::dim13_check(opts.dim13_star_bound);
      certs.push_back(dga::to_certificate(report));
      Recipe r;
      r.dimension = n;
      r.simply_connected = true;
      r.rule_id = "dga-dim13-product";
      r.result = kunneth(m9, m4);
      r.result->chirality = certs.back().verdict() == Verdict::Pass ? Chirality::StronglyChiral : Chirality::Unknown;
      r.result->provenance = provenance_of(certs.back());
      r.chirality = r.result->chirality;
      r.rule_reason = "every admissible automorphism of the model tensored with Q[x] fixes (class) x^2";
      r.components = {std::move(m9), std::move(m4)};
      r.sub_certificates = std::move(certs);
      r.citation = "product of the degree-9 manifold with CP^2";
      return r;
    }
    case 14: {
      auto sigma = euler6_bundle(7, certs);
      auto m = euler6_sum(3, certs);
      return product_recipe(n, true, "bundle-times-sum", std::move(sigma), std::move(m), std::move(certs),
                            "equal-dimension product starting from 14");
    }
    case 17: {
      auto sigma = euler6_bundle(7, certs);
      auto m = k3_manifold(certs);
      return product_recipe(n, true, "bundle-times-k-z3-3", std::move(sigma), std::move(m), std::move(certs),
                            "different-dimension product with the K(Z/3,3) manifold");
    }
    case 21: {
      auto a = euler6_bundle(7, certs);
      auto b = euler6_sum(3, certs);
      auto c = euler6_sum(2, certs);
      Recipe r;
      r.dimension = n;
      r.simply_connected = true;
      r.rule_id = "triple-product";
      r.result = kunneth(kunneth(a, b), c);
      r.result->chirality = Chirality::StronglyChiral;
      r.result->provenance = "cited triple-product rule";
      r.chirality = Chirality::StronglyChiral;
      r.citation_only = true;
      r.rule_reason = "product of three 7-manifolds; the triple rule is cited, not re-verified";
      r.components = {std::move(a), std::move(b), std::move(c)};
      r.sub_certificates = std::move(certs);
      r.citation = "products of three manifolds starting from 21";
      return r;
    }
    default:
      break;
  }
  if (n == 4 || (n % 4 == 0)) {
    auto m = cp(n / 2, certs);
    return single(n, true, "signature", std::move(m), std::move(certs), "nonzero signature forbids negative degree");
  }
  if (n % 4 == 3) {
    auto m = euler6_bundle(n, certs);
    return single(n, true, "euler-class-6-bundle", std::move(m), std::move(certs),
                  "sphere bundle with Euler class 6; -1 is not a square mod 6");
  }
  if (n % 4 == 2) {
    auto sigma = euler6_bundle(7, certs);
    auto m = euler6_bundle(n - 7, certs);
    return product_recipe(n, true, "bundle-times-bundle", std::move(sigma), std::move(m), std::move(certs),
                          "different-dimension product of rational homology spheres starting from 14");
  }
  // n = 1 mod 4, n >= 25
  std::vector<Certificate> inner;
  auto e7 = euler6_bundle(7, inner);
  auto n2 = euler6_sum(2, inner);
  ProductVerdict v14;
  ManifoldDescriptor m14 = product(e7, n2, &v14);
  m14.name = "E^7 x ((S^2 x S^5)#E^7)";
  certs.insert(certs.end(), inner.begin(), inner.end());
  auto sigma = euler6_bundle(n - 14, certs);
  Recipe r = product_recipe(n, true, "bundle-times-14-product", std::move(sigma), std::move(m14), std::move(certs),
                            "different-dimension product with a strongly chiral 14-manifold starting from 21");
  r.rule_reason = v14.reason + "; then " + r.rule_reason;
  return r;
}

void attach_bordism_note(Recipe& r, const PlanOptions& opts) {
  const std::size_t n = r.dimension;
  if (r.simply_connected || n < 3) return;
  if (n == 4) {
    auto search = groups::search_tuples(3, 50);
    r.bordism_certificates.push_back(groups::to_certificate(search));
    r.bordism_note =
        "dimension 4: strongly chiral 4-manifolds with finite fundamental groups of different orders; every "
        "bordism class is represented by one of them";
    return;
  }
  if (n % 2 == 1) {
    r.bordism_note =
        "every oriented bordism class contains M # N with N simply connected; M is aspherical, so the sum stays "
        "strongly chiral";
    return;
  }
  if (n >= 6) {
    std::vector<Certificate> certs;
    mapping_torus(n - 3, opts, certs);
    lens3(2, certs);
    r.bordism_certificates = std::move(certs);
    r.bordism_note = "every oriented bordism class contains (T_F^" + std::to_string(n - 3) +
                     " x L_3(1,1)) # N with N simply connected";
  }
}

}  // namespace

bool Recipe::dimensions_consistent() const {
  if (components.empty()) return !result;
  if (result && result->dimension != dimension) return false;
  if (components.size() == 1) return components.front().dimension == dimension;
  std::size_t sum = 0;
  for (const auto& c : components) sum += c.dimension;
  return sum == dimension;
}

Recipe plan_dimension(std::size_t n, bool simply_connected, const PlanOptions& opts) {
  if (n == 0) throw std::invalid_argument("dimension must be >= 1");
  Recipe r = simply_connected ? plan_simply_connected(n, opts) : plan_general(n, opts);
  if (opts.bordism_notes) attach_bordism_note(r, opts);
  return r;
}

Certificate to_certificate(const Recipe& r) {
  Certificate c;
  c.kind = CertificateKind::PlanRecipe;
  const std::string track = r.simply_connected ? "simply connected " : "";
  if (r.chirality == Chirality::Amphicheiral) {
    c.claim = "Every closed oriented " + track + std::to_string(r.dimension) + "-manifold is amphicheiral";
  } else {
    c.claim = (r.result ? r.result->name : std::string("?")) + " is a closed oriented " + track +
              std::to_string(r.dimension) + "-manifold with chirality " + std::string(to_string(r.chirality));
  }
  c.inputs = {{"dimension", r.dimension}, {"simply_connected", r.simply_connected}};

  c.add({"component_dimensions_consistent", r.dimensions_consistent() ? Verdict::Pass : Verdict::Fail,
         {{"dimensions", [&] {
            Json dims = Json::array();
            for (const auto& m : r.components) dims.push_back(m.dimension);
            return dims;
          }()}}});
  const bool settled = r.chirality == Chirality::StronglyChiral || r.chirality == Chirality::Amphicheiral;
  c.add({"chirality_determined", settled ? Verdict::Pass : Verdict::Inconclusive,
         {{"chirality", to_string(r.chirality)}, {"reason", r.rule_reason}}});

  Json subs = Json::array();
  auto add_subs = [&](const std::vector<Certificate>& list, const std::string& role) {
    for (const auto& s : list) {
      const std::string hash = determinism_hash(s);
      c.add({"sub_certificate " + std::string(to_string(s.kind)) + " " + hash.substr(0, 12), s.verdict(),
             {{"role", role}, {"determinism_hash", hash}}});
      subs.push_back({{"role", role}, {"determinism_hash", hash}, {"body", canonical_body(s)}});
    }
  };
  add_subs(r.sub_certificates, "recipe");
  add_subs(r.bordism_certificates, "bordism");

  Json components = Json::array();
  for (const auto& m : r.components) components.push_back(m.to_json());
  c.witnesses = {{"rule_id", r.rule_id},
                 {"chirality", to_string(r.chirality)},
                 {"citation", r.citation},
                 {"citation_only", r.citation_only},
                 {"components", components},
                 {"result", r.result ? r.result->to_json() : Json(nullptr)},
                 {"bordism_note", r.bordism_note ? Json(*r.bordism_note) : Json(nullptr)},
                 {"sub_certificates", subs}};
  c.references = {"plan-" + r.rule_id};
  if (r.citation_only) c.references.push_back("cited-without-verification");
  c.timestamp = current_utc_timestamp();
  return c;
}

}  // namespace chirality::products
