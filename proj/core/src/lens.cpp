#include "chirality/lens/lens.hpp"

#include <numeric>
#include <stdexcept>

namespace chirality::lens {

using exact::powmod;

LensSpace::LensSpace(std::uint64_t t, std::vector<std::uint64_t> params) : t_(t), params_(std::move(params)) {
  if (t_ < 2) throw std::invalid_argument("lens space order t must be >= 2");
  if (params_.empty()) throw std::invalid_argument("lens space needs at least one rotation parameter");
  for (auto& q : params_) {
    q %= t_;
    if (std::gcd(q, t_) != 1) throw std::invalid_argument("lens space parameters must be coprime to t");
  }
}

std::string LensSpace::to_string() const {
  std::string s = "L_" + std::to_string(t_) + "(";
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params_[i]);
  }
  return s + ")";
}

std::map<std::uint64_t, std::uint64_t> degree_set(const LensSpace& l) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t e = 0; e < l.t(); ++e) out.emplace(powmod(e, l.n(), l.t()), e);
  return out;
}

namespace {
void require_t_above_two(std::uint64_t t) {
  if (t <= 2) throw std::invalid_argument("orientation reversal is degenerate for t <= 2");
}
}  // namespace

ChiralityResult is_strongly_chiral(const LensSpace& l) {
  require_t_above_two(l.t());
  ChiralityResult r;
  const std::uint64_t minus_one = l.t() - 1;
  for (std::uint64_t e = 0; e < l.t(); ++e) {
    if (powmod(e, l.n(), l.t()) == minus_one) {
      r.witness = e;
      return r;
    }
  }
  r.strongly_chiral = true;
  return r;
}

LinkingEvidence linking_obstruction(std::uint64_t t, std::size_t dim) {
  if (dim % 4 != 3) throw std::invalid_argument("linking form test needs dimension = 3 mod 4");
  LinkingEvidence ev;
  ev.t = t;
  ev.dimension = dim;
  ev.residue = exact::minus_one_is_qr(t);
  ev.verdict = ev.residue.is_residue ? Verdict::NoObstruction : Verdict::Pass;
  return ev;
}

OrderEvidence no_reversal_of_order(const LensSpace& l, std::uint64_t m) {
  require_t_above_two(l.t());
  if (m == 0) throw std::invalid_argument("order m must be >= 1");
  OrderEvidence ev;
  ev.m = m;
  ev.divides_n = l.n() % m == 0;
  const std::uint64_t minus_one = l.t() - 1;
  for (std::uint64_t e = 1; e < l.t(); ++e) {
    if (powmod(e, m, l.t()) != 1) continue;
    ++ev.candidates;
    if (!ev.witness && powmod(e, l.n(), l.t()) == minus_one) ev.witness = e;
  }
  ev.verdict = ev.witness ? Verdict::Fail : Verdict::Pass;
  if (ev.divides_n && ev.witness) throw std::logic_error("no_reversal_of_order: sweep contradicts m | n");
  return ev;
}

Verdict MinimalOrderCertificate::verdict() const {
  Verdict v = Verdict::Pass;
  for (const auto& c : checks) v = combine(v, c.verdict);
  return v;
}

MinimalOrderConstruction theoremc_construct(unsigned k, std::uint64_t search_limit) {
  if (k == 0 || k > 60) throw std::invalid_argument("k must lie in [1, 60]");
  const std::uint64_t two_k = std::uint64_t{1} << k;
  std::uint64_t p = 0;
  for (std::uint64_t m = 1; search_limit > 0; m += 2) {
    if (m > (search_limit - 1) / two_k) break;
    const std::uint64_t candidate = m * two_k + 1;
    if (candidate >= 5 && exact::is_prime(candidate)) {
      p = candidate;
      break;
    }
  }
  if (p == 0) {
    throw NoPrimeFound("no prime p = m*2^" + std::to_string(k) + " + 1 with m odd and 5 <= p <= " +
                       std::to_string(search_limit));
  }

  MinimalOrderCertificate cert;
  cert.k = k;
  cert.p = p;
  cert.l = (p - 1) / two_k;
  cert.c = exact::primitive_root(p).value();
  cert.n = (p - 1) / 2;

  std::vector<std::uint64_t> params;
  for (std::uint64_t j = 1; j <= cert.n; ++j) params.push_back(powmod(cert.c, j, p));
  LensSpace lens(p, params);

  cert.checks.push_back({"p_prime_with_2_adic_valuation_k",
                         exact::is_prime(p) && cert.l % 2 == 1 ? Verdict::Pass : Verdict::Fail,
                         {{"p", p}, {"l", cert.l}, {"k", k}}});

  const std::uint64_t order = exact::multiplicative_order(cert.c, p);
  cert.checks.push_back({"c_primitive_root", order == p - 1 ? Verdict::Pass : Verdict::Fail,
                         {{"c", cert.c}, {"multiplicative_order", order}}});

  const std::uint64_t c_pow_n = powmod(cert.c, cert.n, p);
  cert.checks.push_back({"c_pow_n_is_minus_one", c_pow_n == p - 1 ? Verdict::Pass : Verdict::Fail,
                         {{"n", cert.n}, {"c_pow_n_mod_p", c_pow_n}}});

  // z -> (z_2, ..., z_n, conj z_1) descends to L: multiplication by c shifts
  // the parameter list and sends the last one to -q_1.
  bool shifts = true;
  for (std::size_t j = 0; j + 1 < params.size(); ++j)
    shifts = shifts && exact::mulmod(cert.c, params[j], p) == params[j + 1];
  shifts = shifts && exact::mulmod(cert.c, params.back(), p) == p - params.front();
  cert.checks.push_back({"rotation_preserves_orbits", shifts ? Verdict::Pass : Verdict::Fail,
                         {{"params", params}}});

  // The lifted map has order 2n = 2^k l; its l-th power has order 2^k and
  // still reverses orientation since l is odd.
  const std::uint64_t c_l = powmod(cert.c, cert.l, p);
  const std::uint64_t power_order = exact::multiplicative_order(c_l, p);
  cert.checks.push_back({"reverser_of_order_2^k", power_order == two_k ? Verdict::Pass : Verdict::Fail,
                         {{"lift_order", p - 1}, {"power", cert.l}, {"power_order", power_order}}});

  const OrderEvidence smaller = no_reversal_of_order(lens, two_k / 2);
  Json smaller_data = {{"m", smaller.m}, {"candidates", smaller.candidates}, {"witness", nullptr},
                       {"m_divides_n", smaller.divides_n}};
  if (smaller.witness) smaller_data["witness"] = *smaller.witness;
  cert.checks.push_back({"no_reverser_of_order_2^(k-1)", smaller.verdict, smaller_data});

  cert.claim = "L_" + std::to_string(p) + "(c, c^2, ..., c^" +
               std::to_string(cert.n) + ") with c = " + std::to_string(cert.c) + " is a " +
               std::to_string(lens.dimension()) +
               "-dimensional lens space whose orientation-reversing self-diffeomorphisms have minimal order 2^" +
               std::to_string(k);
  return {std::move(cert), std::move(lens)};
}

Certificate to_certificate(const LensSpace& l, const ChiralityResult& r) {
  Certificate c;
  c.kind = CertificateKind::LensChirality;
  c.claim = l.to_string() + " admits no self-map of degree -1, hence is strongly chiral";
  c.inputs = {{"t", l.t()}, {"params", l.params()}, {"dimension", l.dimension()}};
  Json data = {{"n", l.n()}, {"minus_one_mod_t", l.t() - 1}, {"witness_e", nullptr}};
  if (r.witness) {
    data["witness_e"] = *r.witness;
    data["note"] = "e^n = -1 mod t, so a self-map of degree -1 exists; this does not decide topological chirality";
  }
  c.add({"no_degree_minus_one_self_map", r.strongly_chiral ? Verdict::Pass : Verdict::Fail, data});
  Json degrees = Json::array();
  for (const auto& [d, e] : degree_set(l)) degrees.push_back({{"degree", d}, {"e", e}});
  c.witnesses = {{"degree_set", degrees}};
  c.references = {"olum-degree-theorem", "hopfian-fundamental-group"};
  c.timestamp = current_utc_timestamp();
  return c;
}

Certificate to_certificate(const MinimalOrderConstruction& m) {
  const auto& mc = m.certificate;
  Certificate c;
  c.kind = CertificateKind::LensMinOrder;
  c.claim = mc.claim;
  c.inputs = {{"k", mc.k}, {"dimension", m.lens.dimension()}};
  for (const auto& ch : mc.checks) c.add(ch);
  c.witnesses = {{"p", mc.p}, {"l", mc.l}, {"c", mc.c}, {"n", mc.n}, {"t", m.lens.t()},
                 {"params", m.lens.params()}, {"lens", m.lens.to_string()}};
  c.references = {"olum-degree-theorem", "minimal-reversal-order-divides-n", "dirichlet-primes-in-progression"};
  c.timestamp = current_utc_timestamp();
  return c;
}

}  // namespace chirality::lens
