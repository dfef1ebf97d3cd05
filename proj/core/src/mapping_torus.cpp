#include "chirality/torus/mapping_torus.hpp"

#include <stdexcept>

namespace chirality::torus {
namespace {

using exact::determinant;

constexpr const char* kRationale =
    "A self-map K of the mapping torus is homotopic to a fibre-preserving map "
    "(the base circle carries the Z factor of pi_1, the torus fibre the Z^n factor). "
    "The induced map on the base K' satisfies J^ab(1) = K'_*(1) = +-1, and on the fibre "
    "K'' induces an integer matrix G with deg K = deg K' * det G. Degree -1 therefore "
    "needs either deg K' = 1, det G = -1, FG = GF, or deg K' = -1, det G = 1, F^-1 G = G F. "
    "Condition (a) makes the abelianised fundamental group Z, so the base direction is "
    "detected homologically; (b) and (c) exclude the two cases.";

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

// Searches {G : G f1 = f2 G, entries in [-bound, bound]} for det G = target.
FalsifierResult falsify(const IntMatrix& f1, const IntMatrix& f2, int target, std::uint64_t bound,
                        const exact::ProgressHook& progress) {
  FalsifierResult r;
  r.bound = bound;
  if (bound == 0) {
    // The box holds only G = 0, whose determinant is 0.
    r.solutions_examined = 1;
    return r;
  }
  const std::size_t n = f1.rows();
  const IntMatrix hnf = exact::intertwiner_lattice_hnf(f1, f2);
  exact::enumerate_lattice_box(
      hnf, mpz_class(std::to_string(bound)),
      [&](const std::vector<mpz_class>& v) {
        ++r.solutions_examined;
        IntMatrix g = exact::unflatten(v, n);
        if (determinant(g) != target) return;
        if (!r.counterexample || lex_less(g, *r.counterexample)) r.counterexample = std::move(g);
      },
      progress);
  return r;
}

void require_square(const IntMatrix& f) {
  if (!f.is_square() || f.rows() == 0) throw std::invalid_argument("monodromy must be a nonempty square matrix");
}

}  // namespace

BinaryQuadraticForm BinaryQuadraticForm::reduced() const {
  if (discriminant() >= 0) throw std::domain_error("reduction needs a definite form");
  if (a < 0) {
    const BinaryQuadraticForm r = BinaryQuadraticForm{-a, -b, -c}.reduced();
    return {-r.a, -r.b, -r.c};
  }
  const mpz_class d = discriminant();
  BinaryQuadraticForm f = *this;
  for (;;) {
    if (f.b > f.a || f.b <= -f.a) {
      // Translate x -> x + k y to bring b into (-a, a].
      const mpz_class two_a = 2 * f.a;
      mpz_class nb;
      mpz_fdiv_r(nb.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
      if (nb > f.a) nb -= two_a;
      f.b = nb;
      f.c = (f.b * f.b - d) / (4 * f.a);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

Json FalsifierResult::to_json() const {
  Json j = {{"bound", bound},
            {"solutions_examined", to_json_u64(solutions_examined)},
            {"counterexample", nullptr}};
  if (counterexample) j["counterexample"] = chirality::to_json(*counterexample);
  return j;
}

Verdict MappingTorusCertificate::verdict() const {
  Verdict v = (det_f == 1) ? Verdict::Pass : Verdict::Fail;
  v = combine(v, condition_a.verdict);
  v = combine(v, condition_b.verdict);
  return combine(v, condition_c.verdict);
}

IntMatrix build_family_matrix(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("family matrix needs an even n >= 2");
  // X^n - X + 1
  std::vector<mpz_class> coeffs(n + 1, mpz_class(0));
  coeffs[0] = 1;
  coeffs[1] = -1;
  coeffs[n] = 1;
  return exact::companion_matrix(IntPolynomial(std::move(coeffs)));
}

ConditionA certify_condition_a(const IntMatrix& f) {
  require_square(f);
  ConditionA a;
  a.det_f_minus_identity = determinant(f - IntMatrix::identity(f.rows()));
  a.verdict = abs(a.det_f_minus_identity) == 1 ? Verdict::Pass : Verdict::Fail;
  return a;
}

ConditionB certify_condition_b(const IntMatrix& f, std::uint64_t brute_bound, const exact::ProgressHook& progress) {
  require_square(f);
  ConditionB b;
  const IntPolynomial p = exact::char_poly(f);
  b.squarefree = exact::poly_is_squarefree(p);
  if (b.squarefree) b.real_root_count = exact::sturm_real_root_count(p);
  b.falsifier = falsify(f, f, -1, brute_bound, progress);
  if (b.falsifier.counterexample) {
    b.verdict = Verdict::Fail;
  } else if (b.squarefree && b.real_root_count == 0u) {
    b.verdict = Verdict::Pass;
  } else {
    b.verdict = Verdict::Inconclusive;
  }
  return b;
}

ConditionC certify_condition_c(const IntMatrix& f, std::uint64_t brute_bound, const exact::ProgressHook& progress) {
  require_square(f);
  const IntMatrix f_inv = exact::integer_inverse(f);
  ConditionC c;
  const IntPolynomial p = exact::char_poly(f);
  c.reciprocal = exact::reciprocal_poly(p);
  c.palindromic = (c.reciprocal == p);
  c.falsifier = falsify(f, f_inv, 1, brute_bound, progress);
  if (c.falsifier.counterexample) {
    c.verdict = Verdict::Fail;
    c.route = "explicit intertwiner with determinant 1";
    return c;
  }
  if (!c.palindromic) {
    c.verdict = Verdict::Pass;
    c.route = "F and F^-1 have different characteristic polynomials, so no invertible G intertwines them";
    return c;
  }
  c.lattice = exact::intertwiner_lattice(f, f_inv);
  if (c.lattice->empty()) {
    c.verdict = Verdict::Pass;
    c.route = "the only intertwiner is G = 0";
    return c;
  }
  if (f.rows() == 2 && c.lattice->size() == 2) {
    const IntMatrix& g1 = (*c.lattice)[0];
    const IntMatrix& g2 = (*c.lattice)[1];
    // det(x G1 + y G2) is a binary quadratic form; recover it from three values.
    const mpz_class d1 = determinant(g1);
    const mpz_class d2 = determinant(g2);
    const mpz_class d12 = determinant(g1 + g2);
    c.determinant_form = BinaryQuadraticForm{d1, d12 - d1 - d2, d2};
    if (c.determinant_form->negative_definite()) {
      c.verdict = Verdict::Pass;
      c.route = "det is negative definite on the intertwiner lattice, so det G = 1 is impossible";
      return c;
    }
    c.verdict = Verdict::Inconclusive;
    c.route = "det on the intertwiner lattice is not negative definite";
    return c;
  }
  c.verdict = Verdict::Inconclusive;
  c.route = "palindromic characteristic polynomial; no sufficient criterion applies";
  return c;
}

MappingTorusCertificate certify_mapping_torus(std::size_t n, std::uint64_t brute_bound,
                                              const exact::ProgressHook& progress) {
  MappingTorusCertificate cert;
  cert.n = n;
  cert.f = build_family_matrix(n);
  cert.char_poly = exact::char_poly(cert.f);
  cert.det_f = determinant(cert.f);
  cert.condition_a = certify_condition_a(cert.f);
  cert.condition_b = certify_condition_b(cert.f, brute_bound, progress);
  cert.condition_c = certify_condition_c(cert.f, brute_bound, progress);
  cert.rationale = kRationale;
  return cert;
}

std::uint64_t default_brute_bound(std::size_t n) {
  if (n <= 2) return 10;
  if (n <= 4) return 3;
  if (n <= 10) return 1;
  return 0;
}

Certificate to_certificate(const MappingTorusCertificate& m) {
  Certificate c;
  c.kind = CertificateKind::MappingTorus;
  c.claim = "The " + std::to_string(m.n + 1) + "-dimensional mapping torus of T^" + std::to_string(m.n) +
            " with monodromy F is strongly chiral";
  c.inputs = {{"n", m.n},
              {"dimension", m.n + 1},
              {"brute_bound", m.condition_b.falsifier.bound},
              {"F", to_json(m.f)}};

  c.add({"F_in_SL_n_Z", m.det_f == 1 ? Verdict::Pass : Verdict::Fail, {{"det_F", to_json(m.det_f)}}});
  c.add({"condition_a", m.condition_a.verdict, {{"det_F_minus_I", to_json(m.condition_a.det_f_minus_identity)}}});

  Json b = {{"squarefree", m.condition_b.squarefree},
            {"real_root_count", nullptr},
            {"falsifier", m.condition_b.falsifier.to_json()}};
  if (m.condition_b.real_root_count) b["real_root_count"] = *m.condition_b.real_root_count;
  c.add({"condition_b", m.condition_b.verdict, b});

  Json cc = {{"palindromic", m.condition_c.palindromic},
             {"reciprocal_poly", to_json(m.condition_c.reciprocal)},
             {"route", m.condition_c.route},
             {"falsifier", m.condition_c.falsifier.to_json()}};
  if (m.condition_c.lattice) {
    Json basis = Json::array();
    for (const auto& g : *m.condition_c.lattice) basis.push_back(to_json(g));
    cc["intertwiner_basis"] = basis;
  }
  if (const auto& q = m.condition_c.determinant_form) {
    cc["determinant_form"] = {{"a", to_json(q->a)}, {"b", to_json(q->b)}, {"c", to_json(q->c)},
                              {"discriminant", to_json(q->discriminant())},
                              {"reduced", nullptr}};
    if (q->discriminant() < 0) {
      const BinaryQuadraticForm r = q->reduced();
      cc["determinant_form"]["reduced"] = {{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"c", to_json(r.c)}};
    }
  }
  c.add({"condition_c", m.condition_c.verdict, cc});

  c.witnesses = {{"char_poly", to_json(m.char_poly)}, {"rationale", m.rationale}};
  c.references = {"mapping-torus-fibre-preserving-homotopy", "commutant-determinant-sign",
                  "palindromic-intertwiner-criterion"};
  c.timestamp = current_utc_timestamp();
  return c;
}

}  // namespace chirality::torus
