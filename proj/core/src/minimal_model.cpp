#include "chirality/dga/minimal_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chirality::dga {
namespace {

using exact::RatMatrix;

constexpr const char* kModelText =
    "# minimal model of the 4-stage Postnikov candidate\n"
    "gen a 2\n"
    "gen b 2\n"
    "gen c 2\n"
    "gen A 3\n"
    "gen B 3\n"
    "gen C 3\n"
    "gen alpha 4\n"
    "gen beta 4\n"
    "d A = b*c\n"
    "d B = 2*a*c\n"
    "d C = 3*a*b\n"
    "d alpha = 2*a*A - b*B\n"
    "d beta = 3*a*A - c*C\n";

constexpr const char* kModelWithXText =
    "gen a 2\n"
    "gen b 2\n"
    "gen c 2\n"
    "gen x 2\n"
    "gen A 3\n"
    "gen B 3\n"
    "gen C 3\n"
    "gen alpha 4\n"
    "gen beta 4\n"
    "d A = b*c\n"
    "d B = 2*a*c\n"
    "d C = 3*a*b\n"
    "d alpha = 2*a*A - b*B\n"
    "d beta = 3*a*A - c*C\n";

std::vector<std::size_t> base_indices(const GcAlgebra& alg) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alg.size(); ++i)
    if (alg.generators()[i].degree == 2) out.push_back(i);
  return out;
}

mpz_class det_or_throw(const IntMatrix& m, std::size_t k) {
  if (!m.is_square() || m.rows() != k) {
    throw std::invalid_argument("matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  return exact::determinant(m);
}

bool admissible_in(const IntMatrix& m, const TransgressionData& tau, const IntMatrix& lattice) {
  const std::size_t k = tau.base.size();
  for (std::size_t v = 0; v < tau.fibre.size(); ++v) {
    const auto q = transformed_image(m, tau, v);
    std::vector<mpz_class> coords;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const auto it = q.find({i, j});
        coords.push_back(it == q.end() ? mpz_class(0) : it->second);
      }
    if (!exact::lattice_coordinates(lattice, coords)) return false;
  }
  return true;
}

Json images_to_json(const GcAlgebra& alg, const GeneratorImages& images) {
  Json j = Json::object();
  for (std::size_t i = 0; i < alg.size(); ++i) j[alg.generators()[i].name] = alg.to_string(images[i]);
  return j;
}

std::string monomial_list(const GcAlgebra& alg, const std::vector<Monomial>& ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : ", ") + alg.to_string(m);
  return s;
}

}  // namespace

GcAlgebra minimal_model() { return parse_algebra(kModelText); }
GcAlgebra minimal_model_with_x() { return parse_algebra(kModelWithXText); }
std::string minimal_model_text() { return kModelText; }

FundamentalClassReport fundamental_class(const GcAlgebra& alg) {
  FundamentalClassReport r;
  const AlgElement d_alpha = alg.differential(alg.generator("alpha"));
  const AlgElement product = alg.multiply(d_alpha, alg.generator("beta"));
  const AlgElement abc = alg.multiply(alg.multiply(alg.generator("A"), alg.generator("B")), alg.generator("C"));
  r.d_plus = alg.differential(product + abc);
  r.d_minus = alg.differential(product - abc);
  if (r.d_plus.is_zero() == r.d_minus.is_zero()) {
    throw std::logic_error("expected exactly one sign to give a closed degree-9 element");
  }
  r.epsilon = r.d_plus.is_zero() ? 1 : -1;
  r.representative = r.epsilon > 0 ? product + abc : product - abc;

  const Monomial abc_monomial = abc.terms().begin()->first;
  const auto basis8 = alg.basis(8);
  r.degree8_basis_size = basis8.size();
  for (const auto& m : basis8) {
    if (alg.differential(alg.monomial(m)).coeff(abc_monomial) != 0) r.degree8_with_abc.push_back(m);
  }
  const SpanReducer bd = boundaries(alg, 9);
  r.degree9_boundary_rank = bd.rank();
  r.exact = bd.reduce(r.representative).is_zero();
  return r;
}

AlgElement apply(const GcAlgebra& alg, const GeneratorImages& images, const AlgElement& x) {
  if (images.size() != alg.size()) throw std::invalid_argument("one image per generator is required");
  AlgElement r = alg.zero();
  for (const auto& [m, c] : x.terms()) {
    AlgElement t = alg.scalar(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = alg.multiply(t, alg.power(images[i], m[i]));
    r += t;
  }
  return r;
}

Extension extend_automorphism(const GcAlgebra& alg, const IntMatrix& base_map) {
  const auto base = base_indices(alg);
  if (!base_map.is_square() || base_map.rows() != base.size()) {
    throw std::invalid_argument("base map must be square of size " + std::to_string(base.size()));
  }
  std::vector<std::optional<AlgElement>> known(alg.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (!alg.generator_differential(base[j]).is_zero()) {
      throw std::domain_error("degree-2 generator " + alg.generators()[base[j]].name + " is not closed");
    }
    AlgElement img = alg.zero();
    for (std::size_t i = 0; i < base.size(); ++i)
      img += mpq_class(base_map(i, j)) * alg.generator(base[i]);
    known[base[j]] = img;
  }

  std::vector<unsigned> degrees;
  for (const auto& g : alg.generators())
    if (g.degree != 2) degrees.push_back(g.degree);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  Extension ext;
  for (unsigned deg : degrees) {
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < alg.size(); ++i)
      if (alg.generators()[i].degree == deg) group.push_back(i);
    for (std::size_t g : group) {
      if (alg.generator_differential(g).is_zero()) {
        throw std::domain_error("generator " + alg.generators()[g].name +
                                " is closed, so its image is not determined by degree 2");
      }
    }
    // Columns: d(h) for h in the group, over the degree deg+1 monomials.
    const auto monomials = alg.basis(deg + 1);
    std::map<Monomial, std::size_t, MonomialOrder> row_of;
    for (std::size_t r = 0; r < monomials.size(); ++r) row_of[monomials[r]] = r;
    RatMatrix system(monomials.size(), group.size());
    for (std::size_t col = 0; col < group.size(); ++col)
      for (const auto& [m, c] : alg.generator_differential(group[col]).terms()) system(row_of.at(m), col) = c;
    if (exact::rref(system).pivot_columns.size() != group.size()) {
      throw std::domain_error("d is not injective on the degree-" + std::to_string(deg) + " generators");
    }

    GeneratorImages partial(alg.size(), alg.zero());
    for (std::size_t i = 0; i < alg.size(); ++i) {
      if (known[i]) {
        partial[i] = *known[i];
      } else {
        // Unknown generators must not occur in lower differentials.
        partial[i] = alg.generator(i);
      }
    }
    for (std::size_t g : group) {
      for (const auto& [m, c] : alg.generator_differential(g).terms())
        for (std::size_t i = 0; i < m.size(); ++i)
          if (m[i] && !known[i]) throw std::domain_error("differential of " + alg.generators()[g].name +
                                                         " involves a generator of equal or higher degree");
      const AlgElement target = apply(alg, partial, alg.generator_differential(g));
      std::vector<mpq_class> rhs(monomials.size(), mpq_class(0));
      for (const auto& [m, c] : target.terms()) rhs[row_of.at(m)] = c;
      const auto sol = exact::rational_solve(system, rhs);
      const std::string name = alg.generators()[g].name;
      if (!sol) {
        ext.reason = "T(d " + name + ") = " + alg.to_string(target) + " is not a boundary of degree-" +
                     std::to_string(deg) + " generators";
        return ext;
      }
      AlgElement img = alg.zero();
      for (std::size_t col = 0; col < group.size(); ++col) {
        if ((*sol)[col].get_den() != 1) {
          ext.reason = "T(" + name + ") would need the non-integral coefficient " + (*sol)[col].get_str() +
                       " on " + alg.generators()[group[col]].name;
          return ext;
        }
        img += (*sol)[col] * alg.generator(group[col]);
      }
      known[g] = img;
    }
  }

  GeneratorImages images;
  for (auto& k : known) images.push_back(*k);
  ext.commutes_with_d = true;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (!(alg.differential(images[i]) == apply(alg, images, alg.generator_differential(i)))) {
      ext.commutes_with_d = false;
    }
  }
  ext.reason = ext.commutes_with_d ? "extended" : "extension does not commute with d";
  ext.images = std::move(images);
  return ext;
}

TransgressionData TransgressionData::standard(bool with_x) {
  TransgressionData t;
  t.base = {"a", "b", "c"};
  if (with_x) t.base.push_back("x");
  t.fibre = {"A", "B", "C"};
  t.images = {{{{1, 2}, mpz_class(1)}}, {{{0, 2}, mpz_class(2)}}, {{{0, 1}, mpz_class(3)}}};
  return t;
}

TransgressionData TransgressionData::from_algebra(const GcAlgebra& alg) {
  TransgressionData t;
  const auto base = base_indices(alg);
  std::vector<std::optional<std::size_t>> position(alg.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    t.base.push_back(alg.generators()[base[j]].name);
    position[base[j]] = j;
  }
  for (std::size_t g = 0; g < alg.size(); ++g) {
    if (alg.generators()[g].degree != 3) continue;
    t.fibre.push_back(alg.generators()[g].name);
    std::map<std::pair<std::size_t, std::size_t>, mpz_class> q;
    for (const auto& [m, c] : alg.generator_differential(g).terms()) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!position[i]) throw std::invalid_argument("transgression of " + t.fibre.back() + " leaves the base");
        for (unsigned e = 0; e < m[i]; ++e) vars.push_back(*position[i]);
      }
      if (vars.size() != 2 || c.get_den() != 1) {
        throw std::invalid_argument("transgression of " + t.fibre.back() + " must be an integral quadratic");
      }
      q[{vars[0], vars[1]}] = c.get_num();
    }
    t.images.push_back(std::move(q));
  }
  return t;
}

std::vector<mpz_class> TransgressionData::coordinates(std::size_t v) const {
  std::vector<mpz_class> out;
  const auto& q = images.at(v);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const auto it = q.find({i, j});
      out.push_back(it == q.end() ? mpz_class(0) : it->second);
    }
  return out;
}

IntMatrix TransgressionData::image_lattice() const {
  const std::size_t k = base.size();
  IntMatrix rows(fibre.size(), k * (k + 1) / 2);
  for (std::size_t v = 0; v < fibre.size(); ++v) {
    const auto coords = coordinates(v);
    for (std::size_t j = 0; j < coords.size(); ++j) rows(v, j) = coords[j];
  }
  return exact::hermite_normal_form(rows);
}

std::string TransgressionData::image_to_string(
    const std::map<std::pair<std::size_t, std::size_t>, mpz_class>& q) const {
  std::string s;
  for (const auto& [ij, c] : q) {
    if (c == 0) continue;
    const std::string mono = ij.first == ij.second ? base[ij.first] + "^2" : base[ij.first] + "*" + base[ij.second];
    const mpz_class mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    s += (mag == 1 ? "" : mag.get_str() + "*") + mono;
  }
  return s.empty() ? "0" : s;
}

std::map<std::pair<std::size_t, std::size_t>, mpz_class> transformed_image(const IntMatrix& m,
                                                                           const TransgressionData& tau,
                                                                           std::size_t v) {
  const std::size_t k = tau.base.size();
  std::map<std::pair<std::size_t, std::size_t>, mpz_class> out;
  for (const auto& [ij, q] : tau.images.at(v)) {
    const auto [i, j] = ij;
    for (std::size_t r = 0; r < k; ++r) {
      if (m(r, i) == 0) continue;
      for (std::size_t s = 0; s < k; ++s) {
        if (m(s, j) == 0) continue;
        out[{std::min(r, s), std::max(r, s)}] += q * m(r, i) * m(s, j);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool admissible_h2_matrix(const IntMatrix& m, const TransgressionData& tau) {
  if (abs(det_or_throw(m, tau.base.size())) != 1) throw std::invalid_argument("matrix is not unimodular");
  return admissible_in(m, tau, tau.image_lattice());
}

std::vector<IntMatrix> signed_permutation_matrices(std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IntMatrix> out;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      IntMatrix m(k, k);
      for (std::size_t j = 0; j < k; ++j) m(perm[j], j) = (mask >> j) & 1 ? -1 : 1;
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<IntMatrix> enumerate_admissible_signed_permutations(const TransgressionData& tau) {
  const IntMatrix lattice = tau.image_lattice();
  std::vector<IntMatrix> out;
  for (auto& m : signed_permutation_matrices(tau.base.size()))
    if (admissible_in(m, tau, lattice)) out.push_back(std::move(m));
  return out;
}

std::vector<IntMatrix> diagonal_sign_matrices(std::size_t k) {
  std::vector<IntMatrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    IntMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) m(j, j) = (mask >> j) & 1 ? -1 : 1;
    out.push_back(std::move(m));
  }
  return out;
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

UnimodularSweep sweep_unimodular(const TransgressionData& tau, int bound, const exact::ProgressHook& progress) {
  if (tau.base.size() != 3) throw std::invalid_argument("the unimodular sweep needs a 3-variable base");
  if (bound < 0) throw std::invalid_argument("sweep bound must be >= 0");
  const IntMatrix lattice = tau.image_lattice();
  UnimodularSweep sweep;
  sweep.bound = bound;
  const int width = 2 * bound + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= static_cast<std::uint64_t>(width);
  long e[9];
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 8; i >= 0; --i) {
      e[i] = static_cast<long>(rest % static_cast<std::uint64_t>(width)) - bound;
      rest /= static_cast<std::uint64_t>(width);
    }
    ++sweep.examined;
    if (progress && sweep.examined % 65536 == 0 && !progress(sweep.examined)) throw exact::Cancelled();
    const long det = e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
                     e[2] * (e[3] * e[7] - e[4] * e[6]);
    if (det != 1 && det != -1) continue;
    ++sweep.unimodular;
    IntMatrix m(3, 3);
    for (int i = 0; i < 9; ++i) m(static_cast<std::size_t>(i / 3), static_cast<std::size_t>(i % 3)) = e[i];
    if (!admissible_in(m, tau, lattice)) continue;
    if (!is_diagonal(m)) sweep.non_diagonal_admissible.push_back(m);
    sweep.admissible.push_back(std::move(m));
  }
  return sweep;
}

bool class_fixed_under(const GcAlgebra& alg, const GeneratorImages& images, const AlgElement& z) {
  if (!alg.differential(z).is_zero()) throw std::invalid_argument("element is not closed");
  if (z.is_zero()) return true;
  const SpanReducer bd = boundaries(alg, alg.degree(z));
  return bd.reduce(apply(alg, images, z) - z).is_zero();
}

Dim9Report verify_dim9(const GcAlgebra& alg, int sweep_bound, const exact::ProgressHook& progress) {
  Dim9Report r;
  r.d_squared_zero = true;
  for (std::size_t i = 0; i < alg.size(); ++i)
    if (!alg.differential(alg.generator_differential(i)).is_zero()) r.d_squared_zero = false;
  r.tau = TransgressionData::from_algebra(alg);
  r.fundamental = fundamental_class(alg);
  const SpanReducer bd = boundaries(alg, 9);
  for (auto& m : diagonal_sign_matrices(r.tau.base.size())) {
    SignAutomorphismResult s;
    s.base_map = m;
    Extension ext = extend_automorphism(alg, m);
    s.extended = ext.extended() && ext.commutes_with_d;
    if (s.extended) {
      s.images = *ext.images;
      s.fixed = bd.reduce(apply(alg, s.images, r.fundamental.representative) - r.fundamental.representative).is_zero();
    }
    r.sign_automorphisms.push_back(std::move(s));
  }
  r.signed_permutations = signed_permutation_matrices(r.tau.base.size()).size();
  r.admissible_signed_permutations = enumerate_admissible_signed_permutations(r.tau);
  if (sweep_bound > 0 && r.tau.base.size() == 3) r.sweep = sweep_unimodular(r.tau, sweep_bound, progress);
  return r;
}

bool Dim13Report::passed() const {
  return samples > 0 && inadmissible == 0 && extension_failures == 0 && fixed == samples &&
         deviations_rejected == deviations_tested;
}

Dim13Report dim13_check(int star_bound, const exact::ProgressHook& progress) {
  if (star_bound < 0) throw std::invalid_argument("star bound must be >= 0");
  const GcAlgebra alg = minimal_model_with_x();
  const TransgressionData tau = TransgressionData::standard(true);
  const IntMatrix lattice = tau.image_lattice();
  const std::size_t xi = alg.index_of("x");

  Dim13Report rep;
  rep.star_bound = star_bound;
  const FundamentalClassReport fc = fundamental_class(alg);
  const AlgElement x2 = alg.power(alg.generator(xi), 2);
  const AlgElement w = alg.multiply(fc.representative, x2);
  rep.representative = w;
  const SpanReducer bd = boundaries(alg, 13);
  const AlgElement w_reduced = bd.reduce(w);
  if (w_reduced.is_zero()) throw std::logic_error("z x^2 is a boundary");
  const auto& [lead, lead_coeff] = *w_reduced.terms().begin();

  const int width = 2 * star_bound + 1;
  for (unsigned signs = 0; signs < 16; ++signs)
    for (int s0 = 0; s0 < width; ++s0)
      for (int s1 = 0; s1 < width; ++s1)
        for (int s2 = 0; s2 < width; ++s2) {
          IntMatrix m(4, 4);
          for (std::size_t i = 0; i < 4; ++i) m(i, i) = (signs >> i) & 1 ? -1 : 1;
          m(0, 3) = s0 - star_bound;
          m(1, 3) = s1 - star_bound;
          m(2, 3) = s2 - star_bound;
          ++rep.samples;
          if (progress && !progress(rep.samples)) throw exact::Cancelled();
          auto mark_bad = [&] {
            if (!rep.first_bad_sample) rep.first_bad_sample = m;
          };
          if (!admissible_in(m, tau, lattice)) {
            ++rep.inadmissible;
            mark_bad();
            continue;
          }
          const Extension ext = extend_automorphism(alg, m);
          if (!ext.extended() || !ext.commutes_with_d) {
            ++rep.extension_failures;
            mark_bad();
            continue;
          }
          const AlgElement tw = apply(alg, *ext.images, w);
          // d preserves the x-degree, so H^13 splits by it; compare the
          // x-degree 2 component with w.
          AlgElement same(alg.size()), rest(alg.size());
          for (const auto& [mono, c] : tw.terms()) (mono[xi] == 2 ? same : rest).add_term(mono, c);
          const AlgElement r_same = bd.reduce(same);
          const mpq_class lambda = r_same.coeff(lead) / lead_coeff;
          if (!(r_same == lambda * w_reduced)) {
            ++rep.other;
            mark_bad();
          } else if (lambda == 1) {
            ++rep.fixed;
          } else if (lambda == -1) {
            ++rep.reversed;
            mark_bad();
          } else {
            ++rep.other;
            mark_bad();
          }
          if (!bd.reduce(rest).is_zero()) ++rep.mixed_components;
        }

  // Letting x enter the image of a, b or c, or swapping a with x, breaks
  // admissibility.
  std::vector<IntMatrix> deviations;
  for (std::size_t i = 0; i < 3; ++i)
    for (int v : {1, -1}) {
      IntMatrix m = IntMatrix::identity(4);
      m(3, i) = v;
      deviations.push_back(m);
    }
  {
    IntMatrix swap(4, 4);
    swap(3, 0) = swap(0, 3) = swap(1, 1) = swap(2, 2) = 1;
    deviations.push_back(swap);
  }
  for (const auto& m : deviations) {
    ++rep.deviations_tested;
    if (!admissible_in(m, tau, lattice)) ++rep.deviations_rejected;
  }
  return rep;
}

Certificate to_certificate(const Dim9Report& r, const std::string& algebra_source) {
  const GcAlgebra alg = algebra_source == "built-in" ? minimal_model() : parse_algebra(algebra_source);
  Certificate c;
  c.kind = CertificateKind::DgaDim9;
  c.claim =
      "The degree-9 class (d alpha) beta + eps*ABC of the minimal model is nonzero and fixed by every "
      "automorphism admissible on H^2, so it is never sent to its negative";
  c.inputs = {{"algebra", algebra_source == "built-in" ? Json("built-in") : Json(algebra_source)},
              {"dimension", 9},
              {"sweep_bound", r.sweep ? r.sweep->bound : 0}};

  c.add({"d_squared_zero", r.d_squared_zero ? Verdict::Pass : Verdict::Fail, Json::object()});

  const auto& f = r.fundamental;
  c.add({"closed_representative",
         f.epsilon != 0 ? Verdict::Pass : Verdict::Fail,
         {{"epsilon", f.epsilon},
          {"representative", alg.to_string(f.representative)},
          {"d_with_plus", alg.to_string(f.d_plus)},
          {"d_with_minus", alg.to_string(f.d_minus)},
          {"note", "closedness fixes the sign of ABC under the Koszul convention; the class is commonly written "
                   "(d alpha) beta - ABC under another sign convention"}}});

  c.add({"no_ABC_term_in_degree8_differentials",
         f.degree8_with_abc.empty() ? Verdict::Pass : Verdict::Fail,
         {{"degree8_basis_size", f.degree8_basis_size}, {"offending", monomial_list(alg, f.degree8_with_abc)}}});

  c.add({"class_not_exact", f.exact ? Verdict::Fail : Verdict::Pass,
         {{"degree9_boundary_rank", f.degree9_boundary_rank}}});

  Json signs = Json::array();
  bool all_fixed = !r.sign_automorphisms.empty();
  for (const auto& s : r.sign_automorphisms) {
    all_fixed = all_fixed && s.extended && s.fixed;
    Json e = {{"base_map", to_json(s.base_map)}, {"extended", s.extended}, {"fixed", s.fixed}};
    if (s.extended) e["images"] = images_to_json(alg, s.images);
    signs.push_back(e);
  }
  c.add({"diagonal_sign_automorphisms_fix_class", all_fixed ? Verdict::Pass : Verdict::Fail, {{"maps", signs}}});

  Json adm = Json::array();
  bool all_diag = true;
  for (const auto& m : r.admissible_signed_permutations) {
    adm.push_back(to_json(m));
    all_diag = all_diag && is_diagonal(m);
  }
  const bool perm_ok = all_diag && r.admissible_signed_permutations.size() == (std::size_t{1} << r.tau.base.size());
  c.add({"admissible_signed_permutations_are_diagonal", perm_ok ? Verdict::Pass : Verdict::Fail,
         {{"signed_permutations", r.signed_permutations},
          {"admissible_count", r.admissible_signed_permutations.size()},
          {"admissible", adm}}});

  if (r.sweep) {
    Json bad = Json::array();
    for (const auto& m : r.sweep->non_diagonal_admissible) bad.push_back(to_json(m));
    c.add({"bounded_unimodular_sweep",
           r.sweep->non_diagonal_admissible.empty() ? Verdict::Pass : Verdict::Fail,
           {{"bound", r.sweep->bound},
            {"examined", to_json_u64(r.sweep->examined)},
            {"unimodular", to_json_u64(r.sweep->unimodular)},
            {"admissible", r.sweep->admissible.size()},
            {"non_diagonal_admissible", bad}}});
  }

  Json tau = Json::object();
  for (std::size_t v = 0; v < r.tau.fibre.size(); ++v) tau[r.tau.fibre[v]] = r.tau.image_to_string(r.tau.images[v]);
  c.witnesses = {{"transgression", tau}, {"representative", alg.to_string(f.representative)}};
  c.references = {"diagonal-h2-lemma", "degree9-fundamental-class", "sign-automorphisms-fix-class"};
  c.timestamp = current_utc_timestamp();
  return c;
}

Certificate to_certificate(const Dim13Report& r) {
  const GcAlgebra alg = minimal_model_with_x();
  Certificate c;
  c.kind = CertificateKind::DgaDim13;
  c.claim =
      "For every sampled admissible automorphism of the minimal model tensor Q[x], the class "
      "((d alpha) beta + eps*ABC) x^2 maps to +1 times itself modulo boundaries, never -1";
  c.inputs = {{"star_bound", r.star_bound}, {"dimension", 13}};
  const Json bad = r.first_bad_sample ? to_json(*r.first_bad_sample) : Json(nullptr);
  c.add({"pattern_admissible", r.inadmissible == 0 ? Verdict::Pass : Verdict::Fail,
         {{"samples", to_json_u64(r.samples)}, {"inadmissible", to_json_u64(r.inadmissible)}}});
  c.add({"extensions_exist", r.extension_failures == 0 ? Verdict::Pass : Verdict::Fail,
         {{"failures", to_json_u64(r.extension_failures)}}});
  c.add({"coefficient_is_plus_one", r.fixed == r.samples && r.samples > 0 ? Verdict::Pass : Verdict::Fail,
         {{"plus_one", to_json_u64(r.fixed)},
          {"minus_one", to_json_u64(r.reversed)},
          {"other", to_json_u64(r.other)},
          {"first_bad_sample", bad}}});
  c.add({"deviations_inadmissible", r.deviations_rejected == r.deviations_tested ? Verdict::Pass : Verdict::Fail,
         {{"tested", to_json_u64(r.deviations_tested)}, {"rejected", to_json_u64(r.deviations_rejected)}}});
  c.add({"other_x_degrees_are_boundaries", r.mixed_components == 0 ? Verdict::Pass : Verdict::NoObstruction,
         {{"samples_with_nonzero_components", to_json_u64(r.mixed_components)}},
         false});
  c.witnesses = {{"representative", alg.to_string(r.representative)}};
  c.references = {"dimension13-product-with-cp2", "degree9-fundamental-class"};
  c.timestamp = current_utc_timestamp();
  return c;
}

Certificate admissibility_certificate(const GcAlgebra& alg, const IntMatrix& m) {
  const TransgressionData tau = TransgressionData::from_algebra(alg);
  Certificate c;
  c.kind = CertificateKind::DgaDim9;
  c.claim = "The H^2 automorphism with columns as images is admissible, extends to the minimal model and fixes "
            "the degree-9 class";
  c.inputs = {{"matrix", to_json(m)}, {"dimension", 9}};
  c.references = {"diagonal-h2-lemma", "degree9-fundamental-class"};
  c.timestamp = current_utc_timestamp();
  if (m.rows() != tau.base.size() || m.cols() != tau.base.size()) {
    throw std::invalid_argument("matrix must be " + std::to_string(tau.base.size()) + "x" +
                                std::to_string(tau.base.size()));
  }
  const mpz_class det = exact::determinant(m);
  const bool unimodular = abs(det) == 1;
  c.add({"unimodular", unimodular ? Verdict::Pass : Verdict::Fail, {{"determinant", to_json(det)}}});
  if (!unimodular) return c;

  const bool admissible = admissible_h2_matrix(m, tau);
  Json images = Json::object();
  for (std::size_t v = 0; v < tau.fibre.size(); ++v) {
    images[tau.fibre[v]] = tau.image_to_string(transformed_image(m, tau, v));
  }
  c.add({"admissible", admissible ? Verdict::Pass : Verdict::Fail, {{"transformed_images", images}}});
  if (!admissible) return c;

  const Extension ext = extend_automorphism(alg, m);
  c.add({"extends", ext.extended() && ext.commutes_with_d ? Verdict::Pass : Verdict::Fail,
         {{"reason", ext.reason}}});
  if (!ext.extended()) return c;

  const FundamentalClassReport f = fundamental_class(alg);
  const bool fixed = class_fixed_under(alg, *ext.images, f.representative);
  c.add({"fixes_class", fixed ? Verdict::Pass : Verdict::Fail,
         {{"representative", alg.to_string(f.representative)}}});
  c.witnesses = {{"images", images_to_json(alg, *ext.images)}};
  return c;
}

}  // namespace chirality::dga
