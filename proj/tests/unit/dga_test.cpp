#include <doctest.h>

#include "chirality/dga/algebra.hpp"
#include "chirality/dga/minimal_model.hpp"

using namespace chirality;
using namespace chirality::dga;

namespace {

// Coefficients of 1/(1-t^2)^3 (1+t^3)^3 / (1-t^4)^2 up to t^max.
std::vector<long> hilbert_series(std::size_t max) {
  std::vector<long> s(max + 1, 0);
  s[0] = 1;
  auto times_geometric = [&](std::size_t d) {
    for (std::size_t i = d; i <= max; ++i) s[i] += s[i - d];
  };
  auto times_one_plus = [&](std::size_t d) {
    for (std::size_t i = max; i >= d; --i) s[i] += s[i - d];
  };
  for (int i = 0; i < 3; ++i) times_geometric(2);
  for (int i = 0; i < 3; ++i) times_one_plus(3);
  for (int i = 0; i < 2; ++i) times_geometric(4);
  return s;
}

}  // namespace

TEST_SUITE("dga") {
  const GcAlgebra m = minimal_model();

  TEST_CASE("Koszul signs") {
    CHECK(m.parse("A*B") == -m.parse("B*A"));
    CHECK(m.parse("A*A").is_zero());
    CHECK(m.parse("a*A") == m.parse("A*a"));
    CHECK(m.parse("a*b") == m.parse("b*a"));
    CHECK(m.parse("A*B*C") == m.parse("B*C*A"));
    CHECK(m.parse("A*B*C") == -m.parse("B*A*C"));
    CHECK(m.parse("alpha*A") == m.parse("A*alpha"));
  }

  TEST_CASE("differential by hand") {
    CHECK(m.differential(m.parse("A")) == m.parse("b*c"));
    // d(AB) = dA B - A dB
    CHECK(m.differential(m.parse("A*B")) == m.parse("b*c*B - 2*A*a*c"));
    CHECK(m.differential(m.parse("alpha")) == m.parse("2*a*A - b*B"));
    CHECK(m.differential(m.parse("a^3")).is_zero());
  }

  TEST_CASE("Leibniz rule on basis pairs") {
    for (unsigned p = 2; p <= 5; ++p)
      for (unsigned q = 2; q <= 5; ++q)
        for (const auto& x : m.basis(p))
          for (const auto& y : m.basis(q)) {
            const AlgElement ex = m.monomial(x);
            const AlgElement ey = m.monomial(y);
            const mpq_class sign = p % 2 ? -1 : 1;
            CHECK(m.differential(m.multiply(ex, ey)) ==
                  m.multiply(m.differential(ex), ey) + sign * m.multiply(ex, m.differential(ey)));
          }
  }

  TEST_CASE("d^2 = 0 on every basis monomial up to degree 12") {
    for (unsigned deg = 0; deg <= 12; ++deg)
      for (const auto& mono : m.basis(deg)) CHECK(m.differential(m.differential(m.monomial(mono))).is_zero());
  }

  TEST_CASE("basis sizes match the Hilbert series") {
    const auto series = hilbert_series(14);
    for (unsigned deg = 0; deg <= 14; ++deg) CHECK(m.basis(deg).size() == static_cast<std::size_t>(series[deg]));
  }

  TEST_CASE("fundamental class") {
    const auto f = fundamental_class(m);
    CHECK(f.epsilon == 1);
    CHECK(f.d_plus.is_zero());
    CHECK_FALSE(f.d_minus.is_zero());
    CHECK(f.degree8_with_abc.empty());
    CHECK_FALSE(f.exact);
    CHECK(m.differential(f.representative).is_zero());
    CHECK(m.degree(f.representative) == 9);
  }

  TEST_CASE("parse and print round trip; text format") {
    const AlgElement x = m.parse("(2*a*A - b*B)*beta + 1/2*A*B*C");
    CHECK(m.parse(m.to_string(x)) == x);
    const GcAlgebra parsed = parse_algebra(minimal_model_text());
    REQUIRE(parsed.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(parsed.generators()[i].name == m.generators()[i].name);
      CHECK(m.to_string(parsed.generator_differential(i)) == m.to_string(m.generator_differential(i)));
    }
    CHECK_THROWS_AS(parse_algebra("gen a 2\ngen A 3\nd A = a\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("gen a 2\nd A = a*a\n"), std::invalid_argument);
    CHECK_THROWS_AS(m.parse("a +"), std::invalid_argument);
  }

  TEST_CASE("span reducer decides membership") {
    SpanReducer r(m.size());
    CHECK(r.insert(m.parse("a*b + b*c")));
    CHECK(r.insert(m.parse("b*c")));
    CHECK_FALSE(r.insert(m.parse("a*b")));
    CHECK(r.reduce(m.parse("3*a*b - b*c")).is_zero());
    CHECK_FALSE(r.reduce(m.parse("a*c")).is_zero());
    // Degree 4 is spanned by quadratics in a, b, c (closed) and alpha, beta.
    CHECK(boundaries(m, 5).rank() == 2);
  }

  TEST_CASE("admissible H^2 matrices") {
    const auto tau = TransgressionData::standard();
    const auto admissible = enumerate_admissible_signed_permutations(tau);
    CHECK(signed_permutation_matrices(3).size() == 48);
    CHECK(admissible.size() == 8);
    for (const auto& a : admissible) CHECK(is_diagonal(a));
    const IntMatrix swap_ab = IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK_FALSE(admissible_h2_matrix(swap_ab, tau));
    CHECK_THROWS_AS(admissible_h2_matrix(IntMatrix::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), tau),
                    std::invalid_argument);
    const auto sweep = sweep_unimodular(tau, 1);
    CHECK(sweep.examined == 19683);
    CHECK(sweep.non_diagonal_admissible.empty());
    CHECK(sweep.admissible.size() == 8);
  }

  TEST_CASE("extensions: sign maps extend and fix the class, the a-b swap is rejected") {
    const auto f = fundamental_class(m);
    for (const auto& s : diagonal_sign_matrices(3)) {
      const Extension e = extend_automorphism(m, s);
      REQUIRE(e.extended());
      CHECK(e.commutes_with_d);
      CHECK(class_fixed_under(m, *e.images, f.representative));
    }
    const Extension swap = extend_automorphism(m, IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK_FALSE(swap.extended());
    CHECK_FALSE(swap.reason.empty());
  }

  TEST_CASE("verify_dim9 on the built-in and parsed models agree") {
    const auto a = to_certificate(verify_dim9(m, 1), "built-in");
    const auto b = to_certificate(verify_dim9(parse_algebra(minimal_model_text()), 1), "built-in");
    CHECK(a.verdict() == Verdict::Pass);
    CHECK(canonical_body(a) == canonical_body(b));
  }

  TEST_CASE("admissibility certificate") {
    CHECK(admissibility_certificate(m, IntMatrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}})).verdict() ==
          Verdict::Pass);
    CHECK(admissibility_certificate(m, IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})).verdict() ==
          Verdict::Fail);
    CHECK(admissibility_certificate(m, IntMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}})).verdict() ==
          Verdict::Fail);
    CHECK_THROWS_AS(admissibility_certificate(m, IntMatrix::identity(2)), std::invalid_argument);
  }

  TEST_CASE("dimension 13 with stars in [-1, 1]") {
    const auto r = dim13_check(1);
    CHECK(r.samples == 16 * 27);
    CHECK(r.fixed == r.samples);
    CHECK(r.reversed == 0);
    CHECK(r.inadmissible == 0);
    CHECK(r.deviations_rejected == r.deviations_tested);
    CHECK(r.deviations_tested > 0);
    CHECK(r.passed());
  }
}
