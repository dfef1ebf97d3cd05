#include <doctest.h>

#include <random>

#include "chirality/exact/matrix.hpp"
#include "chirality/exact/number_theory.hpp"
#include "chirality/exact/polynomial.hpp"
#include "oracles.hpp"

using namespace chirality::exact;

namespace {

IntPolynomial from_roots(const std::vector<long>& roots) {
  IntPolynomial p{mpz_class(1)};
  for (long r : roots) p = p * IntPolynomial{mpz_class(-r), mpz_class(1)};
  return p;
}

IntPolynomial family_poly(std::size_t n) {
  std::vector<mpz_class> c(n + 1, 0);
  c[0] = 1;
  c[1] = -1;
  c[n] = 1;
  return IntPolynomial(c);
}

bool in_lattice(const IntMatrix& hnf, const std::vector<mpz_class>& v) { return lattice_coordinates(hnf, v).has_value(); }

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(20261017);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const IntMatrix m = oracle::random_matrix(rng, n, n, -6, 6);
      CHECK(determinant(m) == oracle::leibniz_det(m));
    }
  }

  TEST_CASE("char_poly evaluates to det(xI - M) at integer points") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const IntMatrix m = oracle::random_matrix(rng, n, n, -4, 4);
      const IntPolynomial p = char_poly(m);
      CHECK(p.degree() == static_cast<int>(n));
      for (long x = -3; x <= 3; ++x) {
        const IntMatrix shifted = mpz_class(x) * IntMatrix::identity(n) - m;
        CHECK(p(mpz_class(x)) == oracle::leibniz_det(shifted));
      }
    }
  }

  TEST_CASE("companion matrix has the given characteristic polynomial") {
    for (std::size_t n = 2; n <= 12; ++n) {
      const IntPolynomial p = family_poly(n);
      CHECK(char_poly(companion_matrix(p)) == p);
    }
  }

  TEST_CASE("integer inverse") {
    const IntMatrix f = IntMatrix::from_rows({{0, -1}, {1, 1}});
    CHECK(f * integer_inverse(f) == IntMatrix::identity(2));
    CHECK_THROWS_AS(integer_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), std::domain_error);
  }

  TEST_CASE("Hermite normal form is invariant under unimodular row operations") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix m = oracle::random_matrix(rng, 3, 4, -5, 5);
      IntMatrix u = IntMatrix::identity(3);
      // Random product of elementary matrices.
      for (int step = 0; step < 6; ++step) {
        IntMatrix e = IntMatrix::identity(3);
        e(step % 3, (step + 1) % 3) = static_cast<long>(rng() % 5) - 2;
        u = e * u;
      }
      const IntMatrix h = hermite_normal_form(m);
      CHECK(hermite_normal_form(u * m) == h);
      CHECK(hermite_normal_form(h) == h);
      for (std::size_t i = 0; i < m.rows(); ++i) CHECK(in_lattice(h, m.row(i)));
    }
  }

  TEST_CASE("integer kernel solves A x = 0 with the right rank") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const IntMatrix a = oracle::random_matrix(rng, 2, 5, -3, 3);
      const IntMatrix k = integer_kernel(a);
      CHECK(k.rows() == 5 - rational_rank(a));
      for (std::size_t i = 0; i < k.rows(); ++i) {
        IntMatrix x(5, 1, k.row(i));
        CHECK(a * x == IntMatrix(2, 1));
      }
    }
  }

  TEST_CASE("lattice box enumeration matches a naive search of the commutant") {
    const IntMatrix f = IntMatrix::from_rows({{0, -1}, {1, 1}});
    const IntMatrix hnf = intertwiner_lattice_hnf(f, f);
    std::size_t enumerated = 0;
    enumerate_lattice_box(hnf, 3, [&](const std::vector<mpz_class>&) { ++enumerated; });
    std::size_t naive = 0;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int c = -3; c <= 3; ++c)
          for (int d = -3; d <= 3; ++d) {
            const IntMatrix g = IntMatrix::from_rows({{a, b}, {c, d}});
            naive += g * f == f * g;
          }
    CHECK(enumerated == naive);
    for (const auto& g : intertwiner_lattice(f, integer_inverse(f))) CHECK(g * f == integer_inverse(f) * g);
  }

  TEST_CASE("Sturm counts distinct real roots") {
    CHECK(sturm_real_root_count(from_roots({-2, 0, 3})) == 3);
    const IntPolynomial x2_plus_1{mpz_class(1), mpz_class(0), mpz_class(1)};
    CHECK(sturm_real_root_count(from_roots({1, 5}) * x2_plus_1) == 2);
    CHECK(sturm_real_root_count(x2_plus_1) == 0);
    // X^n - X + 1 has no real root for even n and exactly one for odd n.
    for (std::size_t n = 2; n <= 20; ++n) CHECK(sturm_real_root_count(family_poly(n)) == n % 2);
    CHECK_THROWS(sturm_real_root_count(from_roots({1, 1})));
  }

  TEST_CASE("squarefree and reciprocal polynomials") {
    CHECK_FALSE(poly_is_squarefree(from_roots({1, 1, -2})));
    CHECK(poly_is_squarefree(family_poly(6)));
    // X^2 - X + 1 is palindromic; X^4 - X + 1 reverses to X^4 - X^3 + 1.
    CHECK(reciprocal_poly(family_poly(2)) == family_poly(2));
    CHECK(reciprocal_poly(family_poly(4)) ==
          IntPolynomial{mpz_class(1), mpz_class(0), mpz_class(0), mpz_class(-1), mpz_class(1)});
    CHECK(family_poly(4).to_string() == "X^4 - X + 1");
  }

  TEST_CASE("primality and factorization against trial division") {
    for (std::uint64_t n = 1; n < 20000; ++n) CHECK(is_prime(n) == oracle::trial_division_prime(n));
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
    CHECK_FALSE(is_prime(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
    for (std::uint64_t n : {2ULL, 360ULL, 9699690ULL, 1000000007ULL * 3ULL}) {
      std::uint64_t product = 1;
      for (const auto& pp : factorize(n)) {
        CHECK(oracle::trial_division_prime(pp.prime));
        for (unsigned e = 0; e < pp.exponent; ++e) product *= pp.prime;
      }
      CHECK(product == n);
    }
  }

  TEST_CASE("primitive roots and orders against brute force") {
    for (std::uint64_t p = 3; p < 600; p += 2) {
      if (!oracle::trial_division_prime(p)) continue;
      std::uint64_t smallest = 0;
      for (std::uint64_t c = 1; c < p && !smallest; ++c)
        if (oracle::naive_order(c, p) == p - 1) smallest = c;
      CHECK(primitive_root(p).value() == smallest);
      CHECK(multiplicative_order(2, p) == oracle::naive_order(2, p));
    }
    CHECK(powmod(3, 200, 1009) == oracle::naive_pow(3, 200, 1009));
    const mpz_class big("18446744073709551615");
    CHECK(mulmod(~0ULL, ~0ULL, 1000000007ULL) == mpz_class(big * big % 1000000007).get_ui());
    CHECK(invmod(3, 7) == 5);
    CHECK_THROWS_AS(invmod(2, 4), std::domain_error);
  }

  TEST_CASE("-1 is a square mod t: factorization rule against squaring") {
    for (std::uint64_t t = 2; t < 3000; ++t) {
      const auto fast = minus_one_is_qr(t, 0);
      const auto slow = minus_one_is_qr_exhaustive(t);
      CHECK(fast.is_residue == slow.is_residue);
      CHECK(fast.witness == slow.witness);
    }
    CHECK_FALSE(minus_one_is_qr(3).is_residue);
    CHECK_FALSE(minus_one_is_qr(6).is_residue);
    CHECK(minus_one_is_qr(5).witness == std::optional<std::uint64_t>(2));
  }
}
