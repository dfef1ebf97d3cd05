#include <doctest.h>

#include "chirality/exact/number_theory.hpp"
#include "chirality/lens/lens.hpp"
#include "oracles.hpp"

using namespace chirality;
using namespace chirality::lens;

namespace {

// Smallest prime p = m 2^k + 1 with m odd and p >= 5, by plain scanning.
std::uint64_t scan_progression(unsigned k) {
  for (std::uint64_t p = 5;; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    std::uint64_t q = p - 1;
    unsigned v = 0;
    while (q % 2 == 0) q /= 2, ++v;
    if (v == k) return p;
  }
}

}  // namespace

TEST_SUITE("lens") {
  TEST_CASE("validation and naming") {
    CHECK(LensSpace(7, {1, 8}).to_string() == "L_7(1,1)");
    CHECK(LensSpace(7, {1, 1}).dimension() == 3);
    CHECK_THROWS_AS(LensSpace(1, {1}), std::invalid_argument);
    CHECK_THROWS_AS(LensSpace(6, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LensSpace(5, {}), std::invalid_argument);
    CHECK_THROWS(is_strongly_chiral(LensSpace(2, {1, 1})));
  }

  TEST_CASE("L_5(1,1) has a degree -1 self-map with witness 2") {
    const auto r = is_strongly_chiral(LensSpace(5, {1, 1}));
    CHECK_FALSE(r.strongly_chiral);
    CHECK(r.witness == std::optional<std::uint64_t>(2));
    CHECK(to_certificate(LensSpace(5, {1, 1}), r).verdict() == Verdict::Fail);
  }

  TEST_CASE("L_7(1,1) is strongly chiral") {
    const LensSpace l(7, {1, 1});
    const auto r = is_strongly_chiral(l);
    CHECK(r.strongly_chiral);
    CHECK(to_certificate(l, r).verdict() == Verdict::Pass);
    std::vector<std::uint64_t> degrees;
    for (const auto& [d, e] : degree_set(l)) degrees.push_back(d);
    CHECK(degrees == std::vector<std::uint64_t>{0, 1, 2, 4});
  }

  TEST_CASE("strong chirality agrees with exhaustive powering") {
    for (std::uint64_t t = 3; t <= 400; ++t)
      for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = is_strongly_chiral(LensSpace(t, std::vector<std::uint64_t>(n, 1)));
        const std::uint64_t e = oracle::minus_one_power_witness(t, n);
        CHECK(r.strongly_chiral == (e == t));
        if (e != t) CHECK(r.witness == std::optional<std::uint64_t>(e));
      }
  }

  TEST_CASE("linking obstruction") {
    CHECK(linking_obstruction(3, 3).verdict == Verdict::Pass);
    CHECK(linking_obstruction(6, 7).verdict == Verdict::Pass);
    CHECK(linking_obstruction(5, 3).verdict == Verdict::NoObstruction);
    CHECK(linking_obstruction(5, 3).residue.witness == std::optional<std::uint64_t>(2));
    CHECK_THROWS_AS(linking_obstruction(3, 5), std::invalid_argument);
  }

  TEST_CASE("reversals of order m exist only when m does not divide n") {
    // L_13 with n = 6 params: c = 2 is a primitive root, c^6 = -1.
    const LensSpace l(13, {1, 1, 1, 1, 1, 1});
    CHECK(no_reversal_of_order(l, 3).verdict == Verdict::Pass);
    CHECK(no_reversal_of_order(l, 6).verdict == Verdict::Pass);
    CHECK(no_reversal_of_order(l, 4).verdict == Verdict::Fail);
  }

  TEST_CASE("minimal-order construction for k = 1..6 matches a progression scan") {
    const std::uint64_t expected_p[] = {7, 5, 41, 17};
    for (unsigned k = 1; k <= 6; ++k) {
      const auto c = theoremc_construct(k);
      CHECK(c.certificate.p == scan_progression(k));
      if (k <= 4) CHECK(c.certificate.p == expected_p[k - 1]);
      std::uint64_t smallest = 0;
      for (std::uint64_t g = 1; !smallest; ++g)
        if (oracle::naive_order(g, c.certificate.p) == c.certificate.p - 1) smallest = g;
      CHECK(c.certificate.c == smallest);
      CHECK(oracle::naive_pow(c.certificate.c, c.certificate.n, c.certificate.p) == c.certificate.p - 1);
      CHECK(c.certificate.verdict() == Verdict::Pass);
      CHECK(c.lens.dimension() == c.certificate.p - 2);
    }
    CHECK(theoremc_construct(1).certificate.c == 3);
    CHECK(theoremc_construct(2).certificate.c == 2);
    CHECK(theoremc_construct(3).certificate.c == 6);
    CHECK(theoremc_construct(4).certificate.c == 3);
    CHECK_THROWS_AS(theoremc_construct(0), std::invalid_argument);
    CHECK_THROWS_AS(theoremc_construct(5, 50), NoPrimeFound);
  }
}
