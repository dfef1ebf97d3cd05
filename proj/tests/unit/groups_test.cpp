#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "chirality/groups/metacyclic.hpp"
#include "oracles.hpp"

using namespace chirality;
using namespace chirality::groups;

namespace {

// Direct reading of the predicate over unordered pairs, both orientations.
bool naive_h4(const std::vector<std::uint64_t>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && ((p[i] == 3 && p[j] % 3 == 1) || std::gcd(p[i] - 1, p[j] - 1) > 2)) return true;
  return false;
}

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("predicate examples") {
    CHECK(h4_condition(MetacyclicTuple({3, 7})).holds);
    CHECK(h4_condition(MetacyclicTuple({5, 13})).holds);
    CHECK_FALSE(h4_condition(MetacyclicTuple({3, 5})).holds);
    CHECK_FALSE(h4_condition(MetacyclicTuple({7})).holds);
    CHECK_FALSE(h4_condition(MetacyclicTuple({})).holds);
    const auto w = h4_condition(MetacyclicTuple({5, 13}));
    CHECK(w.pair == std::optional<std::pair<std::uint64_t, std::uint64_t>>({5, 13}));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(MetacyclicTuple({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(MetacyclicTuple({9}), std::invalid_argument);
    CHECK_THROWS_AS(MetacyclicTuple({5, 5}), std::invalid_argument);
    CHECK(MetacyclicTuple({3, 7}).to_string() == "(3,7)");
  }

  TEST_CASE("group orders") {
    CHECK(group_order(MetacyclicTuple({})) == 1);
    CHECK(group_order(MetacyclicTuple({3, 7})) == 252);
    CHECK(group_order(MetacyclicTuple({5, 13})) == 3120);
  }

  TEST_CASE("predicate matches the naive reading and ignores order") {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p < 40; ++p)
      if (oracle::trial_division_prime(p)) primes.push_back(p);
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
      if (__builtin_popcountll(mask) > 3) continue;
      std::vector<std::uint64_t> t;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) t.push_back(primes[i]);
      const bool expected = naive_h4(t);
      std::sort(t.begin(), t.end());
      do CHECK(h4_condition(MetacyclicTuple(t)).holds == expected);
      while (std::next_permutation(t.begin(), t.end()));
    }
  }

  TEST_CASE("search returns the smallest orders of a full subset enumeration") {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p <= 41; ++p)
      if (oracle::trial_division_prime(p)) primes.push_back(p);
    std::map<mpz_class, std::vector<std::uint64_t>> by_order;
    for (std::size_t mask = 1; mask < (std::size_t{1} << primes.size()); ++mask) {
      std::vector<std::uint64_t> t;
      mpz_class order = 1;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) {
          t.push_back(primes[i]);
          order *= primes[i] * (primes[i] - 1);
        }
      if (!naive_h4(t)) continue;
      auto it = by_order.find(order);
      if (it == by_order.end() || t < it->second) by_order[order] = t;
    }
    const auto s = search_tuples(12, 41);
    REQUIRE(s.tuples.size() == 12);
    CHECK_FALSE(s.partial);
    auto it = by_order.begin();
    for (std::size_t i = 0; i < 12; ++i, ++it) {
      CHECK(s.orders[i] == it->first);
      CHECK(s.tuples[i].primes() == it->second);
    }
    CHECK(s.tuples[0].primes() == std::vector<std::uint64_t>{3, 7});
  }

  TEST_CASE("count 10 below 200 and partial results") {
    const auto s = search_tuples(10, 200);
    CHECK(s.tuples.size() == 10);
    for (std::size_t i = 0; i + 1 < s.orders.size(); ++i) CHECK(s.orders[i] < s.orders[i + 1]);
    CHECK(to_certificate(s).verdict() == Verdict::Pass);
    const auto small = search_tuples(3, 7);
    CHECK(small.partial);
    CHECK(small.tuples.size() == 2);  // (3,7) and (3,5,7)
    CHECK(to_certificate(small).verdict() == Verdict::Inconclusive);
    CHECK_THROWS(search_tuples(0, 10));
  }
}
