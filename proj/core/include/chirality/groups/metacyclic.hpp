#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chirality/cert/certificate.hpp"
#include "chirality/exact/matrix.hpp"

namespace chirality::groups {

/// Product of split metacyclic groups Z/p ⋊ Z/(p-1), one per prime.
class MetacyclicTuple {
 public:
  /// Throws std::invalid_argument unless the entries are distinct odd primes.
  explicit MetacyclicTuple(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  /// "(3,7)"
  std::string to_string() const;
  friend bool operator==(const MetacyclicTuple&, const MetacyclicTuple&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

struct H4Result {
  bool holds = false;
  /// First witnessing (p_i, p_j) with i != j in lexicographic index order.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;
  std::string clause;
};

/// Some i != j has (p_i = 3 and p_j = 1 mod 3) or gcd(p_i - 1, p_j - 1) > 2.
H4Result h4_condition(const MetacyclicTuple& t);

/// prod p_i (p_i - 1); 1 for the empty tuple.
mpz_class group_order(const MetacyclicTuple& t);

struct TupleSearch {
  std::size_t requested = 0;
  std::uint64_t prime_bound = 0;
  std::vector<MetacyclicTuple> tuples;
  std::vector<mpz_class> orders;
  /// Fewer than `requested` tuples exist over the primes below the bound.
  bool partial = false;
};

/// The `count` smallest distinct group orders among tuples of odd primes
/// <= prime_bound satisfying h4_condition, smallest first; for an order
/// reached by several tuples the lexicographically first is kept.
TupleSearch search_tuples(std::size_t count, std::uint64_t prime_bound, const exact::ProgressHook& progress = {});

Certificate to_certificate(const TupleSearch& s);

}  // namespace chirality::groups
