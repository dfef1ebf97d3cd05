#pragma once

// Slow reference implementations used only as test oracles.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "chirality/exact/matrix.hpp"

namespace oracle {

using chirality::exact::IntMatrix;

inline mpz_class leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t naive_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (b % m) % m;
  return r;
}

inline std::uint64_t naive_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = x * (a % m) % m;
  }
  return 0;
}

// Smallest e in [0, t) with e^n = -1 mod t, or t when none exists.
inline std::uint64_t minus_one_power_witness(std::uint64_t t, std::uint64_t n) {
  for (std::uint64_t e = 0; e < t; ++e)
    if (naive_pow(e, n, t) == t - 1) return e;
  return t;
}

}  // namespace oracle
