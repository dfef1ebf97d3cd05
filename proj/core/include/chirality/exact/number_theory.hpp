#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace chirality::exact {

/// Element of Z/modulus. Arithmetic only combines equal moduli.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  Residue pow(std::uint64_t exponent) const;
  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases). Throws std::invalid_argument for n = 0.
bool is_prime(std::uint64_t n);
/// Arbitrary-precision entry point: inputs above 2^64 - 1 are rejected with
/// std::domain_error rather than answered probabilistically.
bool is_prime(const mpz_class& n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending prime-power factorization; empty for n = 1. Throws for n = 0.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Smallest c in [1, p) of multiplicative order p - 1, checked through
/// c^((p-1)/q) != 1 for each prime q | p - 1. Requires an odd prime p.
Residue primitive_root(std::uint64_t p);

/// Multiplicative order of a unit a mod m.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

struct QuadraticResidueAnswer {
  bool is_residue = false;
  /// Smallest k in [0, t) with k^2 = -1 mod t, when one exists.
  std::optional<std::uint64_t> witness;
};

/// Decides whether -1 is a square mod t (t >= 2) from the factorization:
/// yes iff 4 does not divide t and no prime factor is 3 mod 4. The witness
/// is assembled from per-prime-power square roots by CRT. For t below
/// `cross_check_below` the answer is compared against exhaustive squaring.
QuadraticResidueAnswer minus_one_is_qr(std::uint64_t t, std::uint64_t cross_check_below = 10000);

/// Exhaustive reference: squares every residue mod t.
QuadraticResidueAnswer minus_one_is_qr_exhaustive(std::uint64_t t);

}  // namespace chirality::exact
