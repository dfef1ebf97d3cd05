#include "chirality/exact/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace chirality::exact {

Residue::Residue(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("Residue: modulus must be >= 1");
  value_ = value % modulus;
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("Residue: moduli differ");
}
}  // namespace

Residue Residue::pow(std::uint64_t exponent) const { return {powmod(value_, exponent, modulus_), modulus_}; }
Residue Residue::operator-() const { return {(modulus_ - value_) % modulus_, modulus_}; }
Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  const unsigned __int128 s = static_cast<unsigned __int128>(a.value_) + b.value_;
  return {static_cast<std::uint64_t>(s % a.modulus_), a.modulus_};
}
Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return {mulmod(a.value_, b.value_, a.modulus_), a.modulus_};
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw std::domain_error("invmod: not a unit");
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("is_prime: n must be >= 1");
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("is_prime: n must be >= 1");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw std::domain_error("is_prime: input exceeds the deterministic 64-bit range");
  }
  return is_prime(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())));
}

namespace {

// Brent's variant of Pollard rho with a fixed seed sequence; n is composite.
std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

Residue primitive_root(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("primitive_root: p must be an odd prime");
  const auto factors = factorize(p - 1);
  for (std::uint64_t c = 2; c < p; ++c) {
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](const PrimePower& q) {
      return powmod(c, (p - 1) / q.prime, p) != 1;
    });
    if (generates) return {c, p};
  }
  throw std::logic_error("primitive_root: none found for a prime modulus");
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a % m, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  std::uint64_t x = a % m;
  std::uint64_t order = 1;
  while (x != 1 % m) {
    x = mulmod(x, a, m);
    ++order;
  }
  return order;
}

QuadraticResidueAnswer minus_one_is_qr_exhaustive(std::uint64_t t) {
  if (t < 2) throw std::invalid_argument("minus_one_is_qr: t must be >= 2");
  for (std::uint64_t k = 0; k < t; ++k) {
    if (mulmod(k, k, t) == t - 1) return {true, k};
  }
  return {false, std::nullopt};
}

namespace {

// A square root of -1 modulo p^e for a prime p = 1 mod 4 (or p^e = 2).
std::uint64_t sqrt_minus_one_prime_power(std::uint64_t p, unsigned e) {
  if (p == 2) return 1;
  const std::uint64_t g = primitive_root(p).value();
  std::uint64_t x = powmod(g, (p - 1) / 4, p);
  // Hensel lifting: x <- x - (x^2 + 1) / (2x) modulo the next power.
  std::uint64_t mod = p;
  for (unsigned i = 1; i < e; ++i) {
    const std::uint64_t next = mod * p;
    const std::uint64_t fx = (mulmod(x, x, next) + 1) % next;
    const std::uint64_t step = mulmod(fx, invmod(mulmod(2, x, next), next), next);
    x = (x + next - step) % next;
    mod = next;
  }
  return x;
}

}  // namespace

QuadraticResidueAnswer minus_one_is_qr(std::uint64_t t, std::uint64_t cross_check_below) {
  if (t < 2) throw std::invalid_argument("minus_one_is_qr: t must be >= 2");
  const auto factors = factorize(t);
  QuadraticResidueAnswer answer;
  answer.is_residue = std::none_of(factors.begin(), factors.end(), [](const PrimePower& f) {
    return f.prime % 4 == 3 || (f.prime == 2 && f.exponent >= 2);
  });
  if (answer.is_residue) {
    // Combine +-root choices per prime power by CRT; keep the smallest.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> roots;  // (root, modulus)
    for (const auto& f : factors) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < f.exponent; ++i) q *= f.prime;
      roots.emplace_back(sqrt_minus_one_prime_power(f.prime, f.exponent), q);
    }
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    const std::size_t choices = std::size_t{1} << roots.size();
    for (std::size_t mask = 0; mask < choices; ++mask) {
      std::uint64_t x = 0, mod = 1;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto [r0, q] = roots[i];
        const std::uint64_t r = (mask >> i) & 1 ? (q - r0) % q : r0;
        // x' = x + mod * ((r - x) * mod^{-1} mod q)
        const std::uint64_t diff = (r + q - x % q) % q;
        const std::uint64_t k = mulmod(diff, invmod(mod % q, q), q);
        x = x + mod * k;
        mod *= q;
      }
      best = std::min(best, x);
    }
    if (mulmod(best, best, t) != t - 1) throw std::logic_error("minus_one_is_qr: CRT witness is wrong");
    answer.witness = best;
  }
  if (t < cross_check_below) {
    const auto reference = minus_one_is_qr_exhaustive(t);
    if (reference.is_residue != answer.is_residue || reference.witness != answer.witness) {
      throw std::logic_error("minus_one_is_qr: disagreement with exhaustive check");
    }
  }
  return answer;
}

}  // namespace chirality::exact
