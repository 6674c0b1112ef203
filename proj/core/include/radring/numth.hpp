#pragma once

// Exact 64-bit number theory: modular arithmetic, deterministic primality,
// trial-division factorization and multiplicative orders.

#include <cstdint>
#include <optional>
#include <vector>

namespace radring::numth {

using Natural = std::uint64_t;

struct PrimePower {
  Natural prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing; product of prime^exponent equals the input.
using PrimeFactorization = std::vector<PrimePower>;

// An element of Z_modulus, always stored in [0, modulus).
class Residue {
 public:
  Residue(std::int64_t value, Natural modulus);

  static Residue from_natural(Natural value, Natural modulus);

  Natural value() const noexcept { return value_; }
  Natural modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue() = default;
  Natural value_ = 0;
  Natural modulus_ = 2;
};

struct Bezout {
  Natural g = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// Largest input accepted by factorize() and everything built on it.
inline constexpr Natural kFactorizeLimit = Natural{1} << 48;

// --- modular primitives ---------------------------------------------------

// Reduces a signed value into [0, modulus).
Natural normalize(std::int64_t value, Natural modulus);

inline Natural add_mod(Natural a, Natural b, Natural n) {
  // a, b < n
  return a >= n - b ? a - (n - b) : a + b;
}

inline Natural sub_mod(Natural a, Natural b, Natural n) {
  return a >= b ? a - b : a + (n - b);
}

inline Natural mul_mod(Natural a, Natural b, Natural n) {
  return static_cast<Natural>(static_cast<unsigned __int128>(a) * b % n);
}

Natural pow_mod(Natural base, Natural exponent, Natural n);

// Inverse of a modulo n; throws DomainError when gcd(a, n) != 1.
Natural inv_mod(Natural a, Natural n);

// --- arithmetic -------------------------------------------------------------

Bezout egcd(std::int64_t a, std::int64_t b);

bool is_prime(Natural n);

PrimeFactorization factorize(Natural n);

Natural euler_phi(Natural n);

Natural rad(Natural n);

// Exponent of prime in n (n > 0).
unsigned valuation(Natural n, Natural prime);

bool is_squarefree(Natural n);

// All positive divisors, ascending.
std::vector<Natural> divisors(Natural n);

// Smallest h >= 1 with a^h = 1 (mod b).
Natural mult_order(Natural a, Natural b);

// [p1^a1, ..., ps^as] for n = p1^a1 ... ps^as.
std::vector<Natural> crt_split(Natural n);

// base^exponent, or nullopt on 64-bit overflow.
std::optional<Natural> checked_pow(Natural base, Natural exponent);

std::optional<Natural> checked_mul(Natural a, Natural b);

}  // namespace radring::numth
