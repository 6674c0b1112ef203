#include "radring/numth.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "radring/errors.hpp"

namespace radring::numth {

Residue::Residue(std::int64_t value, Natural modulus) : modulus_(modulus) {
  if (modulus < 2) throw DomainError("residue modulus must be >= 2");
  value_ = normalize(value, modulus);
}

Residue Residue::from_natural(Natural value, Natural modulus) {
  if (modulus < 2) throw DomainError("residue modulus must be >= 2");
  Residue r;
  r.modulus_ = modulus;
  r.value_ = value % modulus;
  return r;
}

Natural normalize(std::int64_t value, Natural modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  if (value >= 0) return static_cast<Natural>(value) % modulus;
  // -(value) may not be representable for INT64_MIN; go through unsigned.
  Natural magnitude = static_cast<Natural>(-(value + 1)) + 1;
  Natural m = magnitude % modulus;
  return m == 0 ? 0 : modulus - m;
}

Natural pow_mod(Natural base, Natural exponent, Natural n) {
  if (n == 1) return 0;
  Natural result = 1;
  base %= n;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exponent >>= 1;
  }
  return result;
}

Natural inv_mod(Natural a, Natural n) {
  // Extended Euclid on unsigned values, tracking the coefficient of a mod n.
  a %= n;
  Natural old_r = a, r = n;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    Natural q = old_r / r;
    Natural tmp_r = old_r - q * r;
    old_r = r;
    r = tmp_r;
    __int128 tmp_s = old_s - static_cast<__int128>(q) * s;
    old_s = s;
    s = tmp_s;
  }
  if (old_r != 1) {
    throw DomainError(std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  __int128 v = old_s % static_cast<__int128>(n);
  if (v < 0) v += n;
  return static_cast<Natural>(v);
}

Bezout egcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw DomainError("egcd(0, 0) is undefined");
  __int128 old_r = a, r = b;
  __int128 old_s = 1, s = 0;
  __int128 old_t = 0, t = 1;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {static_cast<Natural>(old_r), static_cast<std::int64_t>(old_s),
          static_cast<std::int64_t>(old_t)};
}

bool is_prime(Natural n) {
  if (n < 2) return false;
  static constexpr std::array<Natural, 12> kWitnesses = {2, 3, 5, 7, 11, 13,
                                                         17, 19, 23, 29, 31, 37};
  for (Natural p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // exact below 3.3e24
  for (Natural a : kWitnesses) {
    Natural x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization factorize(Natural n) {
  if (n < 2) throw DomainError("factorize requires n >= 2");
  if (n > kFactorizeLimit) {
    throw RangeError("factorize supports n <= 2^48, got " + std::to_string(n));
  }
  PrimeFactorization out;
  // Returns true once the cofactor is known to be 1 or prime.
  auto strip = [&](Natural p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
    return e > 0 && (n == 1 || is_prime(n));
  };
  if (!strip(2) && !is_prime(n)) {
    for (Natural d = 3; d * d <= n; d += 2) {
      if (strip(d)) break;
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Natural euler_phi(Natural n) {
  if (n == 0) throw DomainError("euler_phi(0) is undefined");
  if (n == 1) return 1;
  Natural phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

Natural rad(Natural n) {
  if (n == 0) throw DomainError("rad(0) is undefined");
  if (n == 1) return 1;
  Natural r = 1;
  for (const auto& pe : factorize(n)) r *= pe.prime;
  return r;
}

unsigned valuation(Natural n, Natural prime) {
  if (n == 0) throw DomainError("valuation of 0 is undefined");
  unsigned v = 0;
  while (n % prime == 0) {
    n /= prime;
    ++v;
  }
  return v;
}

bool is_squarefree(Natural n) {
  if (n == 0) return false;
  if (n == 1) return true;
  for (const auto& pe : factorize(n)) {
    if (pe.exponent > 1) return false;
  }
  return true;
}

std::vector<Natural> divisors(Natural n) {
  if (n == 0) throw DomainError("divisors of 0 are undefined");
  std::vector<Natural> out{1};
  if (n == 1) return out;
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Natural pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Natural mult_order(Natural a, Natural b) {
  if (b < 2) throw DomainError("mult_order requires modulus >= 2");
  a %= b;
  if (std::gcd(a, b) != 1) {
    throw DomainError("mult_order: gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                      ") != 1");
  }
  Natural h = euler_phi(b);
  if (h == 1) return 1;
  for (const auto& [p, e] : factorize(h)) {
    for (unsigned i = 0; i < e && h % p == 0; ++i) {
      if (pow_mod(a, h / p, b) != 1) break;
      h /= p;
    }
  }
  return h;
}

std::vector<Natural> crt_split(Natural n) {
  std::vector<Natural> out;
  for (const auto& [p, e] : factorize(n)) {
    Natural pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    out.push_back(pe);
  }
  return out;
}

std::optional<Natural> checked_mul(Natural a, Natural b) {
  Natural out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<Natural> checked_pow(Natural base, Natural exponent) {
  Natural result = 1;
  for (Natural i = 0; i < exponent; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
    if (result == 0 || result == 1) break;
  }
  return result;
}

}  // namespace radring::numth
