#include "radring/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "radring/errors.hpp"

namespace radring::ring {

using numth::add_mod;
using numth::mul_mod;
using numth::sub_mod;

std::string RingParams::name() const {
  return "Z_" + std::to_string(n) + "[x]/(x^" + std::to_string(m) + "-" + std::to_string(r) +
         ")";
}

RingParams make_params(std::int64_t n, std::int64_t m, std::int64_t r, const Limits& limits) {
  if (n < 2) throw DomainError("ring modulus n must be >= 2, got " + std::to_string(n));
  if (m < 1) throw DomainError("ring degree m must be >= 1, got " + std::to_string(m));
  if (static_cast<std::size_t>(m) > limits.max_m) {
    throw RangeError("ring degree m = " + std::to_string(m) + " exceeds cap " +
                     std::to_string(limits.max_m));
  }
  const auto nn = static_cast<Natural>(n);
  return {nn, static_cast<std::size_t>(m), numth::normalize(r, nn)};
}

std::optional<Natural> ring_size(const RingParams& params) {
  return numth::checked_pow(params.n, params.m);
}

// --- elements ---------------------------------------------------------------

RingElement::RingElement(RingParams params) : params_(params), coeffs_(params.m, 0) {}

RingElement::RingElement(RingParams params, std::vector<Natural> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != params_.m) {
    throw DomainError("element of " + params_.name() + " needs " + std::to_string(params_.m) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c %= params_.n;
}

RingElement RingElement::from_signed(RingParams params, const std::vector<std::int64_t>& coeffs) {
  std::vector<Natural> cs;
  cs.reserve(coeffs.size());
  for (auto c : coeffs) cs.push_back(numth::normalize(c, params.n));
  return RingElement(params, std::move(cs));
}

RingElement RingElement::one(RingParams params) {
  RingElement e(params);
  e.coeffs_[0] = 1 % params.n;
  return e;
}

RingElement RingElement::root_power(RingParams params, std::size_t k) {
  if (k >= params.m) throw DomainError("root power index must be < m");
  RingElement e(params);
  e.coeffs_[k] = 1;
  return e;
}

RingElement RingElement::from_index(RingParams params, Natural index) {
  RingElement e(params);
  for (auto& c : e.coeffs_) {
    c = index % params.n;
    index /= params.n;
  }
  if (index != 0) throw RangeError("element index out of range for " + params.name());
  return e;
}

bool RingElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Natural c) { return c == 0; });
}

bool RingElement::is_one() const noexcept {
  return coeffs_[0] == 1 &&
         std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Natural c) { return c == 0; });
}

std::string RingElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!(a.params() == b.params())) {
    throw DomainError("ring mismatch: " + a.params().name() + " vs " + b.params().name());
  }
}

}  // namespace

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const Natural n = a.params().n;
  std::vector<Natural> c(a.params().m);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a[i], b[i], n);
  return RingElement(a.params(), std::move(c));
}

RingElement sub(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const Natural n = a.params().n;
  std::vector<Natural> c(a.params().m);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a[i], b[i], n);
  return RingElement(a.params(), std::move(c));
}

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const auto& [n, m, r] = a.params();
  std::vector<Natural> c(m, 0);
  // s^i s^j = s^(i+j) below m, r s^(i+j-m) otherwise.
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const Natural t = mul_mod(a[i], b[j], n);
      if (i + j < m) {
        c[i + j] = add_mod(c[i + j], t, n);
      } else {
        c[i + j - m] = add_mod(c[i + j - m], mul_mod(r, t, n), n);
      }
    }
  }
  return RingElement(a.params(), std::move(c));
}

RingElement mul_poly_oracle(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const auto& [n, m, r] = a.params();
  std::vector<Natural> full(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      full[i + j] = (full[i + j] + a[i] * static_cast<unsigned __int128>(b[j]) % n) % n;
    }
  }
  for (std::size_t d = full.size(); d-- > m;) {
    full[d - m] = (full[d - m] + static_cast<unsigned __int128>(full[d]) * r % n) % n;
    full[d] = 0;
  }
  full.resize(m);
  return RingElement(a.params(), std::move(full));
}

// --- unital matrix ----------------------------------------------------------

UnitalMatrix::UnitalMatrix(RingParams params, std::vector<Natural> entries)
    : params_(params), entries_(std::move(entries)) {
  if (entries_.size() != params_.m * params_.m) throw DomainError("unital matrix must be m x m");
}

UnitalMatrix unital_matrix(const RingElement& a) {
  const auto& [n, m, r] = a.params();
  std::vector<Natural> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Natural coeff = a[(i + m - j) % m];
      e[i * m + j] = i < j ? mul_mod(coeff, r, n) : coeff;
    }
  }
  return UnitalMatrix(a.params(), std::move(e));
}

UnitalMatrix matrix_product(const UnitalMatrix& a, const UnitalMatrix& b) {
  if (!(a.params() == b.params())) throw DomainError("matrix ring mismatch");
  const std::size_t m = a.size();
  const Natural n = a.params().n;
  std::vector<Natural> e(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const Natural aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        e[i * m + j] = add_mod(e[i * m + j], mul_mod(aik, b(k, j), n), n);
      }
    }
  }
  return UnitalMatrix(a.params(), std::move(e));
}

namespace {

enum class DetTier { kInt64, kInt128, kModular };

// Hadamard bound on every minor of an m x m matrix with entries in [0, n).
DetTier det_tier(const RingParams& params) {
  const long double entry = static_cast<long double>(params.n - 1);
  const long double m = static_cast<long double>(params.m);
  const long double bits = m * std::log2(std::max(1.0L, entry * std::sqrt(m)));
  if (bits <= 30.5L) return DetTier::kInt64;
  if (bits <= 61.5L) return DetTier::kInt128;
  return DetTier::kModular;
}

template <typename Int>
Int bareiss_in_place(std::vector<Int>& a, std::size_t m) {
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k * m + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot * m + k] == 0) ++pivot;
      if (pivot == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[pivot * m + j]);
      sign = -sign;
    }
    const Int akk = a[k * m + k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const Int aik = a[i * m + k];
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i * m + j] = (a[i * m + j] * akk - aik * a[k * m + j]) / prev;
      }
    }
    prev = akk;
  }
  return sign * a[m * m - 1];
}

template <typename Int>
Natural reduce_signed(Int v, Natural n) {
  Int r = v % static_cast<Int>(n);
  if (r < 0) r += static_cast<Int>(n);
  return static_cast<Natural>(r);
}

template <typename Int>
Natural bareiss_mod(std::span<const Natural> entries, std::size_t m, Natural n) {
  std::vector<Int> work(entries.begin(), entries.end());
  return reduce_signed<Int>(bareiss_in_place(work, m), n);
}

Natural det_from_charpoly(const std::vector<Natural>& c, std::size_t m, Natural n) {
  // det A = (-1)^m c_m
  const Natural cm = c[m];
  return (m % 2 == 0 || cm == 0) ? cm : n - cm;
}

Natural det_mod(const UnitalMatrix& a) {
  const Natural n = a.params().n;
  switch (det_tier(a.params())) {
    case DetTier::kInt64:
      return bareiss_mod<std::int64_t>(a.entries(), a.size(), n);
    case DetTier::kInt128:
      return bareiss_mod<__int128>(a.entries(), a.size(), n);
    case DetTier::kModular:
      break;
  }
  return det_from_charpoly(detail::charpoly_berkowitz(a), a.size(), n);
}

}  // namespace

namespace detail {

std::optional<Natural> det_bareiss(const UnitalMatrix& a) {
  const Natural n = a.params().n;
  switch (det_tier(a.params())) {
    case DetTier::kInt64:
      return bareiss_mod<std::int64_t>(a.entries(), a.size(), n);
    case DetTier::kInt128:
      return bareiss_mod<__int128>(a.entries(), a.size(), n);
    case DetTier::kModular:
      break;
  }
  return std::nullopt;
}

std::vector<Natural> charpoly_berkowitz(const UnitalMatrix& a) {
  const std::size_t m = a.size();
  const Natural n = a.params().n;
  auto neg = [n](Natural v) { return v == 0 ? 0 : n - v; };

  std::vector<Natural> coeffs = {1 % n, neg(a(0, 0))};
  for (std::size_t r = 1; r < m; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C where A is
    // the leading r x r block, R its row extension and C its column extension.
    std::vector<Natural> t(r + 2, 0);
    t[0] = 1 % n;
    t[1] = neg(a(r, r));
    std::vector<Natural> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Natural dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot = add_mod(dot, mul_mod(a(r, i), v[i], n), n);
      t[k + 2] = neg(dot);
      if (k + 1 < r) {
        std::vector<Natural> next(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            next[i] = add_mod(next[i], mul_mod(a(i, j), v[j], n), n);
          }
        }
        v = std::move(next);
      }
    }
    std::vector<Natural> next(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        next[i] = add_mod(next[i], mul_mod(t[i - j], coeffs[j], n), n);
      }
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace detail

numth::Residue unital_det(const RingElement& a) {
  return numth::Residue::from_natural(det_mod(unital_matrix(a)), a.params().n);
}

std::vector<Natural> adjugate(const UnitalMatrix& a) {
  // Cayley-Hamilton: adj A = (-1)^(m-1) (A^(m-1) + c_1 A^(m-2) + ... + c_(m-1) I).
  const std::size_t m = a.size();
  const Natural n = a.params().n;
  const auto c = detail::charpoly_berkowitz(a);

  std::vector<Natural> acc(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) acc[i * m + i] = 1 % n;
  for (std::size_t step = 1; step < m; ++step) {
    std::vector<Natural> next(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        const Natural v = acc[i * m + k];
        if (v == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          next[i * m + j] = add_mod(next[i * m + j], mul_mod(v, a(k, j), n), n);
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) next[i * m + i] = add_mod(next[i * m + i], c[step], n);
    acc = std::move(next);
  }
  if ((m - 1) % 2 == 1) {
    for (auto& v : acc) v = v == 0 ? 0 : n - v;
  }
  return acc;
}

bool is_unit(const RingElement& a) {
  return std::gcd(unital_det(a).value(), a.params().n) == 1;
}

RingElement inverse(const RingElement& a) {
  const auto& params = a.params();
  const Natural det = unital_det(a).value();
  const Natural g = std::gcd(det, params.n);
  if (g != 1) throw NotInvertibleError(det, g);
  const Natural det_inv = numth::inv_mod(det, params.n);
  const auto adj = adjugate(unital_matrix(a));
  std::vector<Natural> b(params.m);
  for (std::size_t i = 0; i < params.m; ++i) b[i] = mul_mod(det_inv, adj[i * params.m], params.n);
  RingElement inv(params, std::move(b));
  if (!mul(a, inv).is_one()) throw std::logic_error("adjugate inverse failed for " + a.to_string());
  return inv;
}

ZeroDivisorWitness zero_divisor_witness(const RingElement& a, const Limits& limits) {
  if (a.is_zero()) throw DomainError("zero-divisor witness requested for 0");
  if (is_unit(a)) return {ZeroDivisorWitness::Status::kUnit, std::nullopt};
  const auto size = ring_size(a.params());
  if (!size || *size > limits.witness) {
    return {ZeroDivisorWitness::Status::kNotSearched, std::nullopt};
  }
  for (Natural idx = 1; idx < *size; ++idx) {
    auto b = RingElement::from_index(a.params(), idx);
    if (mul(a, b).is_zero()) return {ZeroDivisorWitness::Status::kFound, std::move(b)};
  }
  // A non-unit of a finite ring always annihilates something nonzero.
  throw std::logic_error("no zero-divisor witness for non-unit " + a.to_string());
}

Natural unit_count(const RingParams& params, const Limits& limits) {
  const auto size = ring_size(params);
  if (!size || *size > limits.enumeration) {
    throw RangeError("cannot enumerate " + params.name() + ": n^m exceeds cap " +
                     std::to_string(limits.enumeration));
  }
  const auto [n, m, r] = params;
  const DetTier tier = det_tier(params);
  std::vector<Natural> digits(m, 0);
  std::vector<Natural> entries(m * m);
  std::vector<std::int64_t> work64;
  std::vector<__int128> work128;
  Natural units = 0;
  for (Natural idx = 0; idx < *size; ++idx) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Natural coeff = digits[(i + m - j) % m];
        entries[i * m + j] = i < j ? mul_mod(coeff, r, n) : coeff;
      }
    }
    Natural det;
    if (tier == DetTier::kInt64) {
      work64.assign(entries.begin(), entries.end());
      det = reduce_signed<std::int64_t>(bareiss_in_place(work64, m), n);
    } else if (tier == DetTier::kInt128) {
      work128.assign(entries.begin(), entries.end());
      det = reduce_signed<__int128>(bareiss_in_place(work128, m), n);
    } else {
      det = det_from_charpoly(detail::charpoly_berkowitz(UnitalMatrix(params, entries)), m, n);
    }
    if (std::gcd(det, n) == 1) ++units;
    // odometer increment, a_0 fastest
    for (std::size_t i = 0; i < m; ++i) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
  return units;
}

RingElement project(const RingElement& a, Natural modulus) {
  const auto& params = a.params();
  if (modulus < 2 || params.n % modulus != 0) {
    throw DomainError("projection modulus must be a divisor >= 2 of n");
  }
  RingParams target{modulus, params.m, params.r % modulus};
  std::vector<Natural> cs(a.coeffs().begin(), a.coeffs().end());
  return RingElement(target, std::move(cs));
}

}  // namespace radring::ring
