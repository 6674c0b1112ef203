#pragma once

// The radical ring Z_n[r^(1/m)] = Z_n[x]/(x^m - r). An element is the
// coefficient vector (a_0, ..., a_{m-1}) of a_0 + a_1 s + ... + a_{m-1} s^(m-1)
// with s^m = r.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radring/limits.hpp"
#include "radring/numth.hpp"

namespace radring::ring {

using numth::Natural;

struct RingParams {
  Natural n = 2;
  std::size_t m = 1;
  Natural r = 0;  // normalized into [0, n)

  // "Z_5[x]/(x^2-4)"
  std::string name() const;

  friend bool operator==(const RingParams&, const RingParams&) = default;
};

// Validates n >= 2 and 1 <= m <= limits.max_m, normalizes r (which may be negative).
RingParams make_params(std::int64_t n, std::int64_t m, std::int64_t r, const Limits& limits = {});

// n^m, or nullopt when it does not fit in 64 bits.
std::optional<Natural> ring_size(const RingParams& params);

class RingElement {
 public:
  explicit RingElement(RingParams params);  // zero
  RingElement(RingParams params, std::vector<Natural> coeffs);

  // Signed coefficients are normalized mod n; size must equal m.
  static RingElement from_signed(RingParams params, const std::vector<std::int64_t>& coeffs);
  static RingElement one(RingParams params);
  // s^k for 0 <= k < m (the adjoined root to the k-th power).
  static RingElement root_power(RingParams params, std::size_t k);
  // Base-n digits of index, a_0 least significant.
  static RingElement from_index(RingParams params, Natural index);

  const RingParams& params() const noexcept { return params_; }
  std::span<const Natural> coeffs() const noexcept { return coeffs_; }
  Natural operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Comma-separated ascending coefficients, e.g. "3,4".
  std::string to_string() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  RingParams params_;
  std::vector<Natural> coeffs_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);

// Multiplies as polynomials of degree < m and then folds x^m -> r. Shares no
// code with mul().
RingElement mul_poly_oracle(const RingElement& a, const RingElement& b);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }

// Matrix of multiplication by a in the basis 1, s, ..., s^(m-1):
// entry(i, j) = a_{(i-j) mod m} * (r if i < j else 1).
class UnitalMatrix {
 public:
  UnitalMatrix(RingParams params, std::vector<Natural> entries);

  const RingParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return params_.m; }
  Natural operator()(std::size_t i, std::size_t j) const { return entries_[i * params_.m + j]; }
  std::span<const Natural> entries() const noexcept { return entries_; }

  friend bool operator==(const UnitalMatrix&, const UnitalMatrix&) = default;

 private:
  RingParams params_;
  std::vector<Natural> entries_;  // row-major
};

UnitalMatrix unital_matrix(const RingElement& a);

// Product of two m x m matrices mod n (used to check multiplicativity).
UnitalMatrix matrix_product(const UnitalMatrix& a, const UnitalMatrix& b);

numth::Residue unital_det(const RingElement& a);

// Adjugate of the unital matrix, row-major mod n.
std::vector<Natural> adjugate(const UnitalMatrix& a);

bool is_unit(const RingElement& a);

// Throws NotInvertibleError (carrying the determinant and its gcd with n) for non-units.
RingElement inverse(const RingElement& a);

struct ZeroDivisorWitness {
  enum class Status { kUnit, kFound, kNotSearched };

  Status status = Status::kUnit;
  std::optional<RingElement> witness;  // set iff status == kFound
};

// First nonzero b (index order) with a*b = 0. Throws DomainError for a = 0.
ZeroDivisorWitness zero_divisor_witness(const RingElement& a, const Limits& limits = {});

// Number of units by exhaustive determinant test. RangeError above the cap.
Natural unit_count(const RingParams& params, const Limits& limits = {});

// Image of a under Z_n -> Z_modulus for a divisor `modulus` of n.
RingElement project(const RingElement& a, Natural modulus);

namespace detail {

// Exact fraction-free elimination; nullopt when intermediate values could
// overflow 128-bit arithmetic.
std::optional<Natural> det_bareiss(const UnitalMatrix& a);

// Division-free characteristic polynomial det(tI - A) = t^m + c_1 t^(m-1) + ... + c_m
// mod n; returns {1, c_1, ..., c_m}.
std::vector<Natural> charpoly_berkowitz(const UnitalMatrix& a);

}  // namespace detail

}  // namespace radring::ring
