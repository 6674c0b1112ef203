#pragma once

// Finite fields F_q, q = p^k, as Z_p[y]/(g(y)) for a stored monic irreducible
// g of degree k. The k = 1 case keeps no modulus and works on plain residues.

#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "radring/limits.hpp"
#include "radring/numth.hpp"

namespace radring::gfq {

using numth::Natural;

class FieldSpec {
 public:
  // Z_p. Throws DomainError if p is not prime.
  static FieldSpec prime(Natural p);

  // Z_p[y]/(modulus). `modulus` is ascending, monic, of degree k >= 1 and must
  // be irreducible over Z_p; k = 1 collapses to prime(p).
  static FieldSpec extension(Natural p, std::vector<Natural> modulus);

  // F_{p^k} built on find_irreducible(p, k, seed).
  static FieldSpec galois(Natural p, unsigned k, Natural seed = 0);

  Natural p() const noexcept { return data_->p; }
  unsigned k() const noexcept { return data_->k; }
  Natural q() const noexcept { return data_->q; }

  // Ascending coefficients of the defining polynomial; {0, 1} (i.e. y) when k = 1.
  std::span<const Natural> modulus() const noexcept { return data_->modulus; }

  // "F_13", "F_3^2"
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data {
    Natural p = 0;
    unsigned k = 1;
    Natural q = 0;
    std::vector<Natural> modulus;
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

class FqElement {
 public:
  // Zero of `spec`.
  explicit FqElement(FieldSpec spec);
  FqElement(FieldSpec spec, std::vector<Natural> coeffs);

  // Image of an integer in the prime subfield.
  static FqElement from_integer(const FieldSpec& spec, std::int64_t value);
  // Base-p digits of `index` (least significant first) as coefficients.
  static FqElement from_index(const FieldSpec& spec, Natural index);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::span<const Natural> coeffs() const noexcept { return coeffs_; }
  Natural index() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // True when the element lies in the prime subfield Z_p.
  bool is_prime_subfield() const noexcept;

  std::string to_string() const;

  friend bool operator==(const FqElement& a, const FqElement& b) {
    return a.coeffs_ == b.coeffs_ && a.spec_ == b.spec_;
  }

 private:
  friend FqElement ff_add(const FqElement&, const FqElement&);
  friend FqElement ff_sub(const FqElement&, const FqElement&);
  friend FqElement ff_mul(const FqElement&, const FqElement&);
  friend FqElement ff_neg(const FqElement&);

  FieldSpec spec_;
  std::vector<Natural> coeffs_;
};

FqElement ff_add(const FqElement& x, const FqElement& y);
FqElement ff_sub(const FqElement& x, const FqElement& y);
FqElement ff_mul(const FqElement& x, const FqElement& y);
FqElement ff_neg(const FqElement& x);
FqElement ff_inv(const FqElement& x);
FqElement ff_pow(const FqElement& x, Natural e);
Natural ff_order(const FqElement& x);

// y -> y^(1/p), the inverse of the Frobenius y -> y^p.
FqElement ff_pth_root(const FqElement& x);

inline FqElement operator+(const FqElement& a, const FqElement& b) { return ff_add(a, b); }
inline FqElement operator-(const FqElement& a, const FqElement& b) { return ff_sub(a, b); }
inline FqElement operator-(const FqElement& a) { return ff_neg(a); }
inline FqElement operator*(const FqElement& a, const FqElement& b) { return ff_mul(a, b); }

inline FqElement zero(const FieldSpec& spec) { return FqElement(spec); }
inline FqElement one(const FieldSpec& spec) { return FqElement::from_integer(spec, 1); }

// All q elements in index order (zero first).
class Elements {
 public:
  class iterator {
   public:
    using value_type = FqElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const FieldSpec* spec, Natural index) : spec_(spec), index_(index) {}

    FqElement operator*() const { return FqElement::from_index(*spec_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const FieldSpec* spec_ = nullptr;
    Natural index_ = 0;
  };

  explicit Elements(FieldSpec spec) : spec_(std::move(spec)) {}

  iterator begin() const { return {&spec_, 0}; }
  iterator end() const { return {&spec_, spec_.q()}; }
  Natural size() const { return spec_.q(); }

 private:
  FieldSpec spec_;
};

// Throws RangeError when q exceeds limits.enumeration.
Elements enumerate(const FieldSpec& spec, const Limits& limits = {});

// Monic degree-k irreducible over Z_p, ascending coefficients. Scans monic
// candidates in index order starting at seed mod p^k; k = 1 always yields y.
std::vector<Natural> find_irreducible(Natural p, unsigned k, Natural seed = 0);

}  // namespace radring::gfq
