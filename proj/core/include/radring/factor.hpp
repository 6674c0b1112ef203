#pragma once

// Univariate polynomials over F_q and their factorization. Two independent
// factorizers live here: squarefree / distinct-degree / equal-degree splitting
// (factor_monic) and exhaustive trial division (brute_force_factor).

#include <cstdint>
#include <string>
#include <vector>

#include "radring/gfq.hpp"
#include "radring/limits.hpp"

namespace radring::factor {

using gfq::FieldSpec;
using gfq::FqElement;
using numth::Natural;

class Poly {
 public:
  explicit Poly(FieldSpec spec);  // zero polynomial
  Poly(FieldSpec spec, std::vector<FqElement> coeffs);

  // From ascending prime-subfield integers, e.g. {1, 0, 1} = x^2 + 1.
  static Poly from_integers(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs);
  static Poly constant(const FqElement& c);
  static Poly x(const FieldSpec& spec);
  // x^m - r
  static Poly binomial(Natural m, const FqElement& r);

  const FieldSpec& spec() const noexcept { return spec_; }
  const std::vector<FqElement>& coeffs() const noexcept { return coeffs_; }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const FqElement& leading() const;
  FqElement coeff(std::size_t i) const;

  FqElement evaluate(const FqElement& at) const;
  Poly monic() const;
  Poly derivative() const;

  // "x^3+7x^2+10"; coefficients outside Z_p are parenthesized.
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  FieldSpec spec_;
  std::vector<FqElement> coeffs_;
};

// Binomial shorthand "x^3-2", "x+1", "x^4" or an ascending comma list of
// prime-subfield integers "1,0,1". Throws DomainError on anything else.
Poly parse_poly(const FieldSpec& spec, const std::string& text);

// Order used for canonical factor lists: degree, then ascending coefficient
// indices compared lexicographically from the constant term.
bool canonical_less(const Poly& a, const Poly& b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, const FqElement& c);
DivMod poly_divmod(const Poly& f, const Poly& g);
Poly poly_mod(const Poly& f, const Poly& g);
// Monic gcd; gcd(f, 0) = monic(f).
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_powmod(const Poly& base, Natural e, const Poly& modulus);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

// All roots in F_q by evaluation. Throws RangeError when q exceeds the cap.
std::vector<FqElement> roots(const Poly& f, const Limits& limits = {});

bool is_irreducible(const Poly& f, const Limits& limits = {});

struct Factor {
  Poly poly;
  unsigned multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct FactorizationReport {
  Poly input;
  std::vector<Factor> factors;  // monic irreducible, canonical order
  FqElement unit;

  // unit * prod factor^multiplicity, for re-multiplication checks.
  Poly product() const;
  bool reconstructs_input() const { return product() == input; }
  // Number of irreducible factors counted with multiplicity.
  std::size_t factor_count() const;
};

FactorizationReport factor_monic(const Poly& f, Natural seed = 0);

FactorizationReport brute_force_factor(const Poly& f, const Limits& limits = {});

}  // namespace radring::factor
