#pragma once

// Structure of Z_n[x]/(x^m - r) and of binomials x^m - r over
// F_q: field verdicts, power maps, splitting types and irreducible counts.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radring/factor.hpp"
#include "radring/gfq.hpp"
#include "radring/limits.hpp"
#include "radring/numth.hpp"

namespace radring::structure {

using gfq::FieldSpec;
using gfq::FqElement;
using numth::Natural;

enum class ReasonCode {
  kPrimeN,                // n is prime
  kCompositeN,            // n = d * (n/d) gives zero divisors already in Z_n
  kBinomialReducible,     // x^m - r has a proper factor over Z_p
  kIrreducibleOverPrime,  // n prime and x^m - r irreducible
  kRootCriterion,         // m in {2, 3}: reducible iff r is an m-th power
};

std::string to_string(ReasonCode code);
ReasonCode reason_from_string(const std::string& text);

struct Reason {
  ReasonCode code;
  nlohmann::json evidence;

  friend bool operator==(const Reason&, const Reason&) = default;
};

struct FieldVerdict {
  Natural n = 0;
  Natural m = 0;
  Natural r = 0;
  bool is_field = false;
  bool is_domain = false;
  std::vector<Reason> reasons;

  bool has_reason(ReasonCode code) const;

  friend bool operator==(const FieldVerdict&, const FieldVerdict&) = default;
};

struct SplittingType {
  Natural q = 0;
  Natural m = 0;
  FqElement r;
  Natural ord_r = 0;
  Natural t = 0;
  Natural factor_count = 0;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct Decomposition {
  Natural t = 0;
  Natural copies = 0;
  Natural unit_count_prediction = 0;  // (q^t - 1)^(m/t)
  std::optional<Natural> unit_count_enumerated;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct CountReport {
  Natural q = 0;
  Natural m = 0;
  Natural M = 0;
  Natural predicted = 0;
  std::optional<Natural> enumerated;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

struct PythagoreanClass {
  bool is_pythagorean = false;
  bool zp_i_is_field = false;
};

// Certifies reducibility of x^m - r: b^d = r, so x^(m/d) - b divides it.
struct SquarefreeCertificate {
  Natural d = 0;
  FqElement b;
};

using CubicTriple = std::array<Natural, 3>;

// {a^k : a in F_q}, ascending by element index.
std::vector<FqElement> power_map_image(const FieldSpec& spec, Natural k, const Limits& limits = {});

// r is a k-th power in F_q (0 always is).
bool is_kth_power(const FqElement& r, Natural k);

bool power_map_onto(Natural p, Natural m);

// First a (index order) with a^m = r.
std::optional<FqElement> has_linear_factor(const FieldSpec& spec, Natural m, const FqElement& r,
                                           const Limits& limits = {});

FieldVerdict is_field(Natural n, Natural m, std::int64_t r, Natural seed = 0,
                      const Limits& limits = {});

// a0^3 + r a1^3 + r^2 a2^3 - 3 r a0 a1 a2 mod p
Natural cubic_form(Natural p, Natural r, const CubicTriple& a);

std::optional<CubicTriple> cubic_form_has_nontrivial_zero(Natural p, Natural r,
                                                          const Limits& limits = {});

PythagoreanClass pythagorean_class(Natural p);

// Requires m | q-1 (HypothesisError) and r != 0 (DomainError).
SplittingType splitting_type(const FieldSpec& spec, Natural m, const FqElement& r);

Decomposition ring_decomposition(const FieldSpec& spec, Natural m, const FqElement& r,
                                 const Limits& limits = {});

bool irreducible_binomial(const FieldSpec& spec, Natural m, const FqElement& r);

// Unique M with m | M, rad(M) = rad(m), gcd(M, (q-1)/M) = 1.
Natural counting_modulus(Natural q, Natural m);

// Counts r in F_q^* making x^m - r irreducible; enumerates when q fits the cap.
CountReport count_irreducible(const FieldSpec& spec, Natural m, const Limits& limits = {});

SquarefreeCertificate squarefree_reducible(const FieldSpec& spec, Natural m, const FqElement& r);

}  // namespace radring::structure
