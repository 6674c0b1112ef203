#include "radring/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "radring/errors.hpp"
#include "radring/ring.hpp"

namespace radring::structure {

using gfq::ff_pow;

namespace {

constexpr std::array<std::pair<ReasonCode, const char*>, 5> kReasonNames = {{
    {ReasonCode::kPrimeN, "PRIME_N"},
    {ReasonCode::kCompositeN, "COMPOSITE_N"},
    {ReasonCode::kBinomialReducible, "BINOMIAL_REDUCIBLE"},
    {ReasonCode::kIrreducibleOverPrime, "IRREDUCIBLE_OVER_PRIME"},
    {ReasonCode::kRootCriterion, "ROOT_CRITERION"},
}};

void require_prime(Natural p) {
  if (!numth::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

void require_primitive_root_of_unity(const FieldSpec& spec, Natural m) {
  if (m == 0) throw DomainError("m must be >= 1");
  if ((spec.q() - 1) % m != 0) {
    throw HypothesisError("m = " + std::to_string(m) + " does not divide q - 1 = " +
                          std::to_string(spec.q() - 1) + " in " + spec.name());
  }
}

std::vector<std::uint64_t> coeff_indices(const factor::Poly& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(c.index());
  return out;
}

}  // namespace

std::string to_string(ReasonCode code) {
  for (const auto& [c, name] : kReasonNames) {
    if (c == code) return name;
  }
  throw std::logic_error("unknown reason code");
}

ReasonCode reason_from_string(const std::string& text) {
  for (const auto& [c, name] : kReasonNames) {
    if (text == name) return c;
  }
  throw DomainError("unknown reason code '" + text + "'");
}

bool FieldVerdict::has_reason(ReasonCode code) const {
  return std::any_of(reasons.begin(), reasons.end(),
                     [code](const Reason& r) { return r.code == code; });
}

std::vector<FqElement> power_map_image(const FieldSpec& spec, Natural k, const Limits& limits) {
  std::vector<bool> hit(spec.q(), false);
  for (const auto& a : gfq::enumerate(spec, limits)) hit[ff_pow(a, k).index()] = true;
  std::vector<FqElement> out;
  for (Natural i = 0; i < spec.q(); ++i) {
    if (hit[i]) out.push_back(FqElement::from_index(spec, i));
  }
  return out;
}

bool is_kth_power(const FqElement& r, Natural k) {
  if (r.is_zero()) return true;
  if (k == 0) return r.is_one();
  const Natural group = r.spec().q() - 1;
  // The k-th powers of a cyclic group of order q-1 are exactly the elements
  // killed by (q-1)/gcd(k, q-1).
  return ff_pow(r, group / std::gcd(k, group)).is_one();
}

bool power_map_onto(Natural p, Natural m) {
  require_prime(p);
  return std::gcd(p - 1, m) == 1;
}

std::optional<FqElement> has_linear_factor(const FieldSpec& spec, Natural m, const FqElement& r,
                                           const Limits& limits) {
  for (const auto& a : gfq::enumerate(spec, limits)) {
    if (ff_pow(a, m) == r) return a;
  }
  return std::nullopt;
}

FieldVerdict is_field(Natural n, Natural m, std::int64_t r, Natural seed, const Limits& limits) {
  if (n < 2) throw DomainError("n must be >= 2");
  if (m < 1) throw DomainError("m must be >= 1");
  FieldVerdict v;
  v.n = n;
  v.m = m;
  v.r = numth::normalize(r, n);

  if (!numth::is_prime(n)) {
    const Natural d = numth::factorize(n).front().prime;
    v.reasons.push_back({ReasonCode::kCompositeN, {{"factor", d}, {"cofactor", n / d}}});
    return v;
  }
  v.reasons.push_back({ReasonCode::kPrimeN, {{"n", n}}});

  const auto spec = FieldSpec::prime(n);
  const auto rr = FqElement::from_index(spec, v.r);
  const auto binomial = factor::Poly::binomial(m, rr);
  const auto report = factor::factor_monic(binomial, seed);
  const bool irreducible =
      report.factors.size() == 1 && report.factors.front().multiplicity == 1;
  if (irreducible) {
    v.reasons.push_back({ReasonCode::kIrreducibleOverPrime, {{"polynomial", binomial.to_string()}}});
  } else {
    const auto& first = report.factors.front().poly;
    v.reasons.push_back({ReasonCode::kBinomialReducible,
                         {{"factor", first.to_string()}, {"factor_coeffs", coeff_indices(first)}}});
  }

  if (m >= 2 && m <= 3 && spec.q() <= limits.enumeration) {
    const auto root = has_linear_factor(spec, m, rr, limits);
    // In degree 2 or 3 a proper factorization always includes a linear factor.
    if (root.has_value() == irreducible) {
      throw std::logic_error("root criterion disagrees with factorization for " +
                             binomial.to_string() + " over " + spec.name());
    }
    nlohmann::json ev = {{"m", m}};
    ev["root"] = root ? nlohmann::json(root->index()) : nlohmann::json(nullptr);
    v.reasons.push_back({ReasonCode::kRootCriterion, std::move(ev)});
  }

  v.is_field = irreducible;
  v.is_domain = irreducible;
  return v;
}

Natural cubic_form(Natural p, Natural r, const CubicTriple& a) {
  using numth::add_mod;
  using numth::mul_mod;
  r %= p;
  const Natural a0 = a[0] % p, a1 = a[1] % p, a2 = a[2] % p;
  const Natural r2 = mul_mod(r, r, p);
  Natural s = mul_mod(mul_mod(a0, a0, p), a0, p);
  s = add_mod(s, mul_mod(r, mul_mod(mul_mod(a1, a1, p), a1, p), p), p);
  s = add_mod(s, mul_mod(r2, mul_mod(mul_mod(a2, a2, p), a2, p), p), p);
  const Natural cross = mul_mod(mul_mod(3 % p, r, p), mul_mod(mul_mod(a0, a1, p), a2, p), p);
  return numth::sub_mod(s, cross, p);
}

std::optional<CubicTriple> cubic_form_has_nontrivial_zero(Natural p, Natural r,
                                                          const Limits& limits) {
  require_prime(p);
  const auto cube = numth::checked_pow(p, 3);
  if (!cube || *cube > limits.enumeration) {
    throw RangeError("p^3 exceeds enumeration cap for cubic form search");
  }
  for (Natural a0 = 0; a0 < p; ++a0) {
    for (Natural a1 = 0; a1 < p; ++a1) {
      for (Natural a2 = 0; a2 < p; ++a2) {
        if (a0 == 0 && a1 == 0 && a2 == 0) continue;
        const CubicTriple t{a0, a1, a2};
        if (cubic_form(p, r, t) == 0) return t;
      }
    }
  }
  return std::nullopt;
}

PythagoreanClass pythagorean_class(Natural p) {
  require_prime(p);
  PythagoreanClass c;
  c.is_pythagorean = p == 2 || p % 4 == 1;
  c.zp_i_is_field = !c.is_pythagorean;
  if (is_field(p, 2, -1).is_field != c.zp_i_is_field) {
    throw std::logic_error("Z_" + std::to_string(p) + "[i] field verdict disagrees with p mod 4");
  }
  return c;
}

SplittingType splitting_type(const FieldSpec& spec, Natural m, const FqElement& r) {
  require_primitive_root_of_unity(spec, m);
  if (r.is_zero()) throw DomainError("splitting type needs r != 0");
  SplittingType s{spec.q(), m, r, gfq::ff_order(r), 0, 0};
  const Natural modulus = s.ord_r * m;  // coprime to p, at most (q-1)^2
  s.t = modulus == 1 ? 1 : numth::mult_order(spec.q() % modulus, modulus);
  if (m % s.t != 0) throw std::logic_error("splitting degree does not divide m");
  s.factor_count = m / s.t;
  return s;
}

Decomposition ring_decomposition(const FieldSpec& spec, Natural m, const FqElement& r,
                                 const Limits& limits) {
  const auto split = splitting_type(spec, m, r);
  Decomposition d;
  d.t = split.t;
  d.copies = split.factor_count;
  const auto qt = numth::checked_pow(spec.q(), d.t);
  const auto units = qt ? numth::checked_pow(*qt - 1, d.copies) : std::nullopt;
  if (!units) throw RangeError("unit count prediction overflows 64 bits");
  d.unit_count_prediction = *units;

  const auto size = numth::checked_pow(spec.q(), m);
  if (spec.k() == 1 && m <= limits.max_m && size && *size <= limits.enumeration) {
    const auto params = ring::make_params(static_cast<std::int64_t>(spec.p()),
                                          static_cast<std::int64_t>(m),
                                          static_cast<std::int64_t>(r.index()), limits);
    d.unit_count_enumerated = ring::unit_count(params, limits);
  }
  return d;
}

bool irreducible_binomial(const FieldSpec& spec, Natural m, const FqElement& r) {
  require_primitive_root_of_unity(spec, m);
  if (r.is_zero()) throw DomainError("irreducibility criterion needs r != 0");
  for (Natural k : numth::divisors(m)) {
    if (k > 1 && is_kth_power(r, k)) return false;
  }
  return true;
}

Natural counting_modulus(Natural q, Natural m) {
  if (m == 0 || q < 2 || (q - 1) % m != 0) {
    throw HypothesisError("counting modulus needs m | q - 1");
  }
  Natural big_m = 1;
  if (m > 1) {
    for (const auto& pe : numth::factorize(m)) {
      for (unsigned i = numth::valuation(q - 1, pe.prime); i > 0; --i) big_m *= pe.prime;
    }
  }
  const Natural rest = (q - 1) / big_m;
  if (big_m % m != 0 || numth::rad(big_m) != numth::rad(m) || std::gcd(big_m, rest) != 1) {
    throw std::logic_error("constructed counting modulus violates its defining conditions");
  }
  return big_m;
}

CountReport count_irreducible(const FieldSpec& spec, Natural m, const Limits& limits) {
  require_primitive_root_of_unity(spec, m);
  CountReport c;
  c.q = spec.q();
  c.m = m;
  c.M = counting_modulus(spec.q(), m);
  c.predicted = numth::euler_phi(c.M) * ((spec.q() - 1) / c.M);
  if (spec.q() <= limits.enumeration) {
    Natural count = 0;
    for (const auto& r : gfq::enumerate(spec, limits)) {
      if (!r.is_zero() && irreducible_binomial(spec, m, r)) ++count;
    }
    c.enumerated = count;
  }
  return c;
}

SquarefreeCertificate squarefree_reducible(const FieldSpec& spec, Natural m, const FqElement& r) {
  if (m < 2 || !numth::is_squarefree(m)) {
    throw DomainError("squarefree certificate needs squarefree m >= 2");
  }
  const Natural group = spec.q() - 1;
  if (group % m == 0) throw DomainError("squarefree certificate needs m not dividing q - 1");
  if (r.is_zero()) throw DomainError("squarefree certificate needs r != 0");
  for (const auto& pe : numth::factorize(m)) {
    const Natural d = pe.prime;
    if (group % d == 0) continue;
    // x -> x^d is a bijection of F_q^*, inverted by x -> x^(d^-1 mod q-1).
    const Natural e = group == 1 ? 1 : numth::inv_mod(d % group, group);
    return {d, ff_pow(r, e)};
  }
  throw std::logic_error("squarefree m not dividing q - 1 has no prime d with d not dividing q - 1");
}

}  // namespace radring::structure
