#include <gtest/gtest.h>

#include <algorithm>

#include <radring/errors.hpp>
#include <radring/ring.hpp>
#include <radring/structure.hpp>

#include "oracles.hpp"

using namespace radring;
using namespace radring::structure;

namespace {

FqElement Fp(Natural p, std::int64_t v) { return FqElement::from_integer(FieldSpec::prime(p), v); }

std::vector<Natural> indices(const std::vector<FqElement>& xs) {
  std::vector<Natural> out;
  for (const auto& x : xs) out.push_back(x.index());
  return out;
}

}  // namespace

TEST(IsField, Examples) {
  auto v = is_field(3, 2, 2);
  EXPECT_TRUE(v.is_field);
  EXPECT_TRUE(v.has_reason(ReasonCode::kIrreducibleOverPrime));
  EXPECT_TRUE(v.has_reason(ReasonCode::kRootCriterion));

  v = is_field(5, 2, -1);
  EXPECT_FALSE(v.is_field);
  EXPECT_FALSE(v.is_domain);
  EXPECT_TRUE(v.has_reason(ReasonCode::kBinomialReducible));

  v = is_field(12, 2, 5);
  EXPECT_FALSE(v.is_field);
  ASSERT_EQ(v.reasons.size(), 1u);
  EXPECT_EQ(v.reasons[0].code, ReasonCode::kCompositeN);
  EXPECT_EQ(v.reasons[0].evidence["factor"], 2);

  EXPECT_TRUE(is_field(7, 3, 2).is_field);
  EXPECT_FALSE(is_field(13, 3, 5).is_field);
  EXPECT_TRUE(is_field(5, 4, 2).is_field);
  EXPECT_FALSE(is_field(5, 4, 2).has_reason(ReasonCode::kRootCriterion));
  EXPECT_TRUE(is_field(11, 1, 3).is_field);
  EXPECT_THROW(is_field(1, 2, 1), DomainError);
}

TEST(IsField, ReasonNamesRoundTrip) {
  for (auto c : {ReasonCode::kPrimeN, ReasonCode::kCompositeN, ReasonCode::kBinomialReducible,
                 ReasonCode::kIrreducibleOverPrime, ReasonCode::kRootCriterion}) {
    EXPECT_EQ(reason_from_string(to_string(c)), c);
  }
  EXPECT_EQ(to_string(ReasonCode::kCompositeN), "COMPOSITE_N");
  EXPECT_THROW(reason_from_string("NOPE"), DomainError);
}

// A ring is a field exactly when it has no zero divisors, found here by
// multiplying every pair.
TEST(IsField, AgreesWithZeroDivisorSearch) {
  for (Natural n = 2; n <= 7; ++n) {
    for (Natural m = 1; m <= 3; ++m) {
      for (Natural r = 0; r < n; ++r) {
        const auto p = ring::make_params(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
                                         static_cast<std::int64_t>(r));
        const Natural size = *ring::ring_size(p);
        bool domain = true;
        for (Natural i = 1; i < size && domain; ++i) {
          for (Natural j = i; j < size && domain; ++j) {
            domain = !ring::mul_poly_oracle(ring::RingElement::from_index(p, i),
                                            ring::RingElement::from_index(p, j))
                          .is_zero();
          }
        }
        ASSERT_EQ(is_field(n, m, static_cast<std::int64_t>(r)).is_field, domain) << p.name();
      }
    }
  }
}

TEST(PowerMap, Examples) {
  const auto f7 = FieldSpec::prime(7);
  EXPECT_EQ(indices(power_map_image(f7, 2)), (std::vector<Natural>{0, 1, 2, 4}));
  EXPECT_EQ(indices(power_map_image(f7, 3)), (std::vector<Natural>{0, 1, 6}));
  EXPECT_EQ(power_map_image(f7, 5).size(), 7u);
  EXPECT_TRUE(power_map_onto(5, 3));
  EXPECT_FALSE(power_map_onto(7, 3));
  EXPECT_TRUE(power_map_onto(2, 7));
  EXPECT_TRUE(is_kth_power(Fp(7, 6), 3));
  EXPECT_FALSE(is_kth_power(Fp(7, 2), 3));
  EXPECT_TRUE(is_kth_power(Fp(7, 0), 3));
  EXPECT_EQ(has_linear_factor(FieldSpec::prime(13), 3, Fp(13, 5))->index(), 7u);
  EXPECT_FALSE(has_linear_factor(f7, 3, Fp(7, 2)).has_value());
}

TEST(PowerMap, OntoIffGcdOne) {
  for (Natural p = 2; p <= 61; ++p) {
    if (!oracle::is_prime(p)) continue;
    const auto spec = FieldSpec::prime(p);
    for (Natural m = 1; m <= 8; ++m) {
      const auto image = power_map_image(spec, m);
      ASSERT_EQ(power_map_onto(p, m), image.size() == p) << p << " " << m;
      ASSERT_EQ(power_map_onto(p, m), oracle::gcd(m, p - 1) == 1);
      ASSERT_EQ(image.size(), 1 + (p - 1) / oracle::gcd(m, p - 1));
      for (const auto& r : gfq::enumerate(spec)) {
        const bool in_image = std::find(image.begin(), image.end(), r) != image.end();
        ASSERT_EQ(is_kth_power(r, m), in_image);
        ASSERT_EQ(has_linear_factor(spec, m, r).has_value(), in_image);
      }
    }
  }
}

TEST(CubicForm, Examples) {
  EXPECT_EQ(cubic_form(7, 2, {1, 1, 1}), 1u);
  EXPECT_EQ(cubic_form(7, 2, {1, 0, 0}), 1u);
  EXPECT_EQ(cubic_form(7, 2, {0, 1, 0}), 2u);
  EXPECT_FALSE(cubic_form_has_nontrivial_zero(7, 2).has_value());
  const auto z = cubic_form_has_nontrivial_zero(7, 1);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(cubic_form(7, 1, *z), 0u);
  // every r is a cube mod 5
  for (Natural r = 1; r < 5; ++r) EXPECT_TRUE(cubic_form_has_nontrivial_zero(5, r).has_value());
}

TEST(CubicForm, ZeroIffReducible) {
  for (Natural p : {5, 7, 11, 13}) {
    for (Natural r = 1; r < p; ++r) {
      const auto z = cubic_form_has_nontrivial_zero(p, r);
      ASSERT_EQ(z.has_value(), !is_field(p, 3, static_cast<std::int64_t>(r)).is_field)
          << p << " " << r;
      if (z) {
        const auto params =
            ring::make_params(static_cast<std::int64_t>(p), 3, static_cast<std::int64_t>(r));
        ASSERT_EQ(ring::unital_det(ring::RingElement(params, {(*z)[0], (*z)[1], (*z)[2]})).value(),
                  0u);
      }
    }
  }
}

TEST(Pythagorean, Examples) {
  EXPECT_TRUE(pythagorean_class(5).is_pythagorean);
  EXPECT_FALSE(pythagorean_class(5).zp_i_is_field);
  EXPECT_FALSE(pythagorean_class(7).is_pythagorean);
  EXPECT_TRUE(pythagorean_class(7).zp_i_is_field);
  EXPECT_TRUE(pythagorean_class(2).is_pythagorean);
  EXPECT_THROW(pythagorean_class(9), DomainError);
  for (Natural p = 2; p < 200; ++p) {
    if (!oracle::is_prime(p)) continue;
    bool sum_of_squares = false;
    for (Natural a = 0; a * a <= p; ++a) {
      for (Natural b = a; a * a + b * b <= p; ++b) sum_of_squares |= a * a + b * b == p;
    }
    ASSERT_EQ(pythagorean_class(p).is_pythagorean, sum_of_squares) << p;
  }
}

TEST(QuadraticFields, HalfOfTheUnitsGiveFields) {
  for (Natural p = 3; p <= 61; ++p) {
    if (!oracle::is_prime(p)) continue;
    Natural fields = 0;
    for (Natural a = 1; a < p; ++a) fields += is_field(p, 2, static_cast<std::int64_t>(a)).is_field;
    ASSERT_EQ(fields, (p - 1) / 2);
  }
}

TEST(Splitting, Examples) {
  const auto s = splitting_type(FieldSpec::prime(13), 3, Fp(13, 5));
  EXPECT_EQ(s.ord_r, 4u);
  EXPECT_EQ(s.t, 1u);
  EXPECT_EQ(s.factor_count, 3u);
  const auto u = splitting_type(FieldSpec::prime(7), 3, Fp(7, 2));
  EXPECT_EQ(u.ord_r, 3u);
  EXPECT_EQ(u.t, 3u);
  EXPECT_EQ(u.factor_count, 1u);
  EXPECT_TRUE(irreducible_binomial(FieldSpec::prime(7), 3, Fp(7, 2)));
  EXPECT_THROW(splitting_type(FieldSpec::prime(7), 4, Fp(7, 2)), HypothesisError);
  EXPECT_THROW(splitting_type(FieldSpec::prime(7), 3, Fp(7, 0)), DomainError);
}

TEST(Splitting, PredictsFactorDegrees) {
  for (Natural q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 19, 25, 29, 31}) {
    const auto pf = numth::factorize(q);
    const auto spec = FieldSpec::galois(pf[0].prime, pf[0].exponent, 3);
    for (Natural m = 2; m <= 6; ++m) {
      if ((q - 1) % m != 0) continue;
      for (const auto& r : gfq::enumerate(spec)) {
        if (r.is_zero()) continue;
        const auto s = splitting_type(spec, m, r);
        const auto rep = factor::factor_monic(factor::Poly::binomial(m, r), 9);
        ASSERT_EQ(rep.factors.size(), s.factor_count)
            << spec.name() << " " << m << " " << r.index();
        for (const auto& f : rep.factors) {
          ASSERT_EQ(static_cast<Natural>(f.poly.degree()), s.t);
          ASSERT_EQ(f.multiplicity, 1u);
        }
        ASSERT_EQ(irreducible_binomial(spec, m, r), s.t == m);
      }
    }
  }
}

TEST(Decomposition, UnitCounts) {
  const auto d = ring_decomposition(FieldSpec::prime(13), 3, Fp(13, 5));
  EXPECT_EQ(d.t, 1u);
  EXPECT_EQ(d.copies, 3u);
  EXPECT_EQ(d.unit_count_prediction, 1728u);
  ASSERT_TRUE(d.unit_count_enumerated.has_value());
  EXPECT_EQ(*d.unit_count_enumerated, 1728u);
  for (Natural p : {3, 5, 7, 11, 13}) {
    for (Natural m = 2; m <= 4; ++m) {
      if ((p - 1) % m != 0) continue;
      for (Natural r = 1; r < p; ++r) {
        const auto dd =
            ring_decomposition(FieldSpec::prime(p), m, Fp(p, static_cast<std::int64_t>(r)));
        const auto params =
            ring::make_params(static_cast<std::int64_t>(p), static_cast<std::int64_t>(m),
                              static_cast<std::int64_t>(r));
        ASSERT_EQ(dd.unit_count_prediction, ring::unit_count(params));
      }
    }
  }
}

TEST(Counting, Examples) {
  EXPECT_EQ(counting_modulus(13, 3), 3u);
  EXPECT_EQ(counting_modulus(13, 2), 4u);
  EXPECT_EQ(counting_modulus(7, 3), 3u);
  EXPECT_EQ(counting_modulus(13, 6), 12u);
  EXPECT_EQ(counting_modulus(13, 1), 1u);
  EXPECT_THROW(counting_modulus(7, 4), HypothesisError);
  auto c = count_irreducible(FieldSpec::prime(13), 3);
  EXPECT_EQ(c.M, 3u);
  EXPECT_EQ(c.predicted, 8u);
  EXPECT_EQ(c.enumerated, std::optional<Natural>(8));
  EXPECT_EQ(count_irreducible(FieldSpec::prime(13), 2).predicted, 6u);
  EXPECT_EQ(count_irreducible(FieldSpec::prime(7), 3).predicted, 4u);
}

TEST(Counting, ModulusPropertiesAndEnumeration) {
  for (Natural q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 49}) {
    const auto pf = numth::factorize(q);
    const auto spec = FieldSpec::galois(pf[0].prime, pf[0].exponent);
    for (Natural m : numth::divisors(q - 1)) {
      const Natural M = counting_modulus(q, m);
      ASSERT_EQ(M % m, 0u);
      ASSERT_EQ(numth::rad(M), numth::rad(m));
      ASSERT_EQ(oracle::gcd(M, (q - 1) / M), 1u);
      const auto c = count_irreducible(spec, m);
      ASSERT_EQ(c.enumerated, std::optional<Natural>(c.predicted)) << spec.name() << " m=" << m;
    }
  }
}

TEST(Squarefree, Examples) {
  const auto c = squarefree_reducible(FieldSpec::prime(5), 3, Fp(5, 2));
  EXPECT_EQ(c.d, 3u);
  EXPECT_EQ(c.b.index(), 3u);
  EXPECT_THROW(squarefree_reducible(FieldSpec::prime(7), 3, Fp(7, 2)), DomainError);
  EXPECT_THROW(squarefree_reducible(FieldSpec::prime(5), 4, Fp(5, 2)), DomainError);
}

TEST(Squarefree, CertificateDivides) {
  for (Natural p = 2; p <= 31; ++p) {
    if (!oracle::is_prime(p)) continue;
    const auto spec = FieldSpec::prime(p);
    for (Natural m = 2; m <= 10; ++m) {
      if (!numth::is_squarefree(m) || (p - 1) % m == 0) continue;
      for (Natural r = 1; r < p; ++r) {
        const auto rr = Fp(p, static_cast<std::int64_t>(r));
        const auto c = squarefree_reducible(spec, m, rr);
        ASSERT_EQ(m % c.d, 0u);
        ASSERT_GT(c.d, 1u);
        ASSERT_EQ(gfq::ff_pow(c.b, c.d), rr);
        const auto f = factor::Poly::binomial(m, rr);
        const auto g = factor::Poly::binomial(m / c.d, c.b);
        ASSERT_TRUE(factor::poly_mod(f, g).is_zero());
        ASSERT_FALSE(factor::is_irreducible(f));
      }
    }
  }
}
