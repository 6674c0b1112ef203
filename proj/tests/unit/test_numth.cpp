#include <gtest/gtest.h>

#include <random>

#include <radring/errors.hpp>
#include <radring/numth.hpp>

#include "oracles.hpp"

using namespace radring;
using namespace radring::numth;

TEST(Egcd, Examples) {
  auto b = egcd(12, 8);
  EXPECT_EQ(b.g, 4u);
  EXPECT_EQ(b.x, 1);
  EXPECT_EQ(b.y, -1);
  b = egcd(1, 0);
  EXPECT_EQ(b.g, 1u);
  EXPECT_EQ(b.x, 1);
  EXPECT_EQ(b.y, 0);
  b = egcd(240, 46);
  EXPECT_EQ(b.g, 2u);
  EXPECT_EQ(b.x, -9);
  EXPECT_EQ(b.y, 47);
  EXPECT_THROW(egcd(0, 0), DomainError);
}

TEST(Egcd, BezoutOnRandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
  for (int i = 0; i < 10'000; ++i) {
    const auto a = dist(rng), c = dist(rng);
    if (a == 0 && c == 0) continue;
    const auto b = egcd(a, c);
    EXPECT_EQ(static_cast<__int128>(a) * b.x + static_cast<__int128>(c) * b.y,
              static_cast<__int128>(b.g));
    EXPECT_EQ(b.g, oracle::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                               static_cast<std::uint64_t>(c < 0 ? -c : c)));
  }
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(1224));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(2));
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (Natural n = 0; n < 20'000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(18446744073709551555ull));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ull));
  EXPECT_FALSE(is_prime(4294967297ull));  // 641 * 6700417
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12), (PrimeFactorization{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(13), (PrimeFactorization{{13, 1}}));
  EXPECT_EQ(factorize(360), (PrimeFactorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_THROW(factorize(1), DomainError);
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(kFactorizeLimit + 1), RangeError);
}

TEST(Factorize, ReconstructsAndMatchesPrimality) {
  for (Natural n = 2; n <= 10'000; ++n) {
    const auto f = factorize(n);
    Natural prod = 1;
    Natural last = 0;
    for (const auto& pe : f) {
      ASSERT_GT(pe.prime, last);
      ASSERT_TRUE(oracle::is_prime(pe.prime));
      ASSERT_GE(pe.exponent, 1u);
      last = pe.prime;
      for (unsigned i = 0; i < pe.exponent; ++i) prod *= pe.prime;
    }
    ASSERT_EQ(prod, n);
    ASSERT_EQ(is_prime(n), f.size() == 1 && f[0].exponent == 1) << n;
  }
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(3), 2u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_THROW(euler_phi(0), DomainError);
}

TEST(EulerPhi, DivisorSumAndOracle) {
  for (Natural n = 1; n <= 500; ++n) {
    Natural sum = 0;
    for (Natural d : divisors(n)) sum += euler_phi(d);
    ASSERT_EQ(sum, n);
    ASSERT_EQ(euler_phi(n), oracle::phi(n));
  }
}

TEST(Rad, Examples) {
  EXPECT_EQ(rad(12), 6u);
  EXPECT_EQ(rad(8), 2u);
  EXPECT_EQ(rad(360), 30u);
  EXPECT_EQ(rad(1), 1u);
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(2, 7), 3u);
  EXPECT_EQ(mult_order(1, 5), 1u);
  EXPECT_EQ(mult_order(7, 9), 3u);
  EXPECT_THROW(mult_order(2, 4), DomainError);
  EXPECT_THROW(mult_order(3, 1), DomainError);
}

TEST(MultOrder, MinimalAndDividesPhi) {
  for (Natural b = 2; b <= 200; ++b) {
    for (Natural a = 1; a < b; ++a) {
      if (oracle::gcd(a, b) != 1) continue;
      const Natural h = mult_order(a, b);
      ASSERT_EQ(pow_mod(a, h, b), 1 % b);
      ASSERT_EQ(h, oracle::order(a, b)) << a << " mod " << b;
      ASSERT_EQ(euler_phi(b) % h, 0u);
    }
  }
}

TEST(CrtSplit, Examples) {
  EXPECT_EQ(crt_split(12), (std::vector<Natural>{4, 3}));
  EXPECT_EQ(crt_split(13), (std::vector<Natural>{13}));
  EXPECT_EQ(crt_split(1224), (std::vector<Natural>{8, 9, 17}));
  EXPECT_THROW(crt_split(1), DomainError);
}

TEST(Residue, NormalizesNegatives) {
  EXPECT_EQ(Residue(-1, 5).value(), 4u);
  EXPECT_EQ(Residue(-10, 5).value(), 0u);
  EXPECT_EQ(Residue(12, 5).value(), 2u);
  EXPECT_EQ(normalize(INT64_MIN, 7),
            static_cast<Natural>(((static_cast<__int128>(INT64_MIN) % 7) + 7) % 7));
}

TEST(ModArith, InverseAndPow) {
  EXPECT_EQ(inv_mod(5, 7), 3u);
  EXPECT_THROW(inv_mod(2, 4), DomainError);
  EXPECT_EQ(pow_mod(2, 10, 1000), 24u);
  EXPECT_EQ(pow_mod(5, 0, 1), 0u);
  for (Natural n = 2; n < 60; ++n) {
    for (Natural a = 0; a < n; ++a) {
      for (Natural e = 0; e < 12; ++e) ASSERT_EQ(pow_mod(a, e, n), oracle::pow_mod(a, e, n));
    }
  }
}

TEST(Checked, Overflow) {
  EXPECT_EQ(checked_pow(2, 63), Natural{1} << 63);
  EXPECT_FALSE(checked_pow(2, 64).has_value());
  EXPECT_EQ(checked_pow(0, 0), 1u);
  EXPECT_FALSE(checked_mul(Natural{1} << 32, Natural{1} << 32).has_value());
}

TEST(Squarefree, Small) {
  EXPECT_TRUE(is_squarefree(1));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_EQ(valuation(360, 2), 3u);
  EXPECT_EQ(valuation(360, 7), 0u);
}
