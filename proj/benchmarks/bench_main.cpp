#include <random>

#include <benchmark/benchmark.h>
#include <radring/factor.hpp>
#include <radring/numth.hpp>
#include <radring/ring.hpp>
#include <radring/structure.hpp>

using namespace radring;
using numth::Natural;

static void BM_IsPrime(benchmark::State& state) {
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(numth::is_prime(rng() | 1));
}
BENCHMARK(BM_IsPrime);

static void BM_Factorize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(numth::factorize(rng() % (Natural{1} << 40) + 2));
}
BENCHMARK(BM_Factorize);

static void BM_RingMul(benchmark::State& state) {
  const auto m = static_cast<std::int64_t>(state.range(0));
  const auto p = ring::make_params((std::int64_t{1} << 61) - 1, m, 3);
  std::vector<Natural> cs(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = i * 1234567 + 89;
  const ring::RingElement a(p, cs);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_RingMul)->Arg(2)->Arg(6)->Arg(12);

static void BM_UnitalDet(benchmark::State& state) {
  const auto m = static_cast<std::int64_t>(state.range(0));
  const auto n = state.range(1) ? (std::int64_t{1} << 61) - 1 : 1009;
  const auto p = ring::make_params(n, m, 5);
  std::vector<Natural> cs(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = (i * 7919 + 13) % p.n;
  const ring::RingElement a(p, cs);
  for (auto _ : state) benchmark::DoNotOptimize(ring::unital_det(a));
}
BENCHMARK(BM_UnitalDet)->Args({3, 0})->Args({8, 0})->Args({3, 1})->Args({8, 1})->Args({12, 1});

static void BM_UnitCount(benchmark::State& state) {
  const auto p = ring::make_params(13, 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(ring::unit_count(p));
}
BENCHMARK(BM_UnitCount);

static void BM_FactorBinomial(benchmark::State& state) {
  const auto spec = gfq::FieldSpec::prime(1000003);
  const auto f = factor::Poly::binomial(static_cast<Natural>(state.range(0)),
                                        gfq::FqElement::from_integer(spec, 2));
  for (auto _ : state) benchmark::DoNotOptimize(factor::factor_monic(f, 7));
}
BENCHMARK(BM_FactorBinomial)->Arg(6)->Arg(12)->Arg(42);

static void BM_BruteFactor(benchmark::State& state) {
  const auto spec = gfq::FieldSpec::prime(13);
  const auto f = factor::Poly::binomial(6, gfq::FqElement::from_integer(spec, 5));
  for (auto _ : state) benchmark::DoNotOptimize(factor::brute_force_factor(f));
}
BENCHMARK(BM_BruteFactor);

static void BM_CountIrreducible(benchmark::State& state) {
  const auto spec = gfq::FieldSpec::prime(61);
  for (auto _ : state) benchmark::DoNotOptimize(structure::count_irreducible(spec, 6));
}
BENCHMARK(BM_CountIrreducible);
BENCHMARK_MAIN();
