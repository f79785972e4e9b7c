#include <benchmark/benchmark.h>

#include "octic/doubly_even.hpp"
#include "octic/octic_irred.hpp"
#include "octic/palindromic.hpp"
#include "octic/resolvent_verifier.hpp"
#include "octic/subset_factorization.hpp"

using namespace octic;

namespace {

void BM_Resultant(benchmark::State& state) {
  const UniPoly f = palindromic_octic(24, 48);
  const UniPoly g = shift(scale_argument(f, -1), 5);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant);

void BM_SylvesterResultant(benchmark::State& state) {
  const UniPoly f = palindromic_octic(24, 48);
  const UniPoly g = shift(scale_argument(f, -1), 5);
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(f, g));
}
BENCHMARK(BM_SylvesterResultant);

void BM_LinearResolvent(benchmark::State& state) {
  const UniPoly f = palindromic_octic(2, -7);
  for (auto _ : state) benchmark::DoNotOptimize(linear_resolvent(f));
}
BENCHMARK(BM_LinearResolvent)->Unit(benchmark::kMillisecond);

void BM_SubsetFactorizationR16(benchmark::State& state) {
  const UniPoly r16 = palindromic::build_R16(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_factorization(r16));
}
BENCHMARK(BM_SubsetFactorizationR16)->Args({24, 48})->Args({1, -1})->Unit(benchmark::kMillisecond);

void BM_ClassifyDoublyEven(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(doubly_even::classify(1, 4));
}
BENCHMARK(BM_ClassifyDoublyEven);

void BM_ClassifyPalindromic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(palindromic::classify(2, -7));
}
BENCHMARK(BM_ClassifyPalindromic);

void BM_VerifyPalindromic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_palindromic(1, -1));
}
BENCHMARK(BM_VerifyPalindromic)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
