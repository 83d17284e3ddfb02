#include <benchmark/benchmark.h>

#include <random>

#include "sftzeta/decomp.hpp"
#include "sftzeta/galois.hpp"
#include "sftzeta/parse.hpp"
#include "sftzeta/spectral.hpp"
#include "sftzeta/zeta.hpp"

using namespace sftzeta;

namespace {

Sft random_shift(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::string> states;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    states.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) rows[i][j] = coin(rng) ? 1 : 0;
    rows[i][(i + 1) % n] = 1;  // keep it essential
  }
  return from_matrix(states, rows);
}

void BM_WordCount(benchmark::State& state) {
  Sft x = random_shift(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(word_count(x, 40));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WordCount)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_EntropyBracket(benchmark::State& state) {
  Sft x = random_shift(static_cast<int>(state.range(0)), 34);
  Rational tol(1, 1000000000);
  for (auto _ : state) benchmark::DoNotOptimize(entropy_bounds(x, tol));
}
BENCHMARK(BM_EntropyBracket)->RangeMultiplier(2)->Range(4, 32);

void BM_CharPoly(benchmark::State& state) {
  Sft x = random_shift(static_cast<int>(state.range(0)), 56);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_reversed(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_ZetaSeries(benchmark::State& state) {
  Sft x = random_shift(12, 78);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_series(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ZetaSeries)->RangeMultiplier(2)->Range(8, 64);

void BM_StrongCore(benchmark::State& state) {
  Sft x = prune(random_shift(static_cast<int>(state.range(0)), 90));
  for (auto _ : state) benchmark::DoNotOptimize(strong_core(x));
}
BENCHMARK(BM_StrongCore)->RangeMultiplier(2)->Range(8, 64);

void BM_PointCounts(benchmark::State& state) {
  DifferenceSystem sys = parse_dsys_file("p 2\ne 1\nvertex x^3+x+1\nedge y+x^2\n");
  SftWithFrobenius built = build_sft(sys);
  for (auto _ : state) {
    for (int n = 1; n <= 8; ++n) benchmark::DoNotOptimize(point_count_direct(sys, n));
  }
}
BENCHMARK(BM_PointCounts);

void BM_BuildSft(benchmark::State& state) {
  DifferenceSystem sys = parse_dsys_file("p 5\ne 1\nvertex x^5+4*x\nedge x*y\n");
  for (auto _ : state) benchmark::DoNotOptimize(build_sft(sys));
}
BENCHMARK(BM_BuildSft);

}  // namespace

BENCHMARK_MAIN();
