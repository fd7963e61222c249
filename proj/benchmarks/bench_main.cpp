#include <benchmark/benchmark.h>

#include <random>

#include "crossrank/periodic.hpp"
#include "crossrank/rank_engine.hpp"
#include "crossrank/representation.hpp"
#include "crossrank/sampling.hpp"
#include "crossrank/towers.hpp"

using namespace crossrank;

namespace {

const SystemConfig kBinary = SystemConfig::binary();
const Field kQ = Field::rationals();

void BM_EnumerateReturnWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int kmax = static_cast<int>(state.range(1));
  std::size_t words = 0;
  for (auto _ : state) {
    TowerFamily f = enumerate_return_words(kBinary, n, kmax);
    words = f.words.size();
    benchmark::DoNotOptimize(f.tail);
  }
  state.counters["words"] = static_cast<double>(words);
}
BENCHMARK(BM_EnumerateReturnWords)->Args({0, 30})->Args({1, 16})->Args({1, 24})->Args({2, 24})->Unit(benchmark::kMillisecond);

void BM_RankInterval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int kmax = static_cast<int>(state.range(1));
  const TowerFamily family = enumerate_return_words(kBinary, n, kmax);
  const CrossedElement a = parse_expr("chi(0;1)*t + 2*chi(-1;01) - t'*chi(-1;0)", kBinary, kQ);
  for (auto _ : state) benchmark::DoNotOptimize(rank_interval(CrossedMatrix{{a}}, family));
  state.counters["words"] = static_cast<double>(family.words.size());
}
BENCHMARK(BM_RankInterval)->Args({1, 16})->Args({1, 24})->Args({2, 24})->Unit(benchmark::kMillisecond);

// Native elimination against the Scalar route on the same words.
void BM_WordRanks(benchmark::State& state) {
  const bool native = state.range(0) != 0;
  const TowerFamily family = enumerate_return_words(kBinary, 1, 16);
  const CrossedElement a = parse_expr("chi(0;1)*t + 2*chi(-1;01) - t'*chi(-1;0)", kBinary, kQ);
  const ElementMatrix m{{truncate(a, 1, kBinary)}};
  const ProjectionKernel kernel(m, kBinary);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& w : family.words)
      total += native ? kernel.rank(w) : matrix_rank(project_matrix(m, w, kBinary));
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(native ? "native" : "scalar");
}
BENCHMARK(BM_WordRanks)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_MatrixRank(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  ScalarMatrix m = zero_matrix(kQ, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = sample::random_scalar(rng, kQ);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_MatrixRank)->Arg(8)->Arg(24)->Arg(48);

void BM_PeriodicRankKt(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const PeriodicPoint x{sample::random_word(rng, 2, l)};
  const CrossedElement a = sample::random_element(rng, 2, kQ, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(periodic_rank_kt(a, x));
}
BENCHMARK(BM_PeriodicRankKt)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
