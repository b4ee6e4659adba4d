#include <benchmark/benchmark.h>

#include <random>

#include "qal/families.hpp"
#include "qal/invariants.hpp"
#include "qal/qa.hpp"
#include "support/random_diagrams.hpp"

using namespace qal;

namespace {

std::vector<Diagram> sample(int crossings, int count) {
  std::mt19937_64 rng(20240611 + crossings);
  std::vector<Diagram> out;
  while (static_cast<int>(out.size()) < count) {
    Diagram d = qal::testing::random_braid_diagram(rng, crossings);
    if (d.crossing_count() == crossings) out.push_back(std::move(d));
  }
  return out;
}

void BM_BracketStateSum(benchmark::State& state) {
  const auto ds = sample(static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bracket_statesum(ds[k++ % ds.size()]));
}
BENCHMARK(BM_BracketStateSum)->DenseRange(4, 14, 2);

void BM_BracketSkein(benchmark::State& state) {
  const auto ds = sample(static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bracket_skein(ds[k++ % ds.size()]));
}
BENCHMARK(BM_BracketSkein)->DenseRange(4, 20, 4);

void BM_Determinant(benchmark::State& state) {
  const auto ds = sample(static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(determinant(ds[k++ % ds.size()]));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(12);

void BM_CertifyFixture(benchmark::State& state, const char* name) {
  const Diagram d = fixture(name).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(certify(d, SearchBudget{}));
}
BENCHMARK_CAPTURE(BM_CertifyFixture, FIG8, "FIG8");
BENCHMARK_CAPTURE(BM_CertifyFixture, K5_2, "K5_2");
BENCHMARK_CAPTURE(BM_CertifyFixture, K7_1, "K7_1");

void BM_EnumerateFixturesPlusTwists(benchmark::State& state) {
  auto corpus = builtin_fixtures();
  const auto extra = twist_extensions(corpus, static_cast<int>(state.range(0)));
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(corpus));
}
BENCHMARK(BM_EnumerateFixturesPlusTwists)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
