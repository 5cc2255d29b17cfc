#include <benchmark/benchmark.h>

#include "besov/experiment.hpp"
#include "besov/fixtures.hpp"
#include "besov/norms.hpp"
#include "besov/solver.hpp"
#include "besov/synthesis.hpp"

namespace {

besov::Execution execFor(const benchmark::State& state) {
  return state.range(1) == 0 ? besov::Execution::serial : besov::Execution::parallel;
}

besov::CoefField field(int level) {
  return besov::makeSource({1.0, 1.5, 1}, level, 0.1, 7);
}

void BM_BesovNorm(benchmark::State& state) {
  const auto u = field(static_cast<int>(state.range(0)));
  const besov::BesovSpace space{0.5, 1.5, 1};
  const auto exec = execFor(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(besov::besovNorm(u, space, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}

void BM_SolveDiagonal(benchmark::State& state) {
  const int J = static_cast<int>(state.range(0));
  const auto u = field(J);
  const besov::DiagonalScaleOperator op(1.0, J, execFor(state));
  const auto data = besov::addNoise(op.apply(u), 1e-2, 3).noisy;
  const besov::PenaltySpec pen{{0.25, 1.5, 1}, 1.5, 1e-2};
  const auto exec = execFor(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(besov::solveDiagonal(op, data, pen, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}

void BM_PenaltyGradient(benchmark::State& state) {
  const auto u = field(static_cast<int>(state.range(0)));
  const besov::PenaltySpec pen{{0.25, 1.5, 1}, 1.5, 1.0};
  const auto exec = execFor(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(besov::penaltyGradient(u, pen, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}

void BM_RateExperiment(benchmark::State& state) {
  besov::ExperimentConfig config;
  config.signature = besov::toDouble(besov::fixtures::sobolevSmoothing(1));
  config.maxLevel = static_cast<int>(state.range(0));
  const auto exec = execFor(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(besov::runRateExperiment(config, exec));
  }
}

void levels(benchmark::internal::Benchmark* b) {
  for (int J : {12, 16, 20}) {
    b->Args({J, 0});
    b->Args({J, 1});
  }
  b->ArgNames({"J", "parallel"});
}

}  // namespace

BENCHMARK(BM_BesovNorm)->Apply(levels);
BENCHMARK(BM_SolveDiagonal)->Apply(levels);
BENCHMARK(BM_PenaltyGradient)->Apply(levels);
BENCHMARK(BM_RateExperiment)->Args({12, 0})->Args({12, 1})->ArgNames({"J", "parallel"});

BENCHMARK_MAIN();
