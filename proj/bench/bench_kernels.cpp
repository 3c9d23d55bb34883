// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "drinfeld/context.hpp"
#include "drinfeld/deligne_lusztig.hpp"
#include "drinfeld/kernels.hpp"

using namespace drinfeld;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::Serial : Exec::Parallel; }

const Context& context(unsigned q) {
  static std::map<unsigned, std::unique_ptr<Context>> cache;
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<Context>(q);
  return *slot;
}

void BM_ConjugacyLabels(benchmark::State& state) {
  const Context& ctx = context(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::conjugacy_labels(ctx.table, exec_of(state)));
}

void BM_ConjugateHits(benchmark::State& state) {
  const Context& ctx = context(static_cast<unsigned>(state.range(0)));
  std::vector<int> slot(ctx.table.size(), -1);
  for (std::size_t i = 0; i < ctx.B.members.size(); ++i) slot[ctx.B.members[i]] = static_cast<int>(i);
  for (auto _ : state) {
    for (const auto& cls : ctx.classes.classes()) {
      benchmark::DoNotOptimize(
          kernels::conjugate_hits(ctx.table, cls.representative, slot, ctx.B.order(), exec_of(state)));
    }
  }
}

void BM_AffinePointsQ2(benchmark::State& state) {
  const Context& ctx = context(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::affine_curve_points(ctx.tower, 2, exec_of(state)));
}

void BM_AffinePointsQ4(benchmark::State& state) {
  const Context& ctx = context(static_cast<unsigned>(state.range(0)));
  const QuarticField k(ctx.tower);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::affine_curve_points_quartic(k, exec_of(state)));
}

void BM_LefschetzGrid(benchmark::State& state) {
  const Context& ctx = context(static_cast<unsigned>(state.range(0)));
  std::vector<Mat2> reps;
  for (std::size_t c : ctx.classes.p_regular()) reps.push_back(ctx.table.element(ctx.classes[c].representative));
  const auto mu = ctx.tower.mu_subgroup();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lefschetz_grid(ctx.tower, reps, mu, exec_of(state)));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long q : {5, 8, 9, 11})
    for (long mode : {0, 1}) b->Args({q, mode});
  b->ArgNames({"q", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_ConjugacyLabels)->Apply(sizes);
BENCHMARK(BM_ConjugateHits)->Apply(sizes);
BENCHMARK(BM_AffinePointsQ2)->Apply(sizes);
BENCHMARK(BM_AffinePointsQ4)->Apply(sizes);
BENCHMARK(BM_LefschetzGrid)->Apply(sizes);

BENCHMARK_MAIN();
