#include <benchmark/benchmark.h>

#include "hyperlab/linalg/determinant.hpp"
#include "hyperlab/pade/instances.hpp"
#include "hyperlab/pade/solve.hpp"

using namespace hyperlab;

namespace {

InterpolationProblem<Rational> instance(long m) {
  Rng rng(static_cast<std::uint64_t>(100 + m));
  return random_hg_problem(rng, m, m, WeightFamily::PlainST);
}

template <PadeSolution<Rational> (*Solve)(const InterpolationProblem<Rational>&)>
void run(benchmark::State& state) {
  const auto prob = instance(state.range(0));
  reset_det_stats();
  for (auto _ : state) benchmark::DoNotOptimize(Solve(prob));
  state.counters["max_det_order"] = static_cast<double>(det_stats().max_order);
}

void BM_BruteForce(benchmark::State& state) { run<solve_bruteforce<Rational>>(state); }
void BM_Condensed(benchmark::State& state) { run<solve_condensed<Rational>>(state); }
void BM_HgSaalschutz(benchmark::State& state) { run<solve_hg_saalschutz<Rational>>(state); }

void BM_CondensedElliptic(benchmark::State& state) {
  Rng rng(7);
  const auto kind = standard_bracket(BracketKind::Type::Elliptic, 256);
  const auto prob = random_vwp_problem(rng, kind, state.range(0), state.range(0), WeightFamily::VwpE, Complex(0L, 256));
  for (auto _ : state) benchmark::DoNotOptimize(solve_condensed(prob));
}

}  // namespace

BENCHMARK(BM_BruteForce)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Condensed)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HgSaalschutz)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CondensedElliptic)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
