#include <benchmark/benchmark.h>

#include "dimlift/genfact.hpp"
#include "dimlift/lift.hpp"
#include "dimlift/oracle.hpp"
#include "dimlift/refine.hpp"

using namespace dimlift;

namespace {

void BM_Gen(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::string>> comps;
  for (std::size_t i = 0; i < k; ++i) comps.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
  const PssSpace a(comps);
  std::vector<std::vector<std::size_t>> ones(k, std::vector<std::size_t>{0});
  const BoolMap f = BoolMap::from_lists(k, 1, ones);
  for (auto _ : state) benchmark::DoNotOptimize(gen_simple(a, f, 2));
}
BENCHMARK(BM_Gen)->DenseRange(1, 5);

void BM_FactorGeneral(benchmark::State& state) {
  Rng rng(1);
  std::vector<FactorInstance> instances;
  for (int i = 0; i < 32; ++i) instances.push_back(random_factor_instance(rng, 3, 2, 3));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& in = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(factor_general(in.f, in.h, in.gg, in.lambda));
  }
}
BENCHMARK(BM_FactorGeneral);

void BM_Dislift(benchmark::State& state) {
  const Poset p = Poset::boolean_lattice(2);
  const SemDiagram phi = random_diagram(p, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(dislift(phi));
}
BENCHMARK(BM_Dislift)->DenseRange(1, 3);

void BM_FmSquare(benchmark::State& state) {
  Rng rng(2);
  const SquareParams p = random_square_params(rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_nonsimpl_square(p));
}
BENCHMARK(BM_FmSquare);

void BM_MultRefine(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<RatVector>> decomps(k, {{Rational(1, 3)}, {Rational(2, 3)}, {Rational(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(mult_refine(decomps));
}
BENCHMARK(BM_MultRefine)->DenseRange(1, 6);

}  // namespace
BENCHMARK_MAIN();
