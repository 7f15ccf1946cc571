#include <benchmark/benchmark.h>

#include "wba/algebra/diagram.hpp"
#include "wba/algebra/projectors.hpp"
#include "wba/dense/operations.hpp"
#include "wba/dense/random.hpp"
#include "wba/entanglement/bcs.hpp"
#include "wba/entanglement/block_positivity.hpp"
#include "wba/entanglement/werner.hpp"
#include "wba/maps/closed_forms.hpp"
#include "wba/maps/oracle.hpp"

using namespace wba;

namespace {

// Backward k-cycle with the first site transposed.
WbaDiagram backward_cycle(int k) {
  return WbaDiagram::from_permutation(cycle_permutation(CycleDirection::kBackward, k), SiteSubset{1});
}

}  // namespace

static void BM_RealizeDiagram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const WbaDiagram g = backward_cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(realize(g, d));
}
BENCHMARK(BM_RealizeDiagram)->Args({3, 3})->Args({4, 3})->Args({5, 2})->Args({5, 3});

static void BM_ComposeDiagrams(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WbaDiagram a = backward_cycle(n);
  const WbaDiagram b = WbaDiagram::from_permutation(cycle_permutation(CycleDirection::kForward, n), SiteSubset{n});
  for (auto _ : state) benchmark::DoNotOptimize(compose_diagrams(a, b));
}
BENCHMARK(BM_ComposeDiagrams)->Arg(3)->Arg(5)->Arg(8);

// The same map evaluated through the dense contraction and through the
// matrix-product closed form.
static void BM_CycleToOneOracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  Rng rng(1);
  const MapSpec spec{WbaElement(backward_cycle(k)), k - 1, 1, d};
  std::vector<DenseOperator> x;
  for (int i = 0; i < k - 1; ++i) x.push_back(random_matrix(d, 1, rng));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_oracle(spec, x));
}
BENCHMARK(BM_CycleToOneOracle)->Args({3, 3})->Args({4, 3})->Args({5, 3});

static void BM_CycleToOneClosedForm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  Rng rng(1);
  std::vector<DenseOperator> x;
  for (int i = 0; i < k - 1; ++i) x.push_back(random_matrix(d, 1, rng));
  x.push_back(DenseOperator::identity(1, d));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_cycle_to_one(CycleDirection::kBackward, 1, x));
}
BENCHMARK(BM_CycleToOneClosedForm)->Args({3, 3})->Args({4, 3})->Args({5, 3});

static void BM_FProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto label = admissible_projectors(n, k, 2).front();
  for (auto _ : state) benchmark::DoNotOptimize(f_projector(label.mu, label.alpha, n, k, 2));
}
BENCHMARK(BM_FProjector)->Args({4, 1})->Args({5, 2})->Args({6, 2});

static void BM_SeeSawBcs(benchmark::State& state) {
  const DenseOperator kernel = bcs_kernel(0.25, -0.1, 3);
  const PartitionSpec partition = parse_partition_spec("1|23");
  SearchBudget budget;
  budget.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_over_products(kernel, partition, budget));
}
BENCHMARK(BM_SeeSawBcs)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_WernerPartialTransposeCheck(benchmark::State& state) {
  Rng rng(2);
  const WernerParams p = random_valid_werner(3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_eigenvalue(partial_transpose(werner_state(p), SiteSubset{1})));
    benchmark::DoNotOptimize(werner_ppt_conditions(p.rs));
  }
}
BENCHMARK(BM_WernerPartialTransposeCheck);
BENCHMARK_MAIN();
