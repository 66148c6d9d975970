// Serial reference kernels against their OpenMP versions, on SBM graphs of
// growing size. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "tvmin/sbm.h"
#include "tvmin/solver.h"
#include "tvmin/solver_kernels.h"

namespace {

using namespace tvmin;

struct Fixture {
  Graph graph;
  std::vector<SeedValue> seeds;
  SolverState state;
};

Fixture make_fixture(NodeId n) {
  const NodeId half = n / 2;
  // Mean degree around 20 regardless of n.
  const double p_in = std::min(1.0, 36.0 / half);
  const double p_out = std::min(1.0, 4.0 / half);
  SbmInstance inst = make_instance(SbmParams{{half, n - half}, p_in, p_out}, 5, 42);
  Fixture f{std::move(inst.graph), {}, {}};
  for (NodeId i : inst.seeds.per_cluster[0]) f.seeds.push_back({i, 1.0});
  for (NodeId i : inst.seeds.per_cluster[1]) f.seeds.push_back({i, 0.0});
  f.state = init(f.graph, f.seeds);
  for (int r = 0; r < 10; ++r) iterate(f.state, f.graph, f.seeds);
  return f;
}

template <bool kParallel>
void BM_DualStep(benchmark::State& st) {
  Fixture f = make_fixture(static_cast<NodeId>(st.range(0)));
  for (auto _ : st) {
    if constexpr (kParallel) {
      kernels::dual_step_parallel(f.graph, f.state.x_cur.values(), f.state.y);
    } else {
      kernels::dual_step_serial(f.graph, f.state.x_cur.values(), f.state.y);
    }
    benchmark::DoNotOptimize(f.state.y.data());
  }
  st.SetItemsProcessed(st.iterations() * f.graph.num_edges());
}

template <bool kParallel>
void BM_PrimalStep(benchmark::State& st) {
  Fixture f = make_fixture(static_cast<NodeId>(st.range(0)));
  for (auto _ : st) {
    if constexpr (kParallel) {
      kernels::primal_step_parallel(f.graph, f.state.gamma, f.state.y, f.state.x_cur.values(),
                                    f.state.x_next.values());
    } else {
      kernels::primal_step_serial(f.graph, f.state.gamma, f.state.y, f.state.x_cur.values(),
                                  f.state.x_next.values());
    }
    benchmark::DoNotOptimize(f.state.x_next.data());
  }
  st.SetItemsProcessed(st.iterations() * f.graph.num_edges());
}

template <Backend kBackend>
void BM_Iterate(benchmark::State& st) {
  Fixture f = make_fixture(static_cast<NodeId>(st.range(0)));
  for (auto _ : st) {
    iterate(f.state, f.graph, f.seeds, kBackend);
    benchmark::DoNotOptimize(f.state.x_bar.data());
  }
  st.SetItemsProcessed(st.iterations() * f.graph.num_edges());
}

}  // namespace

BENCHMARK(BM_DualStep<false>)->Name("dual_step/serial")->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_DualStep<true>)->Name("dual_step/parallel")->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_PrimalStep<false>)->Name("primal_step/serial")->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_PrimalStep<true>)->Name("primal_step/parallel")->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_Iterate<Backend::kSerial>)->Name("iterate/serial")->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_Iterate<Backend::kParallel>)->Name("iterate/parallel")->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
