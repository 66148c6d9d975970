#include "tvmin/solver.h"

#include <cmath>
#include <string>
#include <utility>

#include "tvmin/errors.h"
#include "tvmin/solver_kernels.h"

namespace tvmin {

namespace {

void validate_seeds(const Graph& g, std::span<const SeedValue> seeds) {
  if (seeds.empty()) throw EmptySeedSet("at least one labeled node is required");
  std::vector<bool> seen(g.num_nodes(), false);
  for (const SeedValue& s : seeds) {
    if (s.node < 0 || s.node >= g.num_nodes()) {
      throw InvalidNodeId("seed node " + std::to_string(s.node) + " out of range");
    }
    if (!std::isfinite(s.value)) {
      throw InvalidSeed("seed node " + std::to_string(s.node) + " has a non-finite value");
    }
    if (seen[s.node]) {
      throw InvalidSeed("seed node " + std::to_string(s.node) + " listed twice");
    }
    seen[s.node] = true;
  }
}

}  // namespace

SolverState init(const Graph& g, std::span<const SeedValue> seeds) {
  validate_seeds(g, seeds);
  const auto n = static_cast<std::size_t>(g.num_nodes());
  SolverState s;
  s.x_prev = GraphSignal(n);
  s.x_cur = GraphSignal(n);
  s.x_bar = GraphSignal(n);
  s.x_tilde = GraphSignal(n);
  s.x_next = GraphSignal(n);
  s.y.assign(static_cast<std::size_t>(g.num_edges()), 0.0);
  s.gamma.resize(n);
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const int d = g.degree(i);
    s.gamma[i] = d > 0 ? 1.0 / d : 1.0;
  }
  return s;
}

void iterate(SolverState& s, const Graph& g, std::span<const SeedValue> seeds,
             Backend backend) {
  if (backend == Backend::kParallel) {
    kernels::extrapolate_parallel(s.x_cur.values(), s.x_prev.values(), s.x_tilde.values());
    kernels::dual_step_parallel(g, s.x_tilde.values(), s.y);
    kernels::primal_step_parallel(g, s.gamma, s.y, s.x_cur.values(), s.x_next.values());
  } else {
    kernels::extrapolate_serial(s.x_cur.values(), s.x_prev.values(), s.x_tilde.values());
    kernels::dual_step_serial(g, s.x_tilde.values(), s.y);
    kernels::primal_step_serial(g, s.gamma, s.y, s.x_cur.values(), s.x_next.values());
  }
  for (const SeedValue& seed : seeds) s.x_next[seed.node] = seed.value;

  // x_prev <- x_cur <- x_next, recycling the old x_prev buffer as scratch.
  std::swap(s.x_prev, s.x_cur);
  std::swap(s.x_cur, s.x_next);
  ++s.r;

  const double r = s.r;
  s.last_change = backend == Backend::kParallel
                      ? kernels::average_parallel(s.x_cur.values(), r, s.x_bar.values())
                      : kernels::average_serial(s.x_cur.values(), r, s.x_bar.values());
}

SolveResult solve(const Graph& g, std::span<const SeedValue> seeds,
                  const SolverConfig& config) {
  if (config.max_iters < 1) throw InvalidParameter("max_iters must be >= 1");
  if (!(config.tol >= 0.0)) throw InvalidParameter("tol must be >= 0");

  SolverState state = init(g, seeds);
  SolveResult result;
  bool converged = false;
  while (state.r < config.max_iters) {
    iterate(state, g, seeds, config.backend);
    if (config.record_history) result.history.push_back(state.x_cur);
    if (state.last_change < config.tol) {
      converged = true;
      break;
    }
  }

  SolveDiagnostics& d = result.diagnostics;
  d.iters = state.r;
  d.converged = converged;
  d.last_change = state.last_change;
  d.tv_final = tv(g, state.x_bar);
  for (const SeedValue& seed : seeds) {
    d.residual_sup = std::max(d.residual_sup, std::abs(state.x_bar[seed.node] - seed.value));
  }
  result.x_bar = std::move(state.x_bar);
  return result;
}

double objective(const Graph& g, const GraphSignal& x) { return tv(g, x); }

GraphSignal round_half(const GraphSignal& x) {
  GraphSignal out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] > 0.5 ? 1.0 : 0.0;
  return out;
}

}  // namespace tvmin
