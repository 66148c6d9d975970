#ifndef TVMIN_SOLVER_H_
#define TVMIN_SOLVER_H_

#include <span>
#include <vector>

#include "tvmin/graph.h"

namespace tvmin {

// Prescribed value of the recovered signal at a labeled node.
struct SeedValue {
  NodeId node;
  double value;
};

enum class Backend { kSerial, kParallel };

struct SolverConfig {
  int max_iters = 2000;
  // Stop once one sweep moves the running average by less than this (sup norm).
  double tol = 1e-6;
  bool record_history = false;
  Backend backend = Backend::kSerial;
};

// Iterates of the primal-dual scheme for one indicator problem.
struct SolverState {
  GraphSignal x_prev;
  GraphSignal x_cur;
  GraphSignal x_bar;
  GraphSignal x_tilde;  // scratch
  GraphSignal x_next;   // scratch
  std::vector<double> y;  // one dual variable per edge
  std::vector<double> gamma;  // primal step per node
  int r = 0;
  double last_change = 0.0;
};

struct SolveDiagnostics {
  int iters = 0;
  double tv_final = 0.0;
  bool converged = false;
  // max over seeds of |x_bar_i - prescribed value|
  double residual_sup = 0.0;
  double last_change = 0.0;
};

struct SolveResult {
  GraphSignal x_bar;
  SolveDiagnostics diagnostics;
  // Primal iterates x_cur after each sweep, when record_history is set.
  std::vector<GraphSignal> history;
};

// Zero primal and dual iterates, gamma_i = 1/d_i (1 for isolated nodes).
// Throws EmptySeedSet, InvalidNodeId or InvalidSeed.
SolverState init(const Graph& g, std::span<const SeedValue> seeds);

// One sweep: extrapolate, dual ascent with clipping, primal descent, clamp
// the seeds, then fold the new iterate into the running average.
void iterate(SolverState& state, const Graph& g, std::span<const SeedValue> seeds,
             Backend backend = Backend::kSerial);

// Minimizes the total variation subject to the seed values and returns the
// running average of the primal iterates.
SolveResult solve(const Graph& g, std::span<const SeedValue> seeds,
                  const SolverConfig& config = {});

// TV objective being minimized.
double objective(const Graph& g, const GraphSignal& x);

// 1 where x > 1/2, else 0.
GraphSignal round_half(const GraphSignal& x);

}  // namespace tvmin

#endif  // TVMIN_SOLVER_H_
