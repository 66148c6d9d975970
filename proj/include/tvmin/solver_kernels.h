#ifndef TVMIN_SOLVER_KERNELS_H_
#define TVMIN_SOLVER_KERNELS_H_

// Per-sweep kernels of the primal-dual TV-minimization iteration.
//
// Every kernel exists twice: a plain loop (the reference) and an OpenMP
// version. Both evaluate the same per-element expression, and every element
// is written by exactly one loop iteration, so the two produce bit-identical
// results for any thread count.

#include <algorithm>
#include <cmath>
#include <span>

#include "tvmin/graph.h"

namespace tvmin::kernels {

namespace detail {

inline double extrapolated(double cur, double prev) { return 2.0 * cur - prev; }

inline double clipped_dual(double y, double head, double tail) {
  const double v = y + 0.5 * (head - tail);
  return v / std::max(1.0, std::abs(v));
}

// sum_{j in N+(i)} y_(i,j) - sum_{j in N-(i)} y_(j,i), i.e. (D^T y)_i.
inline double divergence(const Graph& g, NodeId i, std::span<const double> y) {
  const auto edges = g.incident_edges(i);
  const std::size_t split = g.upper_begin(i);
  double upper = 0.0;
  for (std::size_t t = split; t < edges.size(); ++t) upper += y[edges[t]];
  double lower = 0.0;
  for (std::size_t t = 0; t < split; ++t) lower += y[edges[t]];
  return upper - lower;
}

}  // namespace detail

// x_tilde = 2 x_cur - x_prev
void extrapolate_serial(std::span<const double> x_cur, std::span<const double> x_prev,
                        std::span<double> x_tilde);
void extrapolate_parallel(std::span<const double> x_cur, std::span<const double> x_prev,
                          std::span<double> x_tilde);

// y_e <- clip(y_e + (x_tilde[e+] - x_tilde[e-]) / 2) onto [-1, 1]
void dual_step_serial(const Graph& g, std::span<const double> x_tilde, std::span<double> y);
void dual_step_parallel(const Graph& g, std::span<const double> x_tilde,
                        std::span<double> y);

// x_next_i = x_cur_i - gamma_i (D^T y)_i
void primal_step_serial(const Graph& g, std::span<const double> gamma,
                        std::span<const double> y, std::span<const double> x_cur,
                        std::span<double> x_next);
void primal_step_parallel(const Graph& g, std::span<const double> gamma,
                          std::span<const double> y, std::span<const double> x_cur,
                          std::span<double> x_next);

// x_bar <- x_bar + (x - x_bar) / r; returns max_i |change of x_bar_i|.
double average_serial(std::span<const double> x, double r, std::span<double> x_bar);
double average_parallel(std::span<const double> x, double r, std::span<double> x_bar);

}  // namespace tvmin::kernels

#endif  // TVMIN_SOLVER_KERNELS_H_
