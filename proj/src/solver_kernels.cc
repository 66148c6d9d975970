#include "tvmin/solver_kernels.h"

#include <cstddef>

namespace tvmin::kernels {

void extrapolate_serial(std::span<const double> x_cur, std::span<const double> x_prev,
                        std::span<double> x_tilde) {
  for (std::size_t i = 0; i < x_cur.size(); ++i) {
    x_tilde[i] = detail::extrapolated(x_cur[i], x_prev[i]);
  }
}

void extrapolate_parallel(std::span<const double> x_cur, std::span<const double> x_prev,
                          std::span<double> x_tilde) {
  const auto n = static_cast<std::ptrdiff_t>(x_cur.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    x_tilde[i] = detail::extrapolated(x_cur[i], x_prev[i]);
  }
}

void dual_step_serial(const Graph& g, std::span<const double> x_tilde, std::span<double> y) {
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    y[e] = detail::clipped_dual(y[e], x_tilde[edges[e].head], x_tilde[edges[e].tail]);
  }
}

void dual_step_parallel(const Graph& g, std::span<const double> x_tilde,
                        std::span<double> y) {
  const auto edges = g.edges();
  const auto m = static_cast<std::ptrdiff_t>(edges.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t e = 0; e < m; ++e) {
    y[e] = detail::clipped_dual(y[e], x_tilde[edges[e].head], x_tilde[edges[e].tail]);
  }
}

void primal_step_serial(const Graph& g, std::span<const double> gamma,
                        std::span<const double> y, std::span<const double> x_cur,
                        std::span<double> x_next) {
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    x_next[i] = x_cur[i] - gamma[i] * detail::divergence(g, i, y);
  }
}

void primal_step_parallel(const Graph& g, std::span<const double> gamma,
                          std::span<const double> y, std::span<const double> x_cur,
                          std::span<double> x_next) {
  const NodeId n = g.num_nodes();
#pragma omp parallel for schedule(dynamic, 256)
  for (NodeId i = 0; i < n; ++i) {
    x_next[i] = x_cur[i] - gamma[i] * detail::divergence(g, i, y);
  }
}

double average_serial(std::span<const double> x, double r, std::span<double> x_bar) {
  double change = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double next = x_bar[i] + (x[i] - x_bar[i]) / r;
    change = std::max(change, std::abs(next - x_bar[i]));
    x_bar[i] = next;
  }
  return change;
}

double average_parallel(std::span<const double> x, double r, std::span<double> x_bar) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double change = 0.0;
#pragma omp parallel for schedule(static) reduction(max : change)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double next = x_bar[i] + (x[i] - x_bar[i]) / r;
    change = std::max(change, std::abs(next - x_bar[i]));
    x_bar[i] = next;
  }
  return change;
}

}  // namespace tvmin::kernels
