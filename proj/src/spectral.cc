#include "tvmin/spectral.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "tvmin/errors.h"
#include "tvmin/rng.h"

namespace tvmin {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

void laplacian_times(const Graph& g, const Eigen::VectorXd& v, Eigen::VectorXd& out) {
  for (NodeId i = 0; i < g.num_nodes(); ++i) out[i] = g.degree(i) * v[i];
  for (const Edge& e : g.edges()) {
    out[e.head] -= v[e.tail];
    out[e.tail] -= v[e.head];
  }
}

void remove_mean(Eigen::VectorXd& v) { v.array() -= v.mean(); }

}  // namespace

int count_components(const Eigen::MatrixXd& laplacian) {
  const auto n = static_cast<int>(laplacian.rows());
  DisjointSets sets(n);
  int components = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (laplacian(i, j) != 0.0 && sets.unite(i, j)) --components;
    }
  }
  return components;
}

int count_components(const Graph& g) {
  DisjointSets sets(g.num_nodes());
  int components = g.num_nodes();
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.head, e.tail)) --components;
  }
  return components;
}

double lambda2(const Eigen::MatrixXd& laplacian) {
  if (laplacian.rows() != laplacian.cols()) {
    throw NonSymmetricMatrix("matrix is not square");
  }
  const double scale = std::max(1.0, laplacian.cwiseAbs().maxCoeff());
  if ((laplacian - laplacian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NonSymmetricMatrix("matrix is not symmetric");
  }
  if (laplacian.rows() < 2 || count_components(laplacian) > 1) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian,
                                                        Eigen::EigenvaluesOnly);
  return std::max(0.0, solver.eigenvalues()[1]);
}

double lambda2_lanczos(const Graph& g, const LanczosOptions& options) {
  const NodeId n = g.num_nodes();
  if (n < 2 || count_components(g) > 1) return 0.0;
  const int max_steps = std::min<int>(options.max_steps, n - 1);

  const CounterRng rng(0x6c616e637a6f73ULL);
  Eigen::VectorXd q(n);
  for (NodeId i = 0; i < n; ++i) q[i] = rng.uniform(static_cast<std::uint64_t>(i)) - 0.5;
  remove_mean(q);
  q.normalize();

  std::vector<Eigen::VectorXd> basis{q};
  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w(n);
  double ritz = 0.0;
  for (int j = 0; j < max_steps; ++j) {
    laplacian_times(g, basis[j], w);
    alpha.push_back(basis[j].dot(w));
    // Full reorthogonalization, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      remove_mean(w);
      for (const auto& b : basis) w -= b.dot(w) * b;
    }
    const double b_next = w.norm();

    const int m = j + 1;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
    for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
    ritz = tri.eigenvalues()[0];
    const double residual = b_next * std::abs(tri.eigenvectors()(m - 1, 0));
    if (residual <= options.rel_tol * std::max(1.0, std::abs(ritz)) || m == n - 1) break;

    beta.push_back(b_next);
    basis.push_back(w / b_next);
  }
  return std::max(0.0, ritz);
}

double lambda2(const Graph& g, NodeId dense_cap) {
  if (g.num_nodes() <= dense_cap) return lambda2(laplacian(g, dense_cap));
  return lambda2_lanczos(g);
}

}  // namespace tvmin
