#ifndef TVMIN_SPECTRAL_H_
#define TVMIN_SPECTRAL_H_

#include <Eigen/Dense>

#include "tvmin/graph.h"

namespace tvmin {

// Number of connected components of the graph whose Laplacian (or any
// symmetric matrix) has the given off-diagonal sparsity pattern.
int count_components(const Eigen::MatrixXd& laplacian);
int count_components(const Graph& g);

// Second-smallest eigenvalue (algebraic connectivity) of a symmetric PSD
// Laplacian. Exactly 0 when the pattern is disconnected; 0 for n < 2.
// Throws NonSymmetricMatrix.
double lambda2(const Eigen::MatrixXd& laplacian);

struct LanczosOptions {
  int max_steps = 300;
  double rel_tol = 1e-10;
};

// Lanczos on the complement of the all-ones vector with full
// reorthogonalization; matrix-vector products stream over the edges.
double lambda2_lanczos(const Graph& g, const LanczosOptions& options = {});

// Dense eigendecomposition up to dense_cap nodes, Lanczos beyond.
double lambda2(const Graph& g, NodeId dense_cap = kDefaultDenseCap);

}  // namespace tvmin

#endif  // TVMIN_SPECTRAL_H_
