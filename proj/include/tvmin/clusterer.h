#ifndef TVMIN_CLUSTERER_H_
#define TVMIN_CLUSTERER_H_

#include <span>
#include <vector>

#include "tvmin/graph.h"
#include "tvmin/sbm.h"
#include "tvmin/solver.h"

namespace tvmin {

// A node whose cluster (1-based) is known.
struct LabeledSeed {
  NodeId node;
  int cluster;
};

std::vector<LabeledSeed> labeled_seeds(const SeedSet& seeds);

// Seed values for the indicator of cluster k: 1 on seeds labeled k, 0 on the
// other seeds.
std::vector<SeedValue> indicator_targets(std::span<const LabeledSeed> seeds, int k);

struct ClusteringResult {
  // Estimated cluster per node, 1..K.
  std::vector<int> assignment;
  // scores[k-1] is the averaged indicator estimate for cluster k.
  std::vector<GraphSignal> scores;
  std::vector<SolveDiagnostics> diagnostics;

  int num_clusters() const { return static_cast<int>(scores.size()); }
};

// Runs one indicator solve per cluster and assigns each node to the cluster
// with the largest score, ties going to the smallest index. The solves run
// concurrently when called outside an OpenMP parallel region. Throws
// MissingClusterSeeds if some cluster in 1..num_clusters has no seed.
ClusteringResult cluster(const Graph& g, std::span<const LabeledSeed> seeds,
                         int num_clusters, const SolverConfig& config = {});

// Decodes scores by argmax, smallest index on ties.
std::vector<int> argmax_assignment(std::span<const GraphSignal> scores);

struct Accuracy {
  double value = 1.0;
  std::size_t correct = 0;
  std::size_t counted = 0;
  // Nothing left to score (every node is a seed); value is 1 by convention.
  bool degenerate = false;
};

// Fraction of unlabeled nodes whose estimated cluster is the true one.
Accuracy accuracy(const ClusteringResult& result, const Partition& truth,
                  const SeedSet& seeds, bool include_seeds = false);

}  // namespace tvmin

#endif  // TVMIN_CLUSTERER_H_
