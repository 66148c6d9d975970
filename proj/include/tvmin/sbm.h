#ifndef TVMIN_SBM_H_
#define TVMIN_SBM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "tvmin/graph.h"

namespace tvmin {

struct SbmParams {
  std::vector<NodeId> cluster_sizes;
  double p_in = 0.0;
  double p_out = 0.0;

  // Throws InvalidParameter.
  void validate() const;
  NodeId total_nodes() const;
  int num_clusters() const { return static_cast<int>(cluster_sizes.size()); }
};

// Labeled nodes, S per cluster. per_cluster[k-1] lists the seeds of cluster k
// in draw order.
struct SeedSet {
  std::vector<std::vector<NodeId>> per_cluster;
  int per_cluster_count = 0;

  // All seeds, cluster 1 first.
  std::vector<NodeId> nodes() const;
  std::size_t size() const;
  std::vector<bool> mask(NodeId num_nodes) const;
};

struct SbmGraph {
  Graph graph;
  Partition truth;
};

struct SbmInstance {
  Graph graph;
  Partition truth;
  SeedSet seeds;
  std::uint64_t rng_seed = 0;
  // Absent for instances that were not sampled from an SBM.
  std::optional<SbmParams> params;
};

// One Bernoulli draw per unordered pair i < j, success probability p_in
// inside a cluster and p_out across. Draw (i, j) is addressed by the pair's
// rank in row-major upper-triangular order, so the result is a pure function
// of (params, rng_seed). With permute_nodes, node ids are relabeled by a
// uniform random permutation after sampling.
SbmGraph generate(const SbmParams& params, std::uint64_t rng_seed,
                  bool permute_nodes = false);

// S nodes per cluster, uniform without replacement. Throws TooManySeeds if
// s exceeds the smallest cluster and InvalidParameter if s < 1.
SeedSet select_seeds(const Partition& truth, int s, std::uint64_t rng_seed);

// Graph and seed draws from independent streams of rng_seed.
SbmInstance make_instance(const SbmParams& params, int s, std::uint64_t rng_seed);

}  // namespace tvmin

#endif  // TVMIN_SBM_H_
