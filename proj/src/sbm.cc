#include "tvmin/sbm.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tvmin/errors.h"
#include "tvmin/rng.h"

namespace tvmin {

namespace {

constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kPermutationStream = 2;
constexpr std::uint64_t kSeedStream = 3;

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

void SbmParams::validate() const {
  if (cluster_sizes.empty()) throw InvalidParameter("at least one cluster is required");
  for (NodeId n : cluster_sizes) {
    if (n < 1) throw InvalidParameter("cluster size " + std::to_string(n) + " < 1");
  }
  if (!is_probability(p_in)) throw InvalidParameter("p_in must lie in [0,1]");
  if (!is_probability(p_out)) throw InvalidParameter("p_out must lie in [0,1]");
}

NodeId SbmParams::total_nodes() const {
  return std::accumulate(cluster_sizes.begin(), cluster_sizes.end(), NodeId{0});
}

std::vector<NodeId> SeedSet::nodes() const {
  std::vector<NodeId> out;
  for (const auto& c : per_cluster) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::size_t SeedSet::size() const {
  std::size_t n = 0;
  for (const auto& c : per_cluster) n += c.size();
  return n;
}

std::vector<bool> SeedSet::mask(NodeId num_nodes) const {
  std::vector<bool> m(num_nodes, false);
  for (const auto& c : per_cluster) {
    for (NodeId i : c) m[i] = true;
  }
  return m;
}

SbmGraph generate(const SbmParams& params, std::uint64_t rng_seed, bool permute_nodes) {
  params.validate();
  const NodeId n = params.total_nodes();
  Partition truth = Partition::contiguous(params.cluster_sizes);
  const CounterRng pair_rng = CounterRng(rng_seed).split(kGraphStream);

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::uint64_t rank = 0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j, ++rank) {
      const double p = truth.cluster_of(i) == truth.cluster_of(j) ? params.p_in
                                                                  : params.p_out;
      if (pair_rng.uniform(rank) < p) edges.emplace_back(i, j);
    }
  }

  if (permute_nodes) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    RngStream stream(CounterRng(rng_seed).split(kPermutationStream));
    for (NodeId i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[stream.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    for (auto& [a, b] : edges) {
      a = perm[a];
      b = perm[b];
    }
    std::vector<int> assignment(n);
    for (NodeId i = 0; i < n; ++i) assignment[perm[i]] = truth.cluster_of(i);
    truth = Partition::from_assignment(std::move(assignment));
  }

  return {Graph::build(n, edges), std::move(truth)};
}

SeedSet select_seeds(const Partition& truth, int s, std::uint64_t rng_seed) {
  if (s < 1) throw InvalidParameter("seeds per cluster must be >= 1");
  SeedSet seeds;
  seeds.per_cluster_count = s;
  const CounterRng base = CounterRng(rng_seed).split(kSeedStream);
  for (int k = 1; k <= truth.num_clusters(); ++k) {
    std::vector<NodeId> members = truth.members(k);
    if (static_cast<std::size_t>(s) > members.size()) {
      throw TooManySeeds(std::to_string(s) + " seeds requested but cluster " +
                         std::to_string(k) + " has " + std::to_string(members.size()) +
                         " nodes");
    }
    // Partial Fisher-Yates: the first s slots end up a uniform sample.
    RngStream stream(base.split(static_cast<std::uint64_t>(k)));
    for (int t = 0; t < s; ++t) {
      const auto remaining = static_cast<std::uint64_t>(members.size() - t);
      std::swap(members[t], members[t + stream.below(remaining)]);
    }
    members.resize(s);
    seeds.per_cluster.push_back(std::move(members));
  }
  return seeds;
}

SbmInstance make_instance(const SbmParams& params, int s, std::uint64_t rng_seed) {
  SbmGraph sampled = generate(params, rng_seed);
  SbmInstance inst;
  inst.seeds = select_seeds(sampled.truth, s, rng_seed);
  inst.graph = std::move(sampled.graph);
  inst.truth = std::move(sampled.truth);
  inst.rng_seed = rng_seed;
  inst.params = params;
  return inst;
}

}  // namespace tvmin
