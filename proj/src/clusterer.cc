#include "tvmin/clusterer.h"

#include <omp.h>

#include <exception>
#include <stdexcept>
#include <string>

#include "tvmin/errors.h"

namespace tvmin {

std::vector<LabeledSeed> labeled_seeds(const SeedSet& seeds) {
  std::vector<LabeledSeed> out;
  for (std::size_t k = 0; k < seeds.per_cluster.size(); ++k) {
    for (NodeId i : seeds.per_cluster[k]) out.push_back({i, static_cast<int>(k + 1)});
  }
  return out;
}

std::vector<SeedValue> indicator_targets(std::span<const LabeledSeed> seeds, int k) {
  std::vector<SeedValue> out;
  out.reserve(seeds.size());
  for (const LabeledSeed& s : seeds) out.push_back({s.node, s.cluster == k ? 1.0 : 0.0});
  return out;
}

std::vector<int> argmax_assignment(std::span<const GraphSignal> scores) {
  if (scores.empty()) return {};
  std::vector<int> out(scores[0].size(), 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double best = scores[0][i];
    for (std::size_t k = 1; k < scores.size(); ++k) {
      if (scores[k][i] > best) {
        best = scores[k][i];
        out[i] = static_cast<int>(k + 1);
      }
    }
  }
  return out;
}

ClusteringResult cluster(const Graph& g, std::span<const LabeledSeed> seeds,
                         int num_clusters, const SolverConfig& config) {
  if (num_clusters < 1) throw InvalidParameter("need at least one cluster");
  std::vector<int> per_cluster(num_clusters, 0);
  for (const LabeledSeed& s : seeds) {
    if (s.cluster < 1 || s.cluster > num_clusters) {
      throw InvalidCluster("seed " + std::to_string(s.node) + " has label " +
                           std::to_string(s.cluster));
    }
    ++per_cluster[s.cluster - 1];
  }
  for (int k = 1; k <= num_clusters; ++k) {
    if (per_cluster[k - 1] == 0) {
      throw MissingClusterSeeds("cluster " + std::to_string(k) + " has no labeled node");
    }
  }

  ClusteringResult result;
  result.scores.resize(num_clusters);
  result.diagnostics.resize(num_clusters);

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (num_clusters > 1 && !omp_in_parallel())
  for (int k = 1; k <= num_clusters; ++k) {
    try {
      const auto targets = indicator_targets(seeds, k);
      SolveResult solved = solve(g, targets, config);
      result.scores[k - 1] = std::move(solved.x_bar);
      result.diagnostics[k - 1] = solved.diagnostics;
    } catch (...) {
#pragma omp critical(tvmin_cluster_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  result.assignment = argmax_assignment(result.scores);
  for (const LabeledSeed& s : seeds) {
    if (result.assignment[s.node] != s.cluster) {
      throw std::logic_error("seed " + std::to_string(s.node) +
                             " decoded to the wrong cluster");
    }
  }
  return result;
}

Accuracy accuracy(const ClusteringResult& result, const Partition& truth,
                  const SeedSet& seeds, bool include_seeds) {
  if (result.assignment.size() != static_cast<std::size_t>(truth.num_nodes())) {
    throw SignalSizeMismatch("assignment and partition sizes differ");
  }
  const std::vector<bool> is_seed = seeds.mask(truth.num_nodes());
  Accuracy acc;
  for (NodeId i = 0; i < truth.num_nodes(); ++i) {
    if (is_seed[i] && !include_seeds) continue;
    ++acc.counted;
    if (result.assignment[i] == truth.cluster_of(i)) ++acc.correct;
  }
  if (acc.counted == 0) {
    acc.degenerate = true;
    acc.value = 1.0;
  } else {
    acc.value = static_cast<double>(acc.correct) / static_cast<double>(acc.counted);
  }
  return acc;
}

}  // namespace tvmin
