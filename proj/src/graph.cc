#include "tvmin/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tvmin/errors.h"

namespace tvmin {

Graph Graph::build(NodeId num_nodes,
                   std::span<const std::pair<NodeId, NodeId>> edge_list) {
  if (num_nodes < 0) {
    throw InvalidNodeId("negative node count " + std::to_string(num_nodes));
  }
  Graph g;
  g.num_nodes_ = num_nodes;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes) {
      throw InvalidNodeId("edge {" + std::to_string(a) + "," + std::to_string(b) +
                          "} outside 0.." + std::to_string(num_nodes - 1));
    }
    if (a == b) {
      throw SelfLoop("self-loop at node " + std::to_string(a));
    }
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }

  std::vector<std::size_t> count(num_nodes + 1, 0);
  for (const Edge& e : g.edges_) {
    ++count[e.head + 1];
    ++count[e.tail + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  g.offsets_ = count;

  std::vector<std::pair<NodeId, EdgeId>> slots(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edges_[e];
    slots[fill[edge.head]++] = {edge.tail, e};
    slots[fill[edge.tail]++] = {edge.head, e};
  }

  g.neighbors_.resize(slots.size());
  g.incident_.resize(slots.size());
  g.upper_begin_.resize(num_nodes);
  for (NodeId i = 0; i < num_nodes; ++i) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (it != first && it->first == (it - 1)->first) {
        throw DuplicateEdge("edge {" + std::to_string(std::min(i, it->first)) + "," +
                            std::to_string(std::max(i, it->first)) +
                            "} listed more than once");
      }
      const std::size_t pos = static_cast<std::size_t>(it - slots.begin());
      g.neighbors_[pos] = it->first;
      g.incident_[pos] = it->second;
    }
    auto upper = std::upper_bound(g.neighbors_.begin() + g.offsets_[i],
                                  g.neighbors_.begin() + g.offsets_[i + 1], i);
    g.upper_begin_[i] =
        static_cast<std::size_t>(upper - (g.neighbors_.begin() + g.offsets_[i]));
  }
  return g;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(num_nodes_);
  for (NodeId i = 0; i < num_nodes_; ++i) d[i] = degree(i);
  return d;
}

std::optional<EdgeId> Graph::find_edge(NodeId i, NodeId j) const {
  if (i < 0 || i >= num_nodes_ || j < 0 || j >= num_nodes_) return std::nullopt;
  auto nbrs = neighbors(i);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
  if (it == nbrs.end() || *it != j) return std::nullopt;
  return incident_edges(i)[static_cast<std::size_t>(it - nbrs.begin())];
}

Partition Partition::from_assignment(std::vector<int> assignment) {
  Partition p;
  int max_k = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] < 1) {
      throw InvalidPartition("node " + std::to_string(i) + " has cluster index " +
                             std::to_string(assignment[i]) + " (must be >= 1)");
    }
    max_k = std::max(max_k, assignment[i]);
  }
  p.sizes_.assign(max_k, 0);
  for (int c : assignment) ++p.sizes_[c - 1];
  for (int k = 1; k <= max_k; ++k) {
    if (p.sizes_[k - 1] == 0) {
      throw InvalidPartition("cluster " + std::to_string(k) + " is empty");
    }
  }
  p.assignment_ = std::move(assignment);
  return p;
}

Partition Partition::contiguous(std::span<const NodeId> cluster_sizes) {
  std::vector<int> assignment;
  for (std::size_t k = 0; k < cluster_sizes.size(); ++k) {
    if (cluster_sizes[k] < 1) {
      throw InvalidPartition("cluster " + std::to_string(k + 1) + " has size " +
                             std::to_string(cluster_sizes[k]));
    }
    assignment.insert(assignment.end(), cluster_sizes[k], static_cast<int>(k + 1));
  }
  return from_assignment(std::move(assignment));
}

std::vector<NodeId> Partition::members(int k) const {
  check_cluster(k);
  std::vector<NodeId> out;
  out.reserve(sizes_[k - 1]);
  for (NodeId i = 0; i < num_nodes(); ++i) {
    if (assignment_[i] == k) out.push_back(i);
  }
  return out;
}

void Partition::check_cluster(int k) const {
  if (k < 1 || k > num_clusters()) {
    throw InvalidCluster("cluster index " + std::to_string(k) + " outside 1.." +
                         std::to_string(num_clusters()));
  }
}

namespace {

void check_dense(const Graph& g, NodeId cap) {
  if (g.num_nodes() > cap) {
    throw DenseSizeExceeded("dense matrix requested for " +
                            std::to_string(g.num_nodes()) + " nodes (cap " +
                            std::to_string(cap) + ")");
  }
}

void check_signal(const Graph& g, const GraphSignal& x) {
  if (x.size() != static_cast<std::size_t>(g.num_nodes())) {
    throw SignalSizeMismatch("signal has " + std::to_string(x.size()) +
                             " entries, graph has " + std::to_string(g.num_nodes()) +
                             " nodes");
  }
}

void check_partition(const Graph& g, const Partition& p, int k) {
  if (p.num_nodes() != g.num_nodes()) {
    throw InvalidPartition("partition covers " + std::to_string(p.num_nodes()) +
                           " nodes, graph has " + std::to_string(g.num_nodes()));
  }
  p.check_cluster(k);
}

}  // namespace

Eigen::MatrixXd incidence_matrix(const Graph& g, NodeId dense_cap) {
  check_dense(g, dense_cap);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(g.num_edges(), g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    d(e, g.edge(e).head) = 1.0;
    d(e, g.edge(e).tail) = -1.0;
  }
  return d;
}

Eigen::MatrixXd laplacian(const Graph& g, NodeId dense_cap) {
  check_dense(g, dense_cap);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.num_nodes(), g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) l(i, i) = g.degree(i);
  for (const Edge& e : g.edges()) {
    l(e.head, e.tail) = -1.0;
    l(e.tail, e.head) = -1.0;
  }
  return l;
}

double tv(const Graph& g, const GraphSignal& x) {
  check_signal(g, x);
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += std::abs(x[e.tail] - x[e.head]);
  return sum;
}

double tv_on_subset(const Graph& g, const GraphSignal& x,
                    std::span<const std::pair<NodeId, NodeId>> subset) {
  check_signal(g, x);
  double sum = 0.0;
  for (const auto& [i, j] : subset) {
    if (!g.has_edge(i, j)) {
      throw UnknownEdge("{" + std::to_string(i) + "," + std::to_string(j) +
                        "} is not an edge");
    }
    sum += std::abs(x[j] - x[i]);
  }
  return sum;
}

double laplacian_quadratic(const Graph& g, const GraphSignal& x) {
  check_signal(g, x);
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = x[e.head] - x[e.tail];
    sum += d * d;
  }
  return sum;
}

std::vector<NodeId> cluster_boundary(const Graph& g, const Partition& p, int k) {
  check_partition(g, p, k);
  std::vector<NodeId> out;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    if (p.cluster_of(i) != k) continue;
    for (NodeId j : g.neighbors(i)) {
      if (p.cluster_of(j) != k) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::size_t boundary_edge_count(const Graph& g, const Partition& p, int k) {
  check_partition(g, p, k);
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((p.cluster_of(e.head) == k) != (p.cluster_of(e.tail) == k)) ++count;
  }
  return count;
}

namespace {

// Local ids for the members of cluster k, -1 for everything else.
std::vector<NodeId> local_ids(const Partition& p, int k,
                              std::vector<NodeId>& original_ids) {
  std::vector<NodeId> local(p.num_nodes(), -1);
  original_ids = p.members(k);
  for (std::size_t v = 0; v < original_ids.size(); ++v) {
    local[original_ids[v]] = static_cast<NodeId>(v);
  }
  return local;
}

std::vector<std::pair<NodeId, NodeId>> intra_edges(const Graph& g,
                                                   const std::vector<NodeId>& local) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const Edge& e : g.edges()) {
    if (local[e.head] >= 0 && local[e.tail] >= 0) {
      out.emplace_back(local[e.head], local[e.tail]);
    }
  }
  return out;
}

}  // namespace

Subgraph cluster_subgraph(const Graph& g, const Partition& p, int k) {
  check_partition(g, p, k);
  Subgraph sub;
  auto local = local_ids(p, k, sub.original_ids);
  auto edges = intra_edges(g, local);
  sub.graph = Graph::build(static_cast<NodeId>(sub.original_ids.size()), edges);
  return sub;
}

AugmentedSubgraph augmented_subgraph(const Graph& g, const Partition& p, int k) {
  check_partition(g, p, k);
  AugmentedSubgraph aug;
  auto local = local_ids(p, k, aug.original_ids);
  auto edges = intra_edges(g, local);
  aug.terminal = static_cast<NodeId>(aug.original_ids.size());
  for (NodeId b : cluster_boundary(g, p, k)) edges.emplace_back(aug.terminal, local[b]);
  aug.graph = Graph::build(aug.terminal + 1, edges);
  return aug;
}

}  // namespace tvmin
