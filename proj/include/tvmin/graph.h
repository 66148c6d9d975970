#ifndef TVMIN_GRAPH_H_
#define TVMIN_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tvmin {

using NodeId = std::int32_t;
using EdgeId = std::int64_t;

// Dense matrices are only built up to this many nodes unless the caller
// passes a larger cap explicitly.
inline constexpr NodeId kDefaultDenseCap = 2000;

// Oriented edge: head < tail. The incidence row of the edge has +1 at head
// and -1 at tail.
struct Edge {
  NodeId head;
  NodeId tail;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable undirected graph with node-id ordered edge orientation.
//
// Adjacency is stored in CSR form. Neighbor lists are sorted, so for node i
// the neighbors below i (N^-(i)) form a prefix of neighbors(i) and the
// neighbors above i (N^+(i)) form the suffix starting at upper_begin(i).
class Graph {
 public:
  Graph() = default;

  // Canonicalizes each unordered pair to (min, max). Throws InvalidNodeId,
  // SelfLoop or DuplicateEdge.
  static Graph build(NodeId num_nodes,
                     std::span<const std::pair<NodeId, NodeId>> edge_list);

  NodeId num_nodes() const { return num_nodes_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
  }
  // Edge ids parallel to neighbors(i).
  std::span<const EdgeId> incident_edges(NodeId i) const {
    return {incident_.data() + offsets_[i], incident_.data() + offsets_[i + 1]};
  }
  // Position within neighbors(i) of the first neighbor j > i.
  std::size_t upper_begin(NodeId i) const { return upper_begin_[i]; }

  int degree(NodeId i) const {
    return static_cast<int>(offsets_[i + 1] - offsets_[i]);
  }
  std::vector<int> degrees() const;

  std::optional<EdgeId> find_edge(NodeId i, NodeId j) const;
  bool has_edge(NodeId i, NodeId j) const { return find_edge(i, j).has_value(); }

 private:
  NodeId num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<EdgeId> incident_;
  std::vector<std::size_t> upper_begin_;
};

// Real-valued signal indexed by node.
class GraphSignal {
 public:
  GraphSignal() = default;
  explicit GraphSignal(std::size_t size, double fill = 0.0) : values_(size, fill) {}
  explicit GraphSignal(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& data() { return values_; }
  const std::vector<double>& data() const { return values_; }

  friend bool operator==(const GraphSignal&, const GraphSignal&) = default;

 private:
  std::vector<double> values_;
};

// Assignment of every node to one of K clusters, indexed 1..K.
class Partition {
 public:
  Partition() = default;

  // Throws InvalidPartition if some index is outside 1..K or a cluster in
  // 1..max is empty.
  static Partition from_assignment(std::vector<int> assignment);
  // Nodes 0..n1-1 form cluster 1, the next n2 nodes cluster 2, and so on.
  static Partition contiguous(std::span<const NodeId> cluster_sizes);

  NodeId num_nodes() const { return static_cast<NodeId>(assignment_.size()); }
  int num_clusters() const { return static_cast<int>(sizes_.size()); }
  int cluster_of(NodeId i) const { return assignment_[i]; }
  NodeId cluster_size(int k) const { return sizes_[k - 1]; }
  std::span<const int> assignment() const { return assignment_; }
  std::span<const NodeId> cluster_sizes() const { return sizes_; }
  std::vector<NodeId> members(int k) const;

  // Throws InvalidCluster unless 1 <= k <= K.
  void check_cluster(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> assignment_;
  std::vector<NodeId> sizes_;
};

Eigen::MatrixXd incidence_matrix(const Graph& g, NodeId dense_cap = kDefaultDenseCap);
Eigen::MatrixXd laplacian(const Graph& g, NodeId dense_cap = kDefaultDenseCap);

// Sum over edges of |x_j - x_i|.
double tv(const Graph& g, const GraphSignal& x);
// Same sum restricted to the listed edges, given as unordered node pairs.
// Throws UnknownEdge for a pair that is not an edge of g.
double tv_on_subset(const Graph& g, const GraphSignal& x,
                    std::span<const std::pair<NodeId, NodeId>> subset);
// x^T L x computed edge by edge.
double laplacian_quadratic(const Graph& g, const GraphSignal& x);

// Nodes of cluster k with at least one neighbor outside it, ascending.
std::vector<NodeId> cluster_boundary(const Graph& g, const Partition& p, int k);
// Number of edges with exactly one endpoint in cluster k.
std::size_t boundary_edge_count(const Graph& g, const Partition& p, int k);

struct Subgraph {
  Graph graph;
  // original_ids[v] is the id in the parent graph of subgraph node v.
  std::vector<NodeId> original_ids;
};

// Subgraph induced by cluster k, nodes renumbered in ascending original order.
Subgraph cluster_subgraph(const Graph& g, const Partition& p, int k);

struct AugmentedSubgraph {
  Graph graph;
  // Id of the auxiliary node t; always the last node.
  NodeId terminal = 0;
  // Original ids of nodes 0..terminal-1.
  std::vector<NodeId> original_ids;
};

// Cluster-induced subgraph plus an auxiliary node joined to every boundary
// node of the cluster.
AugmentedSubgraph augmented_subgraph(const Graph& g, const Partition& p, int k);

}  // namespace tvmin

#endif  // TVMIN_GRAPH_H_
