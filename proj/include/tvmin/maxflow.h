#ifndef TVMIN_MAXFLOW_H_
#define TVMIN_MAXFLOW_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tvmin {

using Capacity = std::int64_t;

// Dinic's algorithm (BFS level graph + blocking flow by DFS). Exact on
// integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  int num_nodes() const { return static_cast<int>(head_.size()); }
  // Returns an arc id usable with flow().
  int add_arc(int from, int to, Capacity capacity);

  Capacity solve(int source, int sink);

  Capacity flow(int arc) const { return arcs_[2 * arc].flow; }
  // Nodes reachable from the source in the final residual graph: the source
  // side of the minimal min cut.
  std::vector<bool> source_side() const;
  // Nodes that can still reach the sink in the final residual graph.
  std::vector<bool> sink_side() const;

 private:
  struct Arc {
    int to;
    int next;
    Capacity cap;
    Capacity flow;
  };

  bool build_levels();
  Capacity push(int v, Capacity limit);
  Capacity residual(int a) const { return arcs_[a].cap - arcs_[a].flow; }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
  int source_ = -1;
  int sink_ = -1;
};

// Directed arc carrying a flow f with lower <= f <= upper.
struct BoundedArc {
  int from;
  int to;
  Capacity lower;
  Capacity upper;
};

// Capacity used in place of "unbounded"; replaced internally by a value
// exceeding the sum of all finite bounds.
inline constexpr Capacity kUnbounded = INT64_MAX / 4;

// Network of bounded arcs in which a circulation (zero net flow at every
// node) is sought.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : num_nodes_(num_nodes) {}

  int num_nodes() const { return num_nodes_; }
  int add_arc(int from, int to, Capacity lower, Capacity upper);
  std::span<const BoundedArc> arcs() const { return arcs_; }

  // A feasible circulation (one flow value per arc), or nullopt. Lower bounds
  // are shifted out into node excesses that an auxiliary source/sink pair
  // must be able to route.
  std::optional<std::vector<Capacity>> find_circulation() const;

  // Checks bounds and conservation at every node.
  bool is_circulation(std::span<const Capacity> flow) const;

 private:
  int num_nodes_;
  std::vector<BoundedArc> arcs_;
};

}  // namespace tvmin

#endif  // TVMIN_MAXFLOW_H_
