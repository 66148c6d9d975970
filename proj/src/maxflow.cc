#include "tvmin/maxflow.h"

#include <algorithm>
#include <queue>
#include <string>

#include "tvmin/errors.h"

namespace tvmin {

MaxFlow::MaxFlow(int num_nodes) : head_(num_nodes, -1) {}

int MaxFlow::add_arc(int from, int to, Capacity capacity) {
  if (from < 0 || from >= num_nodes() || to < 0 || to >= num_nodes()) {
    throw InvalidNodeId("arc endpoint outside the flow network");
  }
  if (capacity < 0) throw InvalidParameter("negative arc capacity");
  const int id = static_cast<int>(arcs_.size() / 2);
  arcs_.push_back({to, head_[from], capacity, 0});
  head_[from] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({from, head_[to], 0, 0});
  head_[to] = static_cast<int>(arcs_.size()) - 1;
  return id;
}

bool MaxFlow::build_levels() {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[source_] = 0;
  q.push(source_);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const int w = arcs_[a].to;
      if (level_[w] < 0 && residual(a) > 0) {
        level_[w] = level_[v] + 1;
        q.push(w);
      }
    }
  }
  return level_[sink_] >= 0;
}

Capacity MaxFlow::push(int v, Capacity limit) {
  if (v == sink_) return limit;
  for (int& a = cursor_[v]; a != -1; a = arcs_[a].next) {
    const int w = arcs_[a].to;
    if (level_[w] != level_[v] + 1 || residual(a) <= 0) continue;
    const Capacity pushed = push(w, std::min(limit, residual(a)));
    if (pushed > 0) {
      arcs_[a].flow += pushed;
      arcs_[a ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

Capacity MaxFlow::solve(int source, int sink) {
  if (source == sink) throw InvalidParameter("source and sink coincide");
  source_ = source;
  sink_ = sink;
  Capacity total = 0;
  while (build_levels()) {
    cursor_ = head_;
    while (Capacity f = push(source_, kUnbounded)) total += f;
  }
  return total;
}

std::vector<bool> MaxFlow::source_side() const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source_};
  seen[source_] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const int w = arcs_[a].to;
      if (!seen[w] && residual(a) > 0) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<bool> MaxFlow::sink_side() const {
  // v reaches the sink iff some residual arc v->w with w reaching the sink;
  // walk backwards over arcs whose reverse (the arc into v's neighbor) has
  // residual capacity.
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{sink_};
  seen[sink_] = true;
  while (!stack.empty()) {
    const int w = stack.back();
    stack.pop_back();
    for (int a = head_[w]; a != -1; a = arcs_[a].next) {
      const int v = arcs_[a].to;
      if (!seen[v] && residual(a ^ 1) > 0) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

int FlowNetwork::add_arc(int from, int to, Capacity lower, Capacity upper) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw InvalidNodeId("arc endpoint outside the flow network");
  }
  if (lower > upper) throw InvalidParameter("arc lower bound exceeds upper bound");
  if (lower < 0) {
    throw InvalidParameter("negative lower bound; reverse the arc instead");
  }
  arcs_.push_back({from, to, lower, upper});
  return static_cast<int>(arcs_.size()) - 1;
}

std::optional<std::vector<Capacity>> FlowNetwork::find_circulation() const {
  Capacity finite_total = 0;
  for (const BoundedArc& a : arcs_) {
    finite_total += a.lower;
    if (a.upper < kUnbounded) finite_total += a.upper;
  }
  const Capacity big = finite_total + 1;

  const int source = num_nodes_;
  const int sink = num_nodes_ + 1;
  MaxFlow mf(num_nodes_ + 2);
  std::vector<Capacity> excess(num_nodes_, 0);
  std::vector<int> ids;
  ids.reserve(arcs_.size());
  for (const BoundedArc& a : arcs_) {
    const Capacity upper = a.upper >= kUnbounded ? big : a.upper;
    ids.push_back(mf.add_arc(a.from, a.to, upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  Capacity required = 0;
  for (int v = 0; v < num_nodes_; ++v) {
    if (excess[v] > 0) {
      mf.add_arc(source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      mf.add_arc(v, sink, -excess[v]);
    }
  }
  if (mf.solve(source, sink) != required) return std::nullopt;

  std::vector<Capacity> flow(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) flow[i] = arcs_[i].lower + mf.flow(ids[i]);
  return flow;
}

bool FlowNetwork::is_circulation(std::span<const Capacity> flow) const {
  if (flow.size() != arcs_.size()) return false;
  std::vector<Capacity> net(num_nodes_, 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (flow[i] < arcs_[i].lower || flow[i] > arcs_[i].upper) return false;
    net[arcs_[i].to] += flow[i];
    net[arcs_[i].from] -= flow[i];
  }
  return std::all_of(net.begin(), net.end(), [](Capacity c) { return c == 0; });
}

}  // namespace tvmin
