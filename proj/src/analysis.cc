#include "tvmin/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>

#include "tvmin/errors.h"
#include "tvmin/io.h"
#include "tvmin/spectral.h"

namespace tvmin {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie in [0,1]");
  }
}

NodeId local_index(const std::vector<NodeId>& original_ids, NodeId node) {
  auto it = std::lower_bound(original_ids.begin(), original_ids.end(), node);
  if (it == original_ids.end() || *it != node) return -1;
  return static_cast<NodeId>(it - original_ids.begin());
}

}  // namespace

MinCutResult mincut_tv_oracle(const Graph& g, std::span<const SeedValue> seeds) {
  const NodeId n = g.num_nodes();
  std::vector<int> label(n, -1);
  bool any_one = false;
  bool any_zero = false;
  for (const SeedValue& s : seeds) {
    if (s.node < 0 || s.node >= n) throw InvalidNodeId("seed node out of range");
    if (s.value != 0.0 && s.value != 1.0) {
      throw InvalidSeed("min-cut oracle needs seed values in {0,1}");
    }
    if (label[s.node] >= 0) throw InvalidSeed("seed node listed twice");
    label[s.node] = s.value == 1.0 ? 1 : 0;
    any_one |= label[s.node] == 1;
    any_zero |= label[s.node] == 0;
  }

  const int source = n;
  const int sink = n + 1;
  MaxFlow mf(n + 2);
  const Capacity big = 2 * g.num_edges() + 1;
  for (const Edge& e : g.edges()) {
    mf.add_arc(e.head, e.tail, 1);
    mf.add_arc(e.tail, e.head, 1);
  }
  // With a single seed value the source (or sink) is joined to every seed so
  // that reachability still identifies the components pinned by a seed.
  const int constant = any_one ? 1 : 0;
  for (NodeId i = 0; i < n; ++i) {
    if (label[i] < 0) continue;
    const bool to_source = (any_one && any_zero) ? label[i] == 1 : constant == 1;
    if (to_source) {
      mf.add_arc(source, i, big);
    } else {
      mf.add_arc(i, sink, big);
    }
  }

  MinCutResult result;
  result.optimum = mf.solve(source, sink);
  const auto src = mf.source_side();
  const auto snk = mf.sink_side();
  result.optimizer = GraphSignal(n);
  result.unique = true;
  for (NodeId i = 0; i < n; ++i) {
    result.optimizer[i] = src[i] ? 1.0 : 0.0;
    result.unique &= src[i] || snk[i];
  }
  if (!(any_one && any_zero)) {
    // Components without a seed are free; the constant signal is returned.
    result.optimizer = GraphSignal(n, static_cast<double>(constant));
  }
  return result;
}

SpectralCutCheck spectral_cut_bound_check(const Graph& cluster_graph,
                                          std::size_t boundary_edges, NodeId n_total) {
  if (n_total < 1) throw InvalidParameter("node count must be positive");
  SpectralCutCheck c;
  c.lambda2 = lambda2(cluster_graph);
  c.lhs = (1.0 - 1.0 / n_total) * c.lambda2;
  c.rhs = 2.0 * static_cast<double>(boundary_edges);
  c.holds = c.lhs >= c.rhs;
  return c;
}

CutConditionCheck prop2_bruteforce_check(const Graph& g, const Partition& p, int k,
                                         NodeId labeled_node) {
  const Subgraph sub = cluster_subgraph(g, p, k);
  const auto m = static_cast<int>(sub.original_ids.size());
  if (m > kMaxEnumeratedCluster) {
    throw EnumerationTooLarge("cluster " + std::to_string(k) + " has " +
                              std::to_string(m) + " nodes (limit " +
                              std::to_string(kMaxEnumeratedCluster) + ")");
  }
  const NodeId labeled = local_index(sub.original_ids, labeled_node);
  if (labeled < 0) throw InvalidSeed("labeled node is not in cluster " + std::to_string(k));

  std::vector<std::uint32_t> adj(m, 0);
  for (const Edge& e : sub.graph.edges()) {
    adj[e.head] |= 1u << e.tail;
    adj[e.tail] |= 1u << e.head;
  }
  std::uint32_t boundary = 0;
  for (NodeId b : cluster_boundary(g, p, k)) boundary |= 1u << local_index(sub.original_ids, b);
  const int boundary_nodes = std::popcount(boundary);

  CutConditionCheck out{true, true};
  const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1u;
  const std::uint32_t labeled_bit = 1u << labeled;
  for (std::uint32_t s = 1; s < full; ++s) {
    int cut = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      cut += std::popcount(adj[std::countr_zero(rest)] & ~s);
    }
    if (cut < 2 * std::popcount(s & boundary)) out.subset_cut = false;
    if ((s & labeled_bit) == 0 && cut < 2 * boundary_nodes) out.uniform_cut = false;
    if (!out.subset_cut && !out.uniform_cut) break;
  }
  return out;
}

FlowNetwork wellconnected_network(const AugmentedSubgraph& aug, NodeId labeled_local,
                                  std::uint64_t sign_bits) {
  const NodeId t = aug.terminal;
  FlowNetwork net(aug.graph.num_nodes());
  std::size_t j = 0;
  for (const Edge& e : aug.graph.edges()) {
    if (e.tail == t) {
      if ((sign_bits >> j) & 1u) {
        net.add_arc(t, e.head, 2, 2);
      } else {
        net.add_arc(e.head, t, 2, 2);
      }
      ++j;
    } else {
      net.add_arc(e.head, e.tail, 0, 1);
      net.add_arc(e.tail, e.head, 0, 1);
    }
  }
  net.add_arc(labeled_local, t, 0, kUnbounded);
  net.add_arc(t, labeled_local, 0, kUnbounded);
  return net;
}

bool wellconnected_check(const Graph& g, const Partition& p, int k, NodeId labeled_node) {
  const AugmentedSubgraph aug = augmented_subgraph(g, p, k);
  const NodeId labeled = local_index(aug.original_ids, labeled_node);
  if (labeled < 0) throw InvalidSeed("labeled node is not in cluster " + std::to_string(k));
  const auto boundary = static_cast<std::size_t>(aug.graph.degree(aug.terminal));
  if (boundary > kMaxEnumeratedBoundary) {
    throw EnumerationTooLarge("cluster " + std::to_string(k) + " has " +
                              std::to_string(boundary) + " boundary nodes (limit " +
                              std::to_string(kMaxEnumeratedBoundary) + ")");
  }
  const std::uint64_t patterns = std::uint64_t{1} << boundary;
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    if (!wellconnected_network(aug, labeled, bits).find_circulation()) return false;
  }
  return true;
}

double boundary_concentration_bound(NodeId n_k, NodeId n_total, double p_out,
                                    double alpha) {
  check_probability(p_out, "p_out");
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
  if (n_k < 1 || n_k > n_total) throw InvalidParameter("need 1 <= n_k <= N");
  const double pairs = static_cast<double>(n_k) * static_cast<double>(n_total - n_k);
  return std::exp(-p_out * pairs * alpha);
}

ProbabilityBound spectral_concentration_bound(NodeId n_k, double p_in) {
  check_probability(p_in, "p_in");
  if (n_k < 1) throw InvalidParameter("n_k must be >= 1");
  ProbabilityBound b;
  b.raw = (n_k - 1) * std::pow(0.9, p_in * n_k / 2.0);
  b.clipped = std::clamp(b.raw, 0.0, 1.0);
  return b;
}

Theorem1Report theorem1_report(const SbmParams& params, int s, double alpha, double beta) {
  params.validate();
  if (s < 1) throw InvalidParameter("seeds per cluster must be >= 1");
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw InvalidParameter("alpha and beta must be positive");
  }
  const NodeId n = params.total_nodes();
  Theorem1Report report;
  report.alpha = alpha;
  report.beta = beta;
  const double inf = std::numeric_limits<double>::infinity();
  for (NodeId n_k : params.cluster_sizes) {
    Theorem1Cluster c;
    const double pairs = static_cast<double>(n_k) * static_cast<double>(n - n_k);
    c.lhs = params.p_out > 0.0 ? s * params.p_in / params.p_out : inf;
    c.rhs = beta * pairs;
    c.holds = c.lhs >= c.rhs;
    c.beta_max = pairs > 0.0 ? c.lhs / pairs : inf;
    // Without cross pairs the boundary is empty for sure and cannot fail.
    c.boundary_term =
        pairs > 0.0 ? boundary_concentration_bound(n_k, n, params.p_out, alpha) : 0.0;
    c.spectral_term = spectral_concentration_bound(n_k, params.p_in);
    report.failure_bound.raw += c.boundary_term + c.spectral_term.raw;
    report.clusters.push_back(c);
  }
  report.failure_bound.clipped = std::clamp(report.failure_bound.raw, 0.0, 1.0);
  return report;
}

const char* to_string(CheckState s) {
  switch (s) {
    case CheckState::kTrue:
      return "true";
    case CheckState::kFalse:
      return "false";
    case CheckState::kNotChecked:
      return "not_checked";
  }
  return "not_checked";
}

AnalysisReport analyze(const SbmInstance& inst, const AnalysisOptions& options) {
  const Graph& g = inst.graph;
  const Partition& p = inst.truth;
  AnalysisReport report;
  report.alpha = options.alpha;
  report.beta = options.beta;
  if (inst.params) {
    report.theorem1 = theorem1_report(*inst.params, std::max(1, inst.seeds.per_cluster_count),
                                      options.alpha, options.beta);
  }

  report.clusters.resize(p.num_clusters());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 1; k <= p.num_clusters(); ++k) {
    ClusterAnalysis& c = report.clusters[k - 1];
    c.cluster = k;
    c.size = p.cluster_size(k);
    c.boundary_node_count = cluster_boundary(g, p, k).size();
    c.boundary_edge_count = boundary_edge_count(g, p, k);
    const Subgraph sub = cluster_subgraph(g, p, k);
    c.connected = count_components(sub.graph) <= 1;
    c.eq19 = spectral_cut_bound_check(sub.graph, c.boundary_edge_count,
                                      options.eq19_cluster_size ? c.size : g.num_nodes());
    c.lambda2 = c.eq19.lambda2;

    const std::vector<NodeId> seeds = k - 1 < static_cast<int>(inst.seeds.per_cluster.size())
                                          ? inst.seeds.per_cluster[k - 1]
                                          : std::vector<NodeId>{};
    if (!seeds.empty() && c.size <= kMaxEnumeratedCluster) {
      c.prop2_holds = CheckState::kFalse;
      for (NodeId seed : seeds) {
        if (prop2_bruteforce_check(g, p, k, seed).subset_cut) {
          c.prop2_holds = CheckState::kTrue;
          c.prop2_seeds.push_back(seed);
        }
      }
    }
    if (!seeds.empty() && c.boundary_node_count <= kMaxEnumeratedBoundary) {
      c.wellconnected_holds = CheckState::kFalse;
      for (NodeId seed : seeds) {
        if (wellconnected_check(g, p, k, seed)) {
          c.wellconnected_holds = CheckState::kTrue;
          c.wellconnected_seeds.push_back(seed);
        }
      }
    }
    if (report.theorem1) c.theorem1 = report.theorem1->clusters[k - 1];
  }
  return report;
}

namespace {

std::string join(const std::vector<NodeId>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

CheckState combine(const std::vector<ClusterAnalysis>& clusters,
                   CheckState ClusterAnalysis::*field) {
  bool any_unchecked = false;
  for (const auto& c : clusters) {
    if (c.*field == CheckState::kFalse) return CheckState::kFalse;
    any_unchecked |= c.*field == CheckState::kNotChecked;
  }
  return any_unchecked ? CheckState::kNotChecked : CheckState::kTrue;
}

}  // namespace

void write_report_csv(std::ostream& out, const AnalysisReport& report) {
  out << "cluster,size,boundary_node_count,boundary_edge_count,lambda2,connected,"
         "eq19_lhs,eq19_rhs,eq19_holds,prop2_holds,wellconnected_holds,prop2_seeds,"
         "wellconnected_seeds,theorem1_condition_lhs,theorem1_condition_rhs,"
         "theorem1_condition_holds,beta_max,boundary_bound,spectral_bound_raw,"
         "failure_bound_raw,failure_bound,alpha,beta\n";
  const std::string alpha = format_double(report.alpha);
  const std::string beta = format_double(report.beta);

  for (const ClusterAnalysis& c : report.clusters) {
    out << c.cluster << ',' << c.size << ',' << c.boundary_node_count << ','
        << c.boundary_edge_count << ',' << format_double(c.lambda2) << ','
        << flag(c.connected) << ',' << format_double(c.eq19.lhs) << ','
        << format_double(c.eq19.rhs) << ',' << flag(c.eq19.holds) << ','
        << to_string(c.prop2_holds) << ',' << to_string(c.wellconnected_holds) << ','
        << join(c.prop2_seeds) << ',' << join(c.wellconnected_seeds) << ',';
    if (c.theorem1) {
      const Theorem1Cluster& t = *c.theorem1;
      const double raw = t.boundary_term + t.spectral_term.raw;
      out << format_double(t.lhs) << ',' << format_double(t.rhs) << ',' << flag(t.holds)
          << ',' << format_double(t.beta_max) << ',' << format_double(t.boundary_term)
          << ',' << format_double(t.spectral_term.raw) << ',' << format_double(raw) << ','
          << format_double(std::clamp(raw, 0.0, 1.0));
    } else {
      out << ",,,,,,,";
    }
    out << ',' << alpha << ',' << beta << '\n';
  }

  std::size_t nodes = 0, boundary_nodes = 0, boundary_edges = 0;
  bool connected = true, eq19 = true;
  for (const ClusterAnalysis& c : report.clusters) {
    nodes += static_cast<std::size_t>(c.size);
    boundary_nodes += c.boundary_node_count;
    boundary_edges += c.boundary_edge_count;
    connected &= c.connected;
    eq19 &= c.eq19.holds;
  }
  // Every cross edge is counted once from each side.
  out << "all," << nodes << ',' << boundary_nodes << ',' << boundary_edges / 2 << ",,"
      << flag(connected) << ",,," << flag(eq19) << ','
      << to_string(combine(report.clusters, &ClusterAnalysis::prop2_holds)) << ','
      << to_string(combine(report.clusters, &ClusterAnalysis::wellconnected_holds))
      << ",,,";
  if (report.theorem1) {
    bool holds = true;
    for (const auto& t : report.theorem1->clusters) holds &= t.holds;
    out << ",," << flag(holds) << ",,,," << format_double(report.theorem1->failure_bound.raw)
        << ',' << format_double(report.theorem1->failure_bound.clipped);
  } else {
    out << ",,,,,,,";
  }
  out << ',' << alpha << ',' << beta << '\n';
}

}  // namespace tvmin
