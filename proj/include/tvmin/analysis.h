#ifndef TVMIN_ANALYSIS_H_
#define TVMIN_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvmin/graph.h"
#include "tvmin/maxflow.h"
#include "tvmin/sbm.h"
#include "tvmin/solver.h"

namespace tvmin {

// ---------------------------------------------------------------------------
// Exact TV minimization for 0/1 seed values.
// ---------------------------------------------------------------------------

struct MinCutResult {
  // Minimum TV over all signals matching the seeds.
  Capacity optimum = 0;
  // Indicator of the source side of the minimal min cut; an exact optimizer.
  GraphSignal optimizer;
  // True when the min cut (and hence the binary optimizer) is unique.
  bool unique = false;
};

// Unit-capacity arc pairs on every edge, unbounded arcs from a super source
// to the 1-seeds and from the 0-seeds to a super sink. When only one seed
// value is present the optimum is 0, attained by the constant signal.
// Throws InvalidSeed for values other than 0 and 1.
MinCutResult mincut_tv_oracle(const Graph& g, std::span<const SeedValue> seeds);

// ---------------------------------------------------------------------------
// Recovery conditions on a single cluster.
// ---------------------------------------------------------------------------

struct SpectralCutCheck {
  double lambda2 = 0.0;
  double lhs = 0.0;  // (1 - 1/N) lambda2
  double rhs = 0.0;  // 2 * boundary edges
  bool holds = false;
};

// Evaluates (1 - 1/n_total) lambda2(L_k) >= 2 |dC_k| for the cluster
// subgraph g_k. Pass n_total = |C_k| for the cluster-size variant.
SpectralCutCheck spectral_cut_bound_check(const Graph& cluster_graph,
                                          std::size_t boundary_edges, NodeId n_total);

struct CutConditionCheck {
  // cut(S) >= 2 |S intersect dC| for every nonempty proper subset S of C.
  bool subset_cut = false;
  // cut(S) >= 2 |dC| for every nonempty S inside C minus the labeled node.
  bool uniform_cut = false;
};

inline constexpr NodeId kMaxEnumeratedCluster = 22;
inline constexpr std::size_t kMaxEnumeratedBoundary = 16;

// Exhaustive subset enumeration; |dC| counts boundary nodes. Throws
// EnumerationTooLarge above kMaxEnumeratedCluster nodes.
CutConditionCheck prop2_bruteforce_check(const Graph& g, const Partition& p, int k,
                                         NodeId labeled_node);

// The flow network on the augmented subgraph for one boundary sign pattern:
// unit arc pairs on intra-cluster edges, t->b fixed at +2 or b->t fixed at
// 2 (i.e. -2), and an unbounded arc pair between the labeled node and t.
// sign_bits bit j selects +2 for the j-th boundary node.
FlowNetwork wellconnected_network(const AugmentedSubgraph& aug, NodeId labeled_local,
                                  std::uint64_t sign_bits);

// True iff a circulation exists for every one of the 2^|dC| boundary sign
// patterns. Throws EnumerationTooLarge above kMaxEnumeratedBoundary boundary
// nodes and InvalidSeed if labeled_node is outside cluster k.
bool wellconnected_check(const Graph& g, const Partition& p, int k, NodeId labeled_node);

// ---------------------------------------------------------------------------
// Probability bounds.
// ---------------------------------------------------------------------------

struct ProbabilityBound {
  double raw = 0.0;
  double clipped = 0.0;
};

// exp(-p_out n_k (N - n_k) alpha)
double boundary_concentration_bound(NodeId n_k, NodeId n_total, double p_out, double alpha);

// (n_k - 1) 0.9^(p_in n_k / 2)
ProbabilityBound spectral_concentration_bound(NodeId n_k, double p_in);

struct Theorem1Cluster {
  double lhs = 0.0;  // S p_in / p_out, +inf when p_out = 0
  double rhs = 0.0;  // beta n_k (N - n_k)
  bool holds = false;
  // Largest beta for which the condition would hold.
  double beta_max = 0.0;
  double boundary_term = 0.0;
  ProbabilityBound spectral_term;
};

struct Theorem1Report {
  std::vector<Theorem1Cluster> clusters;
  ProbabilityBound failure_bound;
  double alpha = 0.0;
  double beta = 0.0;
};

Theorem1Report theorem1_report(const SbmParams& params, int s, double alpha, double beta);

// ---------------------------------------------------------------------------
// Whole-instance report.
// ---------------------------------------------------------------------------

enum class CheckState { kFalse, kTrue, kNotChecked };
const char* to_string(CheckState s);

struct ClusterAnalysis {
  int cluster = 0;
  NodeId size = 0;
  std::size_t boundary_node_count = 0;
  std::size_t boundary_edge_count = 0;
  double lambda2 = 0.0;
  bool connected = false;
  SpectralCutCheck eq19;
  // Cut conditions and well-connectedness hold for at least one seed of the
  // cluster; the seeds that pass individually are listed.
  CheckState prop2_holds = CheckState::kNotChecked;
  CheckState wellconnected_holds = CheckState::kNotChecked;
  std::vector<NodeId> prop2_seeds;
  std::vector<NodeId> wellconnected_seeds;
  std::optional<Theorem1Cluster> theorem1;
};

struct AnalysisReport {
  std::vector<ClusterAnalysis> clusters;
  std::optional<Theorem1Report> theorem1;
  double alpha = 0.1;
  double beta = 1e-3;
};

struct AnalysisOptions {
  double alpha = 0.1;
  double beta = 1e-3;
  // Use |C_k| instead of N in the spectral cut bound.
  bool eq19_cluster_size = false;
};

AnalysisReport analyze(const SbmInstance& instance, const AnalysisOptions& options = {});

// One row per cluster plus a final row with cluster = "all".
void write_report_csv(std::ostream& out, const AnalysisReport& report);

}  // namespace tvmin

#endif  // TVMIN_ANALYSIS_H_
