// Acceptance checks. Run as `acceptance <n>` for a single criterion or with
// no argument for all of them; prints one PASS/FAIL line per criterion and
// exits nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "test_support.h"
#include "tvmin/analysis.h"
#include "tvmin/clusterer.h"
#include "tvmin/spectral.h"
#include "tvmin/sweep.h"

namespace tvmin {
namespace {

using testing::Gen;
using Clock = std::chrono::steady_clock;

// Smallest grid ratio S p_in / p_out from which the reference sweep (master
// seed 1, default protocol) keeps mean accuracy at or above 0.95.
constexpr double kReferenceRatio = 75;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  const auto t0 = Clock::now();
  Gen gen(1001);
  int instances = 0, mismatches = 0;
  while (instances < 250) {
    const NodeId n = gen.uniform_int(2, 14);
    const Graph g = testing::random_connected_graph(gen, n, gen.uniform(0.0, 0.5));
    std::vector<SeedValue> seeds{{0, 1.0}, {n - 1, 0.0}};
    for (NodeId i = 1; i + 1 < n; ++i)
      if (gen.uniform() < 0.2) seeds.push_back({i, gen.uniform() < 0.5 ? 1.0 : 0.0});
    const Capacity opt = mincut_tv_oracle(g, seeds).optimum;
    const double brute = testing::brute_force_binary_tv_min(n, testing::edge_pairs(g), seeds);
    if (static_cast<double>(opt) != brute) ++mismatches;
    ++instances;
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 60,
          std::to_string(instances) + " instances, " + std::to_string(mismatches) +
              " mismatches, " + fmt("%.2f s", secs)};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  Gen gen(1002);
  int instances = 0, within = 0, unique = 0, rounded_exact = 0;
  double worst_gap = 0.0;
  SolverConfig cfg;
  cfg.max_iters = 5000;
  cfg.tol = 0.0;
  while (instances < 100) {
    const NodeId n1 = gen.uniform_int(2, 15), n2 = gen.uniform_int(2, 15);
    const double p_in = gen.uniform(0.2, 0.9);
    const double p_out = gen.uniform(0.02, p_in);
    const int s = gen.uniform_int(1, 2);
    const SbmInstance inst = make_instance(SbmParams{{n1, n2}, p_in, p_out}, s, gen.bits());
    const auto targets = indicator_targets(labeled_seeds(inst.seeds), 1);
    const MinCutResult oracle = mincut_tv_oracle(inst.graph, targets);
    const SolveResult res = solve(inst.graph, targets, cfg);
    const double opt = static_cast<double>(oracle.optimum);
    const double gap = tv(inst.graph, res.x_bar) - opt;
    worst_gap = std::max(worst_gap, std::abs(gap));
    within += std::abs(gap) <= 1e-3;
    if (oracle.unique) {
      ++unique;
      rounded_exact += tv(inst.graph, round_half(res.x_bar)) == opt;
    }
    ++instances;
  }
  const double secs = seconds_since(t0);
  const bool pass = within == instances && rounded_exact == unique && secs < 120;
  return {pass, std::to_string(within) + "/" + std::to_string(instances) +
                    " within 1e-3 of the optimum (worst gap " + fmt("%.4g", worst_gap) +
                    "), rounded TV exact on " + std::to_string(rounded_exact) + "/" +
                    std::to_string(unique) + " unique-cut instances, " + fmt("%.2f s", secs)};
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  const SbmInstance inst = testing::fig1_instance();
  const ClusteringResult r = cluster(inst.graph, labeled_seeds(inst.seeds), 2);
  const Accuracy acc = accuracy(r, inst.truth, inst.seeds);
  const GraphSignal indicator = round_half(r.scores[0]);
  const double tv_ind = tv(inst.graph, indicator);
  const std::vector<SeedValue> targets{{0, 1.0}, {7, 0.0}};
  const Capacity opt = mincut_tv_oracle(inst.graph, targets).optimum;
  const double secs = seconds_since(t0);
  const bool pass = acc.value == 1.0 && tv_ind == 1.0 && opt == 1 && secs < 1.0;
  return {pass, "accuracy " + fmt("%g", acc.value) + ", indicator TV " + fmt("%g", tv_ind) +
                    ", oracle optimum " + std::to_string(opt) + ", " + fmt("%.3f s", secs)};
}

// Pool-adjacent-violators fit; returns the largest absolute residual.
double isotonic_max_residual(const std::vector<std::pair<double, double>>& pts_in) {
  auto pts = pts_in;
  std::sort(pts.begin(), pts.end());
  struct Block {
    double sum;
    double weight;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (const auto& p : pts) {
    blocks.push_back({p.second, 1.0, 1});
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].sum / blocks[blocks.size() - 2].weight >
               blocks.back().sum / blocks.back().weight) {
      Block b = blocks.back();
      blocks.pop_back();
      blocks.back().sum += b.sum;
      blocks.back().weight += b.weight;
      blocks.back().count += b.count;
    }
  }
  double worst = 0.0;
  std::size_t i = 0;
  for (const Block& b : blocks) {
    const double fit = b.sum / b.weight;
    for (std::size_t j = 0; j < b.count; ++j, ++i) worst = std::max(worst, std::abs(pts[i].second - fit));
  }
  return worst;
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  SweepConfig cfg = accuracy_sweep_defaults();
  cfg.record_wall_time = false;
  const auto agg = aggregate(run_sweep(cfg));

  std::vector<std::pair<double, double>> pooled;
  std::map<int, std::map<long long, double>> by_s;  // ratio rounded to 1e-6
  double worst_per_s = 0.0;
  for (int s : cfg.s_values) {
    std::vector<std::pair<double, double>> curve;
    for (const auto& a : agg)
      if (a.s == s) curve.emplace_back(a.ratio, a.mean_accuracy);
    worst_per_s = std::max(worst_per_s, isotonic_max_residual(curve));
  }
  for (const auto& a : agg) {
    pooled.emplace_back(a.ratio, a.mean_accuracy);
    by_s[a.s][std::llround(a.ratio * 1e6)] = a.mean_accuracy;
  }
  const double iso = isotonic_max_residual(pooled);

  double worst_collapse = 0.0;
  int matched = 0;
  for (auto a = by_s.begin(); a != by_s.end(); ++a)
    for (auto b = std::next(a); b != by_s.end(); ++b)
      for (const auto& [ratio, acc] : a->second)
        if (auto it = b->second.find(ratio); it != b->second.end()) {
          ++matched;
          worst_collapse = std::max(worst_collapse, std::abs(acc - it->second));
        }

  // This run's R*: the smallest ratio above every point below 0.95.
  double last_low = -1.0;
  for (const auto& [ratio, acc] : pooled)
    if (acc < 0.95) last_low = std::max(last_low, ratio);
  double r_star = std::numeric_limits<double>::infinity();
  for (const auto& [ratio, acc] : pooled)
    if (ratio > last_low + 1e-9) r_star = std::min(r_star, ratio);
  double min_above = 1.0;
  for (const auto& [ratio, acc] : pooled)
    if (ratio >= kReferenceRatio - 1e-9) min_above = std::min(min_above, acc);

  const double secs = seconds_since(t0);
  const bool pass = worst_per_s < 0.05 && worst_collapse < 0.1 && min_above >= 0.95 && secs < 600;
  return {pass, "isotonic residual per S " + fmt("%.4f", worst_per_s) + " (pooled " +
                    fmt("%.4f", iso) + "), max collapse gap " +
                    fmt("%.4f", worst_collapse) + " over " + std::to_string(matched) +
                    " matched ratios, min accuracy " + fmt("%.4f", min_above) +
                    " for ratio >= " + fmt("%g", kReferenceRatio) + " (this run's R* " +
                    fmt("%g", r_star) + "), " + fmt("%.1f s", secs)};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  SweepConfig cfg;
  cfg.cluster_sizes = {50, 50};
  cfg.p_out = 0.1;
  cfg.p_in_grid = {0.1};
  cfg.s_values = {5};
  cfg.reps = 50;
  cfg.rng_seed = 5;
  cfg.record_wall_time = false;
  const auto agg = aggregate(run_sweep(cfg));
  const double mean = agg.at(0).mean_accuracy;
  const double secs = seconds_since(t0);
  return {mean >= 0.40 && mean <= 0.60 && secs < 120,
          "p_in = p_out = 0.1, mean accuracy " + fmt("%.4f", mean) + " over 50 reps, " +
              fmt("%.1f s", secs)};
}

Outcome criterion6() {
  Gen gen(1006);
  int exact = 0;
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing::random_graph(gen, gen.uniform_int(1, 20), gen.uniform());
    const Eigen::MatrixXd d = incidence_matrix(g);
    const Eigen::MatrixXd dtd = d.transpose() * d;
    exact += dtd == laplacian(g);
  }
  const double l50 = lambda2(testing::complete_graph(50));

  // Two triangles with no edge between them form one disconnected cluster.
  const std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {1, 2}, {0, 2}, {3, 4},
                                                  {4, 5}, {3, 5}, {2, 6}, {6, 7}};
  SbmInstance inst;
  inst.graph = Graph::build(8, e);
  inst.truth = Partition::from_assignment({1, 1, 1, 1, 1, 1, 2, 2});
  inst.seeds.per_cluster = {{0}, {7}};
  inst.seeds.per_cluster_count = 1;
  const ClusterAnalysis c = analyze(inst).clusters[0];
  const bool flagged = c.lambda2 == 0.0 && !c.connected;

  const bool pass = exact == 100 && std::abs(l50 - 50.0) <= 1e-8 && flagged;
  return {pass, std::to_string(exact) + "/100 exact D^T D = L, lambda2(K50) - 50 = " +
                    fmt("%.3g", l50 - 50.0) + ", disconnected cluster lambda2 " +
                    fmt("%g", c.lambda2) + (c.connected ? " (not flagged)" : " (flagged)")};
}

Outcome criterion7() {
  const Graph g = testing::fig1_graph();
  const Partition p = testing::fig1_partition();
  const CutConditionCheck c1 = prop2_bruteforce_check(g, p, 1, 0);
  const CutConditionCheck c2 = prop2_bruteforce_check(g, p, 2, 7);
  const bool w1 = wellconnected_check(g, p, 1, 0);
  const bool w2 = wellconnected_check(g, p, 2, 7);
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return {c1.subset_cut && c2.subset_cut && w1 && w2,
          "cut condition C1/C2 " + b(c1.subset_cut) + "/" + b(c2.subset_cut) +
              ", well-connected C1/C2 " + b(w1) + "/" + b(w2)};
}

Outcome criterion8() {
  const double b = boundary_concentration_bound(50, 100, 0.01, 0.1);
  const double s = spectral_concentration_bound(50, 1.0).raw;
  const double eb = std::abs(b - std::exp(-2.5));
  const double es = std::abs(s - 49 * std::pow(0.9, 25));
  return {eb <= 1e-12 && es <= 1e-12,
          "boundary bound error " + fmt("%.3g", eb) + ", spectral bound error " + fmt("%.3g", es)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion9() {
  const auto dir = std::filesystem::temp_directory_path() / "tvmin_acceptance_9";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto run = [&](const std::string& threads, const std::string& tag) {
    const std::vector<std::string> args{
        "--threads", threads, "sweep", "--sizes", "30,30", "--p-out", "0.05",
        "--p-in-grid", "0.05,0.15,0.3", "--num-seeds", "2,5", "--reps", "4",
        "--rng-seed", "2024", "--max-iters", "500", "--no-wall-time",
        "--out", (dir / (tag + ".csv")).string(),
        "--aggregate-out", (dir / (tag + "_agg.csv")).string()};
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  const int a = run("1", "t1");
  const int b = run("4", "t4");
  const bool rows_equal = slurp(dir / "t1.csv") == slurp(dir / "t4.csv");
  const bool agg_equal = slurp(dir / "t1_agg.csv") == slurp(dir / "t4_agg.csv");
  const auto bytes = std::filesystem::file_size(dir / "t1.csv");
  std::filesystem::remove_all(dir);
  return {a == 0 && b == 0 && rows_equal && agg_equal && bytes > 0,
          "threads 1 vs 4: exit " + std::to_string(a) + "/" + std::to_string(b) +
              ", rows " + (rows_equal ? "identical" : "differ") + " (" +
              std::to_string(bytes) + " bytes), aggregate " +
              (agg_equal ? "identical" : "differ")};
}

}  // namespace
}  // namespace tvmin

int main(int argc, char** argv) {
  using namespace tvmin;
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  std::vector<int> selected;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  } else {
    for (int i = 1; i <= 9; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int n : selected) {
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "unknown criterion %d\n", n);
      return 2;
    }
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
    all &= o.pass;
  }
  return all ? 0 : 1;
}
