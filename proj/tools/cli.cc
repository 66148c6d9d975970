#include "cli.h"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "tvmin/analysis.h"
#include "tvmin/clusterer.h"
#include "tvmin/errors.h"
#include "tvmin/io.h"
#include "tvmin/sbm.h"
#include "tvmin/sweep.h"

namespace tvmin::cli {

namespace {

constexpr const char* kThreadsEnv = "TVMIN_NUM_THREADS";

// Options shared by the subcommands that need an instance: either a saved
// instance prefix or SBM parameters to sample one in memory.
struct InstanceOptions {
  std::string instance;
  std::vector<NodeId> sizes;
  NodeId nodes = 0;
  int clusters = 2;
  double p_in = 0.5;
  double p_out = 0.025;
  int num_seeds = 1;
  std::uint64_t rng_seed = 1;
  bool permute = false;
};

struct SolverOptions {
  int max_iters = 2000;
  double tol = 1e-6;
  bool parallel_kernels = false;

  SolverConfig config() const {
    SolverConfig c;
    c.max_iters = max_iters;
    c.tol = tol;
    c.backend = parallel_kernels ? Backend::kParallel : Backend::kSerial;
    return c;
  }
};

void add_sbm_options(CLI::App* app, InstanceOptions& o) {
  app->add_option("--sizes", o.sizes, "Cluster sizes, comma separated")->delimiter(',');
  app->add_option("--nodes", o.nodes, "Total node count, split evenly when --sizes is absent");
  app->add_option("--clusters", o.clusters, "Cluster count used with --nodes")
      ->check(CLI::PositiveNumber);
  app->add_option("--p-in", o.p_in, "Edge probability inside a cluster");
  app->add_option("--p-out", o.p_out, "Edge probability across clusters");
  app->add_option("--rng-seed", o.rng_seed, "Seed of the instance");
}

void add_solver_options(CLI::App* app, SolverOptions& o) {
  app->add_option("--max-iters", o.max_iters, "Iteration cap per indicator solve")
      ->check(CLI::PositiveNumber);
  app->add_option("--tol", o.tol, "Stop when the running average moves less than this")
      ->check(CLI::NonNegativeNumber);
  app->add_flag("--parallel-kernels", o.parallel_kernels,
                "Use the OpenMP edge/node kernels inside each solve");
}

std::vector<NodeId> resolve_sizes(const InstanceOptions& o) {
  if (!o.sizes.empty()) {
    NodeId total = 0;
    for (NodeId n : o.sizes) total += n;
    if (o.nodes != 0 && o.nodes != total) {
      throw InvalidParameter("--nodes disagrees with the sum of --sizes");
    }
    return o.sizes;
  }
  if (o.nodes < o.clusters) throw InvalidParameter("give --sizes or --nodes >= --clusters");
  std::vector<NodeId> sizes(o.clusters, o.nodes / o.clusters);
  for (int k = 0; k < o.nodes % o.clusters; ++k) ++sizes[k];
  return sizes;
}

SbmInstance load_or_sample(const InstanceOptions& o) {
  if (!o.instance.empty()) return read_instance(o.instance);
  const SbmParams params{resolve_sizes(o), o.p_in, o.p_out};
  SbmInstance inst = make_instance(params, o.num_seeds, o.rng_seed);
  if (o.permute) {
    SbmGraph g = generate(params, o.rng_seed, true);
    inst.seeds = select_seeds(g.truth, o.num_seeds, o.rng_seed);
    inst.graph = std::move(g.graph);
    inst.truth = std::move(g.truth);
  }
  return inst;
}

// Values from a key=value file fill in options the command line left unset.
// Keys are long option names without the leading dashes.
void apply_config_file(CLI::App* app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  for (const auto& [key, value] : read_key_values(in)) {
    CLI::Option* opt = app->get_option_no_throw("--" + key);
    if (opt == nullptr) throw MalformedInput(path + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    if (opt->get_type_size() == 0) {
      // Flags take true/false.
      if (value == "true" || value == "1") opt->add_result("true");
    } else {
      opt->add_result(value);
    }
    opt->run_callback();
  }
}

class OutputFile {
 public:
  OutputFile(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

void write_result_csv(std::ostream& out, const SbmInstance& inst,
                      const ClusteringResult& result) {
  out << "node,true_cluster,pred_cluster";
  for (int k = 1; k <= result.num_clusters(); ++k) out << ",score_" << k;
  out << ",is_seed\n";
  const auto is_seed = inst.seeds.mask(inst.graph.num_nodes());
  for (NodeId i = 0; i < inst.graph.num_nodes(); ++i) {
    out << i << ',' << inst.truth.cluster_of(i) << ',' << result.assignment[i];
    for (const GraphSignal& s : result.scores) out << ',' << format_double(s[i]);
    out << ',' << (is_seed[i] ? 1 : 0) << '\n';
  }
}

void write_diagnostics(std::ostream& out, const ClusteringResult& result) {
  for (std::size_t k = 0; k < result.diagnostics.size(); ++k) {
    const SolveDiagnostics& d = result.diagnostics[k];
    out << "cluster=" << k + 1 << " iters=" << d.iters
        << " tv_final=" << format_double(d.tv_final)
        << " converged=" << (d.converged ? "true" : "false")
        << " residual_sup=" << format_double(d.residual_sup) << '\n';
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-supervised SBM clustering by graph total-variation minimization"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides " + std::string(kThreadsEnv) + ")")
      ->check(CLI::NonNegativeNumber);

  // generate
  InstanceOptions gen;
  std::string gen_out;
  std::string gen_config;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Sample an SBM instance to disk");
  add_sbm_options(generate_cmd, gen);
  generate_cmd->add_option("--num-seeds", gen.num_seeds, "Labeled nodes per cluster (S)");
  generate_cmd->add_flag("--permute", gen.permute, "Relabel nodes by a random permutation");
  generate_cmd->add_option("--out", gen_out, "Output prefix (.edges, .partition, .meta)")
      ->required();
  generate_cmd->add_option("--config", gen_config, "key=value defaults file");

  // cluster
  InstanceOptions clu;
  SolverOptions clu_solver;
  std::string clu_out;
  std::string clu_diag;
  std::string clu_config;
  CLI::App* cluster_cmd = app.add_subcommand("cluster", "Recover cluster assignments");
  cluster_cmd->add_option("--instance", clu.instance, "Instance prefix written by generate");
  add_sbm_options(cluster_cmd, clu);
  cluster_cmd->add_option("--num-seeds", clu.num_seeds, "Labeled nodes per cluster (S)");
  add_solver_options(cluster_cmd, clu_solver);
  cluster_cmd->add_option("--out", clu_out, "Result CSV (default: none)");
  cluster_cmd->add_option("--diagnostics", clu_diag, "Per-solve key=value diagnostics file");
  cluster_cmd->add_option("--config", clu_config, "key=value defaults file");

  // sweep
  SweepConfig sweep = accuracy_sweep_defaults();
  SolverOptions sweep_solver;
  std::string sweep_out;
  std::string sweep_agg;
  std::string sweep_plot;
  std::string sweep_config;
  bool no_wall_time = false;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Accuracy over a grid of p_in and S");
  sweep_cmd->add_option("--sizes", sweep.cluster_sizes, "Cluster sizes")->delimiter(',');
  sweep_cmd->add_option("--p-out", sweep.p_out, "Edge probability across clusters");
  sweep_cmd->add_option("--p-in-grid", sweep.p_in_grid, "Values of p_in")->delimiter(',');
  sweep_cmd->add_option("--num-seeds", sweep.s_values, "Values of S")->delimiter(',');
  sweep_cmd->add_option("--reps", sweep.reps, "Repetitions per grid point")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--rng-seed", sweep.rng_seed, "Master seed");
  add_solver_options(sweep_cmd, sweep_solver);
  sweep_cmd->add_option("--out", sweep_out, "Per-run CSV")->required();
  sweep_cmd->add_option("--aggregate-out", sweep_agg, "Aggregate CSV");
  sweep_cmd->add_option("--gnuplot", sweep_plot, "Write a gnuplot script for the aggregate");
  sweep_cmd->add_flag("--no-wall-time", no_wall_time, "Write wall_ms as 0");
  sweep_cmd->add_option("--config", sweep_config, "key=value defaults file");

  // analyze
  InstanceOptions ana;
  AnalysisOptions ana_opts;
  std::string ana_out;
  std::string ana_config;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Evaluate recovery conditions");
  analyze_cmd->add_option("--instance", ana.instance, "Instance prefix written by generate");
  add_sbm_options(analyze_cmd, ana);
  analyze_cmd->add_option("--num-seeds", ana.num_seeds, "Labeled nodes per cluster (S)");
  analyze_cmd->add_option("--alpha", ana_opts.alpha, "Boundary concentration constant")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--beta", ana_opts.beta, "Recovery condition constant")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--eq19-cluster-size", ana_opts.eq19_cluster_size,
                        "Use the cluster size instead of N in the spectral cut bound");
  analyze_cmd->add_option("--out", ana_out, "Report CSV (default: stdout)");
  analyze_cmd->add_option("--config", ana_config, "key=value defaults file");

  std::vector<const char*> argv{"tvmin"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (threads == 0) {
      if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
        threads = static_cast<int>(parse_int(env));
      }
    }
    if (threads > 0) omp_set_num_threads(threads);

    if (*generate_cmd) {
      if (!gen_config.empty()) apply_config_file(generate_cmd, gen_config);
      const SbmInstance inst = load_or_sample(gen);
      write_instance(gen_out, inst);
      out << "wrote " << gen_out << ".{edges,partition,meta}: n=" << inst.graph.num_nodes()
          << " edges=" << inst.graph.num_edges() << '\n';
    } else if (*cluster_cmd) {
      if (!clu_config.empty()) apply_config_file(cluster_cmd, clu_config);
      const SbmInstance inst = load_or_sample(clu);
      const auto seeds = labeled_seeds(inst.seeds);
      const ClusteringResult result =
          cluster(inst.graph, seeds, inst.truth.num_clusters(), clu_solver.config());
      const Accuracy acc = accuracy(result, inst.truth, inst.seeds);
      if (!clu_out.empty()) {
        OutputFile f(clu_out, out);
        write_result_csv(*f, inst, result);
      }
      if (!clu_diag.empty()) {
        OutputFile f(clu_diag, out);
        write_diagnostics(*f, result);
      }
      int iters = 0;
      for (const auto& d : result.diagnostics) iters = std::max(iters, d.iters);
      out << "accuracy=" << format_double(acc.value) << " correct=" << acc.correct
          << " unlabeled=" << acc.counted << " clusters=" << result.num_clusters()
          << " iters=" << iters << (acc.degenerate ? " degenerate=true" : "") << '\n';
    } else if (*sweep_cmd) {
      if (!sweep_config.empty()) apply_config_file(sweep_cmd, sweep_config);
      sweep.solver = sweep_solver.config();
      sweep.record_wall_time = !no_wall_time;
      sweep.threads = threads;
      const auto rows = run_sweep(sweep);
      {
        OutputFile f(sweep_out, out);
        write_sweep_csv(*f, rows);
      }
      const auto agg = aggregate(rows);
      if (!sweep_agg.empty()) {
        OutputFile f(sweep_agg, out);
        write_aggregate_csv(*f, agg);
      }
      if (!sweep_plot.empty()) {
        OutputFile f(sweep_plot, out);
        write_gnuplot_script(*f, sweep_agg.empty() ? "aggregate.csv" : sweep_agg,
                             sweep.s_values);
      }
    } else if (*analyze_cmd) {
      if (!ana_config.empty()) apply_config_file(analyze_cmd, ana_config);
      const SbmInstance inst = load_or_sample(ana);
      const AnalysisReport report = analyze(inst, ana_opts);
      OutputFile f(ana_out, out);
      write_report_csv(*f, report);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.get_name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace tvmin::cli
