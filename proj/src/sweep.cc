#include "tvmin/sweep.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>

#include "tvmin/clusterer.h"
#include "tvmin/errors.h"
#include "tvmin/io.h"
#include "tvmin/rng.h"
#include "tvmin/sbm.h"

namespace tvmin {

void SweepConfig::validate() const {
  SbmParams probe{cluster_sizes, 0.0, p_out};
  probe.validate();
  if (p_in_grid.empty()) throw InvalidParameter("p_in grid is empty");
  for (double p : p_in_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("p_in grid values must lie in [0,1]");
  }
  if (s_values.empty()) throw InvalidParameter("no seeds-per-cluster values given");
  const NodeId smallest = *std::min_element(cluster_sizes.begin(), cluster_sizes.end());
  for (int s : s_values) {
    if (s < 1 || s > smallest) {
      throw InvalidParameter("seeds per cluster must lie in 1.." + std::to_string(smallest));
    }
  }
  if (reps < 1) throw InvalidParameter("reps must be >= 1");
  if (solver.max_iters < 1) throw InvalidParameter("max_iters must be >= 1");
  if (threads < 0) throw InvalidParameter("threads must be >= 0");
}

SweepConfig accuracy_sweep_defaults() {
  SweepConfig c;
  for (int i = 1; i <= 20; ++i) c.p_in_grid.push_back(0.025 * i);
  return c;
}

std::uint64_t sweep_instance_seed(std::uint64_t master, std::size_t grid_index,
                                  std::size_t s_index, int rep) {
  return CounterRng(master)
      .split({grid_index, s_index, static_cast<std::uint64_t>(rep)})
      .bits(0);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t n_grid = config.p_in_grid.size();
  const std::size_t n_s = config.s_values.size();
  const auto reps = static_cast<std::size_t>(config.reps);
  const auto total = static_cast<std::ptrdiff_t>(n_grid * n_s * reps);

  SolverConfig solver = config.solver;
  solver.record_history = false;
  solver.backend = Backend::kSerial;

  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
  std::exception_ptr failure;
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t run = 0; run < total; ++run) {
    const auto idx = static_cast<std::size_t>(run);
    const std::size_t g = idx / (n_s * reps);
    const std::size_t si = (idx / reps) % n_s;
    const int rep = static_cast<int>(idx % reps);
    SweepRow& row = rows[idx];
    row.s = config.s_values[si];
    row.p_in = config.p_in_grid[g];
    row.p_out = config.p_out;
    row.ratio = config.p_out > 0.0 ? row.s * row.p_in / config.p_out : INFINITY;
    row.rep = rep;
    row.instance_seed = sweep_instance_seed(config.rng_seed, g, si, rep);
    try {
      const auto start = std::chrono::steady_clock::now();
      const SbmParams params{config.cluster_sizes, row.p_in, config.p_out};
      const SbmInstance inst = make_instance(params, row.s, row.instance_seed);
      const auto seeds = labeled_seeds(inst.seeds);
      const ClusteringResult result =
          cluster(inst.graph, seeds, inst.truth.num_clusters(), solver);
      row.accuracy = accuracy(result, inst.truth, inst.seeds).value;
      for (const auto& d : result.diagnostics) row.iters = std::max(row.iters, d.iters);
      const auto stop = std::chrono::steady_clock::now();
      if (config.record_wall_time) {
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      }
    } catch (...) {
#pragma omp critical(tvmin_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<SweepRow>& rows) {
  // Keyed by first appearance of s and of p_in so output order follows the
  // configuration.
  std::vector<int> s_order;
  std::vector<double> p_order;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const SweepRow*>> groups;
  for (const SweepRow& r : rows) {
    auto si = std::find(s_order.begin(), s_order.end(), r.s);
    if (si == s_order.end()) si = s_order.insert(s_order.end(), r.s);
    auto pi = std::find(p_order.begin(), p_order.end(), r.p_in);
    if (pi == p_order.end()) pi = p_order.insert(p_order.end(), r.p_in);
    groups[{static_cast<std::size_t>(si - s_order.begin()),
            static_cast<std::size_t>(pi - p_order.begin())}]
        .push_back(&r);
  }

  std::vector<AggregateRow> out;
  for (const auto& [key, members] : groups) {
    AggregateRow a;
    a.s = members.front()->s;
    a.ratio = members.front()->ratio;
    a.reps = static_cast<int>(members.size());
    double sum = 0.0;
    for (const SweepRow* r : members) sum += r->accuracy;
    a.mean_accuracy = sum / a.reps;
    if (a.reps > 1) {
      double ss = 0.0;
      for (const SweepRow* r : members) ss += (r->accuracy - a.mean_accuracy) * (r->accuracy - a.mean_accuracy);
      a.std_accuracy = std::sqrt(ss / (a.reps - 1));
    }
    out.push_back(a);
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "s,p_in,p_out,ratio,rep,instance_seed,accuracy,iters,wall_ms\n";
  for (const SweepRow& r : rows) {
    out << r.s << ',' << format_double(r.p_in) << ',' << format_double(r.p_out) << ','
        << format_double(r.ratio) << ',' << r.rep << ',' << r.instance_seed << ','
        << format_double(r.accuracy) << ',' << r.iters << ','
        << format_double(std::round(r.wall_ms * 1000.0) / 1000.0) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "s,ratio,mean_accuracy,std_accuracy,reps\n";
  for (const AggregateRow& a : rows) {
    out << a.s << ',' << format_double(a.ratio) << ',' << format_double(a.mean_accuracy)
        << ',' << format_double(a.std_accuracy) << ',' << a.reps << '\n';
  }
}

void write_gnuplot_script(std::ostream& out, const std::string& aggregate_csv,
                          const std::vector<int>& s_values) {
  out << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 'S p_in / p_out'\n"
      << "set ylabel 'accuracy'\n"
      << "set yrange [0.4:1.05]\n"
      << "plot";
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    out << (i ? ", \\\n    " : " ") << "'" << aggregate_csv << "' using 2:($1==" << s_values[i]
        << " ? $3 : NaN) with linespoints title 'S=" << s_values[i] << "'";
  }
  out << '\n';
}

}  // namespace tvmin
