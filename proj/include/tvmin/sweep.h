#ifndef TVMIN_SWEEP_H_
#define TVMIN_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tvmin/graph.h"
#include "tvmin/solver.h"

namespace tvmin {

struct SweepConfig {
  std::vector<NodeId> cluster_sizes{50, 50};
  double p_out = 0.025;
  std::vector<double> p_in_grid;
  std::vector<int> s_values{5, 10, 15};
  int reps = 10;
  std::uint64_t rng_seed = 1;
  SolverConfig solver;
  // 0 keeps the OpenMP default.
  int threads = 0;
  // When false every wall_ms is written as 0, making the row CSV a pure
  // function of the configuration.
  bool record_wall_time = true;

  // Throws InvalidParameter.
  void validate() const;
};

// p_in over 0.025, 0.05, ..., 0.5 with p_out = 0.025, S in {5, 10, 15},
// 10 repetitions of a 50 + 50 node instance.
SweepConfig accuracy_sweep_defaults();

struct SweepRow {
  int s = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  double ratio = 0.0;  // s * p_in / p_out
  int rep = 0;
  std::uint64_t instance_seed = 0;
  double accuracy = 0.0;
  int iters = 0;  // max over the per-cluster solves
  double wall_ms = 0.0;
};

struct AggregateRow {
  int s = 0;
  double ratio = 0.0;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // sample standard deviation, 0 for one rep
  int reps = 0;
};

// Instance seed for one run, derived from the master seed and the run's
// (grid index, s index, rep) coordinates.
std::uint64_t sweep_instance_seed(std::uint64_t master, std::size_t grid_index,
                                  std::size_t s_index, int rep);

// Runs every (s, p_in, rep) combination in parallel. Rows come back ordered
// by grid index, then s index, then rep.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Mean and spread over reps, grouped by s then p_in in order of first
// appearance.
std::vector<AggregateRow> aggregate(const std::vector<SweepRow>& rows);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
// gnuplot script plotting mean accuracy against s * p_in / p_out, one curve per s.
void write_gnuplot_script(std::ostream& out, const std::string& aggregate_csv,
                          const std::vector<int>& s_values);

}  // namespace tvmin

#endif  // TVMIN_SWEEP_H_
