#ifndef TVMIN_IO_H_
#define TVMIN_IO_H_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tvmin/graph.h"
#include "tvmin/sbm.h"

namespace tvmin {

// Shortest decimal form that parses back to the same double; "inf", "-inf"
// and "nan" for non-finite values.
std::string format_double(double v);
// Strict parse of a whole token. Throws MalformedInput.
double parse_double(std::string_view s);
long long parse_int(std::string_view s);
std::vector<long long> parse_int_list(std::string_view s);
std::vector<double> parse_double_list(std::string_view s);

// Edge list: one "i j" pair of 0-based ids per line; '#' lines and blank
// lines are skipped.
Graph read_edge_list(std::istream& in, NodeId num_nodes);
void write_edge_list(std::ostream& out, const Graph& g);

// One "node_id cluster_index" line per node, cluster indices 1-based. Every
// node 0..num_nodes-1 must appear exactly once.
Partition read_partition(std::istream& in, NodeId num_nodes);
void write_partition(std::ostream& out, const Partition& p);

// key=value lines, '#' comments.
std::map<std::string, std::string> read_key_values(std::istream& in);

// An instance on disk is three files sharing a prefix: <prefix>.edges,
// <prefix>.partition and <prefix>.meta. The meta file holds n, sizes, p_in,
// p_out, rng_seed, S and seeds; p_in and p_out are omitted for graphs that
// were not sampled from an SBM.
void write_instance(const std::string& prefix, const SbmInstance& inst);
SbmInstance read_instance(const std::string& prefix);

}  // namespace tvmin

#endif  // TVMIN_IO_H_
