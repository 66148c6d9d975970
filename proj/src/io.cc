#include "tvmin/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tvmin/errors.h"

namespace tvmin {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

const std::string& require(const std::map<std::string, std::string>& kv,
                           const std::string& key, const std::string& where) {
  auto it = kv.find(key);
  if (it == kv.end()) throw MalformedInput(where + ": missing key '" + key + "'");
  return it->second;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (s == "inf") return INFINITY;
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw MalformedInput("not a number: '" + std::string(s) + "'");
  }
  return v;
}

long long parse_int(std::string_view s) {
  s = trim(s);
  long long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw MalformedInput("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<long long> parse_int_list(std::string_view s) {
  std::vector<long long> out;
  if (trim(s).empty()) return out;
  for (auto item : split(s, ',')) out.push_back(parse_int(item));
  return out;
}

std::vector<double> parse_double_list(std::string_view s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (auto item : split(s, ',')) out.push_back(parse_double(item));
  return out;
}

Graph read_edge_list(std::istream& in, NodeId num_nodes) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto t = tokens(line);
    if (t.size() != 2) {
      throw MalformedInput("edge list line " + std::to_string(line_no) +
                           ": expected two node ids");
    }
    edges.emplace_back(static_cast<NodeId>(parse_int(t[0])),
                       static_cast<NodeId>(parse_int(t[1])));
  }
  return Graph::build(num_nodes, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# " << g.num_nodes() << " nodes, " << g.num_edges() << " edges\n";
  for (const Edge& e : g.edges()) out << e.head << ' ' << e.tail << '\n';
}

Partition read_partition(std::istream& in, NodeId num_nodes) {
  std::vector<int> assignment(num_nodes, 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto t = tokens(line);
    if (t.size() != 2) {
      throw MalformedInput("partition line " + std::to_string(line_no) +
                           ": expected 'node_id cluster_index'");
    }
    const long long node = parse_int(t[0]);
    const long long k = parse_int(t[1]);
    if (node < 0 || node >= num_nodes) {
      throw InvalidNodeId("partition line " + std::to_string(line_no) + ": node " +
                          std::to_string(node) + " out of range");
    }
    if (assignment[node] != 0) {
      throw MalformedInput("partition lists node " + std::to_string(node) + " twice");
    }
    if (k < 1) throw InvalidPartition("cluster index must be >= 1");
    assignment[node] = static_cast<int>(k);
  }
  for (NodeId i = 0; i < num_nodes; ++i) {
    if (assignment[i] == 0) {
      throw MalformedInput("partition is missing node " + std::to_string(i));
    }
  }
  return Partition::from_assignment(std::move(assignment));
}

void write_partition(std::ostream& out, const Partition& p) {
  for (NodeId i = 0; i < p.num_nodes(); ++i) out << i << ' ' << p.cluster_of(i) << '\n';
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw MalformedInput("expected key=value: '" + line + "'");
    kv[std::string(trim(std::string_view(line).substr(0, eq)))] =
        std::string(trim(std::string_view(line).substr(eq + 1)));
  }
  return kv;
}

void write_instance(const std::string& prefix, const SbmInstance& inst) {
  {
    auto out = open_out(prefix + ".edges");
    write_edge_list(out, inst.graph);
  }
  {
    auto out = open_out(prefix + ".partition");
    write_partition(out, inst.truth);
  }
  auto out = open_out(prefix + ".meta");
  out << "n=" << inst.graph.num_nodes() << '\n';
  out << "sizes=";
  const auto sizes = inst.truth.cluster_sizes();
  for (std::size_t k = 0; k < sizes.size(); ++k) out << (k ? "," : "") << sizes[k];
  out << '\n';
  if (inst.params) {
    out << "p_in=" << format_double(inst.params->p_in) << '\n';
    out << "p_out=" << format_double(inst.params->p_out) << '\n';
  }
  out << "rng_seed=" << inst.rng_seed << '\n';
  out << "S=" << inst.seeds.per_cluster_count << '\n';
  out << "seeds=";
  const auto seeds = inst.seeds.nodes();
  for (std::size_t i = 0; i < seeds.size(); ++i) out << (i ? "," : "") << seeds[i];
  out << '\n';
}

SbmInstance read_instance(const std::string& prefix) {
  const std::string meta_path = prefix + ".meta";
  std::map<std::string, std::string> kv;
  {
    auto in = open_in(meta_path);
    kv = read_key_values(in);
  }
  SbmInstance inst;
  const long long n = parse_int(require(kv, "n", meta_path));
  if (n < 1) throw MalformedInput(meta_path + ": n must be positive");
  {
    auto in = open_in(prefix + ".edges");
    inst.graph = read_edge_list(in, static_cast<NodeId>(n));
  }
  {
    auto in = open_in(prefix + ".partition");
    inst.truth = read_partition(in, static_cast<NodeId>(n));
  }

  const auto sizes = parse_int_list(require(kv, "sizes", meta_path));
  const auto actual = inst.truth.cluster_sizes();
  if (sizes.size() != actual.size() ||
      !std::equal(sizes.begin(), sizes.end(), actual.begin())) {
    throw MalformedInput(meta_path + ": sizes do not match the partition file");
  }

  if (kv.contains("rng_seed")) {
    inst.rng_seed = static_cast<std::uint64_t>(std::stoull(kv.at("rng_seed")));
  }
  if (kv.contains("p_in") && kv.contains("p_out")) {
    SbmParams params;
    params.cluster_sizes.assign(actual.begin(), actual.end());
    params.p_in = parse_double(kv.at("p_in"));
    params.p_out = parse_double(kv.at("p_out"));
    params.validate();
    inst.params = params;
  }

  const int s = static_cast<int>(parse_int(require(kv, "S", meta_path)));
  inst.seeds.per_cluster_count = s;
  inst.seeds.per_cluster.resize(inst.truth.num_clusters());
  std::vector<bool> seen(n, false);
  for (long long node : parse_int_list(require(kv, "seeds", meta_path))) {
    if (node < 0 || node >= n) {
      throw InvalidNodeId(meta_path + ": seed " + std::to_string(node) + " out of range");
    }
    if (seen[node]) throw InvalidSeed(meta_path + ": seed listed twice");
    seen[node] = true;
    inst.seeds.per_cluster[inst.truth.cluster_of(static_cast<NodeId>(node)) - 1].push_back(
        static_cast<NodeId>(node));
  }
  return inst;
}

}  // namespace tvmin
