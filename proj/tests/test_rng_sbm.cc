#include <cmath>
#include <set>

#include "doctest.h"
#include "test_support.h"
#include "tvmin/errors.h"
#include "tvmin/rng.h"
#include "tvmin/sbm.h"

namespace tvmin {
namespace {

TEST_CASE("counter rng is addressable and stable") {
  const CounterRng a(12345);
  CHECK(a.bits(7) == CounterRng(12345).bits(7));
  CHECK(a.bits(7) != a.bits(8));
  CHECK(a.split(1).key() != a.split(2).key());
  CHECK(a.split({1, 2}).key() == a.split(1).split(2).key());
  // SplitMix64 reference value: first output of seed 0 is mix64(phi).
  CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
  for (std::uint64_t c = 0; c < 1000; ++c) {
    const double u = a.uniform(c);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("bounded draws stay in range and cover it") {
  RngStream s(CounterRng(9));
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = s.below(7);
    REQUIRE(v < 7);
    ++hits[v];
  }
  for (int h : hits) CHECK(std::abs(h - 1000) < 150);
}

TEST_CASE("deterministic limits of generate") {
  SbmParams p{{3, 3}, 1.0, 0.0};
  const SbmGraph g = generate(p, 5);
  CHECK(g.graph.num_edges() == 6);
  CHECK(g.graph.has_edge(0, 1));
  CHECK(g.graph.has_edge(3, 5));
  CHECK_FALSE(g.graph.has_edge(2, 3));
  CHECK(g.truth.assignment()[2] == 1);
  CHECK(g.truth.assignment()[3] == 2);

  p.p_in = 0.0;
  CHECK(generate(p, 5).graph.num_edges() == 0);
}

TEST_CASE("generate is reproducible and seed-sensitive") {
  const SbmParams p{{20, 30}, 0.4, 0.1};
  const SbmGraph a = generate(p, 77);
  const SbmGraph b = generate(p, 77);
  const SbmGraph c = generate(p, 78);
  CHECK(testing::edge_pairs(a.graph) == testing::edge_pairs(b.graph));
  CHECK(testing::edge_pairs(a.graph) != testing::edge_pairs(c.graph));
}

TEST_CASE("permuted generation keeps the cluster structure") {
  const SbmParams p{{4, 4}, 1.0, 0.0};
  const SbmGraph g = generate(p, 3, true);
  CHECK(g.graph.num_edges() == 12);
  for (const Edge& e : g.graph.edges()) {
    CHECK(g.truth.cluster_of(e.head) == g.truth.cluster_of(e.tail));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(generate(SbmParams{{}, 0.5, 0.1}, 1), InvalidParameter);
  CHECK_THROWS_AS(generate(SbmParams{{3, 0}, 0.5, 0.1}, 1), InvalidParameter);
  CHECK_THROWS_AS(generate(SbmParams{{3}, 1.5, 0.1}, 1), InvalidParameter);
  CHECK_THROWS_AS(generate(SbmParams{{3}, 0.5, -0.1}, 1), InvalidParameter);
}

// Counts of intra-cluster-1, intra-cluster-2 and cross edges.
struct Counts {
  double in1 = 0, in2 = 0, cross = 0;
};

Counts count_edges(const SbmGraph& g) {
  Counts c;
  for (const Edge& e : g.graph.edges()) {
    const int a = g.truth.cluster_of(e.head), b = g.truth.cluster_of(e.tail);
    if (a != b) c.cross += 1; else if (a == 1) c.in1 += 1; else c.in2 += 1;
  }
  return c;
}

TEST_CASE("edge counts follow the binomial moments") {
  // Monte Carlo over 200 seeds. Intra pairs per cluster 50*49/2 = 1225 at
  // p_in = 0.5 (mean 612.5), cross pairs 2500 at p_out = 0.01 (mean 25).
  const SbmParams p{{50, 50}, 0.5, 0.01};
  const int runs = 200;
  std::vector<Counts> all;
  for (int s = 0; s < runs; ++s) all.push_back(count_edges(generate(p, 1000 + s)));

  auto mean_of = [&](double Counts::*f) {
    double m = 0;
    for (const auto& c : all) m += c.*f;
    return m / runs;
  };
  const double in_mean = 1225 * 0.5, in_sd = std::sqrt(1225 * 0.5 * 0.5 / runs);
  const double x_mean = 2500 * 0.01, x_sd = std::sqrt(2500 * 0.01 * 0.99 / runs);
  CHECK(std::abs(mean_of(&Counts::in1) - in_mean) <= 3 * in_sd);
  CHECK(std::abs(mean_of(&Counts::in2) - in_mean) <= 3 * in_sd);
  CHECK(std::abs(mean_of(&Counts::cross) - x_mean) <= 4 * x_sd);

  // Per-instance sample variance against the binomial variance.
  double var = 0;
  const double m1 = mean_of(&Counts::in1);
  for (const auto& c : all) var += (c.in1 - m1) * (c.in1 - m1);
  var /= runs - 1;
  CHECK(var == doctest::Approx(1225 * 0.25).epsilon(0.25));

  // Disjoint pair sets: correlation of the two intra counts near zero.
  const double m2 = mean_of(&Counts::in2);
  double cov = 0, v1 = 0, v2 = 0;
  for (const auto& c : all) {
    cov += (c.in1 - m1) * (c.in2 - m2);
    v1 += (c.in1 - m1) * (c.in1 - m1);
    v2 += (c.in2 - m2) * (c.in2 - m2);
  }
  CHECK(std::abs(cov / std::sqrt(v1 * v2)) < 4.0 / std::sqrt(runs));
}

TEST_CASE("no self-loops or duplicates across many instances") {
  testing::Gen gen(5);
  for (int t = 0; t < 50; ++t) {
    const SbmParams p{{gen.uniform_int(1, 10), gen.uniform_int(1, 10)}, gen.uniform(), gen.uniform()};
    const SbmGraph g = generate(p, gen.bits());
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : g.graph.edges()) {
      CHECK(e.head < e.tail);
      CHECK(seen.insert({e.head, e.tail}).second);
    }
  }
}

TEST_CASE("select_seeds") {
  const std::vector<NodeId> sizes{50, 50};
  const Partition truth = Partition::contiguous(sizes);
  const SeedSet s = select_seeds(truth, 5, 3);
  CHECK(s.size() == 10);
  std::set<NodeId> distinct;
  for (int k = 1; k <= 2; ++k) {
    CHECK(s.per_cluster[k - 1].size() == 5);
    for (NodeId i : s.per_cluster[k - 1]) {
      CHECK(truth.cluster_of(i) == k);
      distinct.insert(i);
    }
  }
  CHECK(distinct.size() == 10);
  CHECK(select_seeds(truth, 5, 3).nodes() == s.nodes());

  const SeedSet one = select_seeds(truth, 1, 3);
  CHECK(one.per_cluster[0].size() == 1);
  CHECK(one.per_cluster[1].size() == 1);

  const std::vector<NodeId> small{3, 4};
  const Partition t2 = Partition::contiguous(small);
  const SeedSet full = select_seeds(t2, 3, 1);
  CHECK(std::set<NodeId>(full.per_cluster[0].begin(), full.per_cluster[0].end()) ==
        std::set<NodeId>{0, 1, 2});
  CHECK_THROWS_AS(select_seeds(t2, 4, 1), TooManySeeds);
  CHECK_THROWS_AS(select_seeds(t2, 0, 1), InvalidParameter);

  // Labeling every node when s equals each cluster size.
  const std::vector<NodeId> eq{3, 3};
  CHECK(select_seeds(Partition::contiguous(eq), 3, 2).size() == 6);
}

TEST_CASE("seed draws are roughly uniform within a cluster") {
  const std::vector<NodeId> sizes{10};
  const Partition truth = Partition::contiguous(sizes);
  std::vector<int> hits(10, 0);
  for (int r = 0; r < 2000; ++r) ++hits[select_seeds(truth, 1, r).per_cluster[0][0]];
  // Binomial(2000, 0.1): sd ~ 13.4.
  for (int h : hits) CHECK(std::abs(h - 200) < 60);
}

}  // namespace
}  // namespace tvmin
