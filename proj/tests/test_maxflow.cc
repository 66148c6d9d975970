#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>

#include "doctest.h"
#include "test_support.h"
#include "tvmin/errors.h"
#include "tvmin/maxflow.h"

namespace tvmin {
namespace {

using testing::Gen;

TEST_CASE("max flow on a textbook network") {
  // CLRS figure 26.1, max flow 23.
  MaxFlow f(6);
  f.add_arc(0, 1, 16);
  f.add_arc(0, 2, 13);
  f.add_arc(2, 1, 4);
  f.add_arc(1, 3, 12);
  f.add_arc(3, 2, 9);
  f.add_arc(2, 4, 14);
  f.add_arc(4, 3, 7);
  f.add_arc(3, 5, 20);
  f.add_arc(4, 5, 4);
  CHECK(f.solve(0, 5) == 23);
  const auto side = f.source_side();
  CHECK(side[0]);
  CHECK_FALSE(side[5]);
}

TEST_CASE("disconnected source and sink") {
  MaxFlow f(4);
  f.add_arc(0, 1, 5);
  f.add_arc(2, 3, 5);
  CHECK(f.solve(0, 3) == 0);
}

// Minimum cut by enumerating every source-side set.
Capacity brute_min_cut(int n, const std::vector<std::tuple<int, int, Capacity>>& arcs, int s,
                       int t) {
  Capacity best = INT64_MAX;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!((m >> s) & 1) || ((m >> t) & 1)) continue;
    Capacity c = 0;
    for (auto [a, b, cap] : arcs)
      if (((m >> a) & 1) && !((m >> b) & 1)) c += cap;
    best = std::min(best, c);
  }
  return best;
}

TEST_CASE("max flow equals the brute-force min cut") {
  Gen gen(31);
  for (int t = 0; t < 200; ++t) {
    const int n = gen.uniform_int(2, 9);
    std::vector<std::tuple<int, int, Capacity>> arcs;
    MaxFlow f(n);
    std::vector<int> ids;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && gen.uniform() < 0.4) {
          const Capacity c = gen.uniform_int(0, 10);
          arcs.emplace_back(a, b, c);
          ids.push_back(f.add_arc(a, b, c));
        }
    const Capacity v = f.solve(0, n - 1);
    CHECK(v == brute_min_cut(n, arcs, 0, n - 1));

    // Flow is feasible and conserved.
    std::vector<Capacity> net(n, 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Capacity fl = f.flow(ids[i]);
      CHECK(fl >= 0);
      CHECK(fl <= std::get<2>(arcs[i]));
      net[std::get<0>(arcs[i])] -= fl;
      net[std::get<1>(arcs[i])] += fl;
    }
    for (int a = 1; a + 1 < n; ++a) CHECK(net[a] == 0);
    CHECK(net[n - 1] == v);

    // The residual-reachable set is a minimum cut.
    const auto side = f.source_side();
    Capacity cut = 0;
    for (auto [a, b, c] : arcs)
      if (side[a] && !side[b]) cut += c;
    CHECK(cut == v);
  }
}

TEST_CASE("circulation with lower bounds") {
  SUBCASE("feasible cycle") {
    FlowNetwork net(3);
    net.add_arc(0, 1, 2, 5);
    net.add_arc(1, 2, 0, 3);
    net.add_arc(2, 0, 1, 4);
    const auto flow = net.find_circulation();
    REQUIRE(flow.has_value());
    CHECK(net.is_circulation(*flow));
    CHECK((*flow)[0] >= 2);
    CHECK((*flow)[0] <= 3);
  }
  SUBCASE("infeasible lower bound") {
    FlowNetwork net(2);
    net.add_arc(0, 1, 3, 3);
    net.add_arc(1, 0, 0, 2);
    CHECK_FALSE(net.find_circulation().has_value());
  }
  SUBCASE("unbounded return arc") {
    FlowNetwork net(2);
    net.add_arc(0, 1, 7, 7);
    net.add_arc(1, 0, 0, kUnbounded);
    const auto flow = net.find_circulation();
    REQUIRE(flow.has_value());
    CHECK((*flow)[1] == 7);
  }
  SUBCASE("empty network") {
    FlowNetwork net(3);
    const auto flow = net.find_circulation();
    REQUIRE(flow.has_value());
    CHECK(flow->empty());
  }
  SUBCASE("bad bounds") {
    FlowNetwork net(2);
    CHECK_THROWS_AS(net.add_arc(0, 1, -1, 2), InvalidParameter);
    CHECK_THROWS_AS(net.add_arc(0, 1, 3, 2), InvalidParameter);
    CHECK_THROWS_AS(net.add_arc(0, 2, 0, 2), InvalidNodeId);
  }
}

TEST_CASE("circulation feasibility matches brute force on small networks") {
  Gen gen(32);
  for (int t = 0; t < 150; ++t) {
    const int n = gen.uniform_int(2, 4);
    FlowNetwork net(n);
    std::vector<BoundedArc> arcs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && gen.uniform() < 0.5) {
          const Capacity lo = gen.uniform_int(0, 2);
          const Capacity hi = lo + gen.uniform_int(0, 2);
          net.add_arc(a, b, lo, hi);
          arcs.push_back({a, b, lo, hi});
        }
    if (arcs.size() > 7) continue;
    // Enumerate every integral flow within bounds.
    bool feasible = false;
    std::vector<Capacity> f(arcs.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (feasible) return;
      if (i == arcs.size()) {
        std::vector<Capacity> bal(n, 0);
        for (std::size_t j = 0; j < arcs.size(); ++j) {
          bal[arcs[j].from] -= f[j];
          bal[arcs[j].to] += f[j];
        }
        feasible = std::all_of(bal.begin(), bal.end(), [](Capacity b) { return b == 0; });
        return;
      }
      for (Capacity v = arcs[i].lower; v <= arcs[i].upper; ++v) {
        f[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    const auto got = net.find_circulation();
    CHECK(got.has_value() == feasible);
    if (got) CHECK(net.is_circulation(*got));
  }
}

}  // namespace
}  // namespace tvmin
