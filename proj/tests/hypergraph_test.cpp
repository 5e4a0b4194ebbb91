#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <algorithm>
#include <chrono>

using namespace tropdd;

namespace {

constexpr Node u = 0, v = 1, w = 2, x = 3, y = 4, t = 5;

std::vector<IndexSet> minimal_components(const SccPartition& p) {
  std::vector<IndexSet> out;
  for (auto i : p.minimal) out.push_back(p.components[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("reachability on the six-node example") {
  auto h = fixtures::six_node_hypergraph();
  CHECK(h.size() == 6 + 2 + 2 + 2 + 4 + 3);
  CHECK(reachable_from(h, u) == IndexSet{u, v, w, x, y, t});
  CHECK(reachable_from(h, x) == IndexSet{x});
  CHECK(reachable_from(h, y) == IndexSet{y});
  CHECK_THROWS_AS(reachable_from(h, 6), std::invalid_argument);
}

TEST_CASE("edgeless hypergraph") {
  Hypergraph h(3);
  CHECK(reachable_from(h, 1) == IndexSet{1});
  CHECK(minimal_sccs(h) == std::vector<IndexSet>{{0}, {1}, {2}});
  CHECK_FALSE(has_least_scc(h));

  Hypergraph single(1);
  auto p = scc_partition(single);
  CHECK(p.components == std::vector<IndexSet>{{0}});
  CHECK(p.minimal == std::vector<std::size_t>{0});
  CHECK(least_scc(single) == IndexSet{0});
}

TEST_CASE("components of the six-node example") {
  auto h = fixtures::six_node_hypergraph();
  auto p = scc_partition(h);
  CHECK(p.components == std::vector<IndexSet>{{u, v, w}, {x}, {y}, {t}});
  CHECK(minimal_components(p) == std::vector<IndexSet>{{x}, {y}, {t}});
  CHECK(minimal_sccs(h) == std::vector<IndexSet>{{x}, {y}, {t}});
  CHECK_FALSE(has_least_scc(h));
  // {x} <= {u,v,w}, and the singletons are pairwise incomparable.
  CHECK(p.below[1][0]);
  CHECK_FALSE(p.below[1][2]);
  CHECK_FALSE(p.below[2][3]);
}

TEST_CASE("tangent hypergraph of the extreme point (2,2,0)") {
  Hypergraph h(3);
  h.add_edge({1}, {0});
  h.add_edge({2}, {0});
  CHECK(least_scc(h) == IndexSet{0});
}

TEST_CASE("a hyperedge only fires on its whole tail") {
  // 0 <-> 1 cycle, 2 alone; {0,2} -> 3 never fires from {0,1}.
  Hypergraph h(4);
  h.add_edge({0}, {1});
  h.add_edge({1}, {0});
  h.add_edge({0, 2}, {3});
  CHECK(minimal_sccs(h) == std::vector<IndexSet>{{0, 1}, {2}, {3}});

  // Once merged, a hyperedge inside a component leads out of it.
  Hypergraph g(3);
  g.add_edge({0}, {1});
  g.add_edge({1}, {0});
  g.add_edge({0, 1}, {2});
  CHECK(minimal_sccs(g) == std::vector<IndexSet>{{2}});
  CHECK(least_scc(g) == IndexSet{2});
}

TEST_CASE("hyperedges enabled by a merge can close a bigger cycle") {
  // 0 <-> 1, {0,1} -> 2, 2 -> 0: one component {0,1,2}.
  Hypergraph h(3);
  h.add_edge({0}, {1});
  h.add_edge({1}, {0});
  h.add_edge({0, 1}, {2});
  h.add_edge({2}, {0});
  CHECK(minimal_sccs(h) == std::vector<IndexSet>{{0, 1, 2}});
}

TEST_CASE("malformed hyperedges are rejected") {
  Hypergraph h(2);
  CHECK_THROWS_AS(h.add_edge({}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge({0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge({0}, {2}), std::invalid_argument);
  h.add_edge({1, 1, 0}, {0});
  CHECK(h.edge(0).tail == std::vector<Node>{0, 1});
}

TEST_CASE("debug text format") {
  auto h = parse_hypergraph("nodes 3\n# comment\ntail 2 -> head 1\ntail 1 3 -> head 2 3\n");
  CHECK(h.node_count() == 3);
  REQUIRE(h.edges().size() == 2);
  CHECK(h.edge(1).tail == std::vector<Node>{0, 2});
  CHECK(to_string(h) == "nodes 3\ntail 2 -> head 1\ntail 1 3 -> head 2 3\n");
  CHECK(to_string(parse_hypergraph(to_string(fixtures::six_node_hypergraph()))) ==
        to_string(fixtures::six_node_hypergraph()));
  CHECK_THROWS_AS(parse_hypergraph("tail 1 -> head 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("nodes 2\ntail 1 head 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("nodes 2\ntail 1 -> head 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("nodes 2\ntail -> head 1\n"), std::invalid_argument);
}

TEST_CASE("reachability properties on random hypergraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 10;
    auto h = fixtures::random_hypergraph(rng, n, rng() % (2 * n + 1));
    std::vector<IndexSet> reach(n);
    for (Node a = 0; a < n; ++a) {
      reach[a] = reachable_from(h, a);
      CHECK(std::binary_search(reach[a].begin(), reach[a].end(), a));
      CHECK(reach[a] == oracle::naive_reachable(h, a));
    }
    for (Node a = 0; a < n; ++a)
      for (Node b : reach[a]) CHECK(std::includes(reach[a].begin(), reach[a].end(), reach[b].begin(), reach[b].end()));

    // Monotone under edge insertion.
    Hypergraph bigger = h;
    auto extra = fixtures::random_hypergraph(rng, n, 1);
    bigger.add_edge(extra.edge(0).tail, extra.edge(0).head);
    for (Node a = 0; a < n; ++a) {
      auto r = reachable_from(bigger, a);
      CHECK(std::includes(r.begin(), r.end(), reach[a].begin(), reach[a].end()));
    }
  }
}

TEST_CASE("minimal components agree with the naive oracle") {
  std::mt19937_64 rng(12);
  int with_least = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const std::size_t edges = rng() % (3 * n + 1);
    auto h = fixtures::random_hypergraph(rng, n, edges, 1 + rng() % 4, 1 + rng() % 3);
    auto naive = oracle::naive_minimal_sccs(h);
    auto full = scc_partition(h);
    REQUIRE(full.components == naive.components);
    REQUIRE(full.below == naive.below);
    auto fast = minimal_sccs(h);
    INFO(to_string(h));
    REQUIRE(fast == minimal_components(naive));

    // Least component by the O(|N| size) route: a component contained in the
    // reach set of every node.
    std::optional<IndexSet> least;
    for (const auto& c : naive.components) {
      bool everyone = true;
      for (Node a = 0; a < n && everyone; ++a) {
        auto r = reachable_from(h, a);
        everyone = std::includes(r.begin(), r.end(), c.begin(), c.end());
      }
      if (everyone) least = c;
    }
    CHECK(least_scc(h) == least);
    with_least += least.has_value();
  }
  CHECK(with_least > 100);  // the sample exercises both outcomes
}

TEST_CASE("dense cycles with hyperedges agree with the naive oracle") {
  // Rings with chords make large merged components.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 10;
    Hypergraph h(n);
    for (Node a = 0; a + 1 < n; ++a)
      if (rng() % 4) h.add_edge({a}, {a + 1});
    auto extra = fixtures::random_hypergraph(rng, n, n, 3, 2);
    for (const auto& e : extra.edges()) h.add_edge(e.tail, e.head);
    auto naive = oracle::naive_minimal_sccs(h);
    INFO(to_string(h));
    REQUIRE(minimal_sccs(h) == minimal_components(naive));
  }
}

TEST_CASE("least component on large random hypergraphs matches reachability") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 200;
    auto h = fixtures::random_hypergraph(rng, n, n + rng() % (2 * n), 3, 2);
    auto fast = minimal_sccs(h);
    // Each terminal component is closed: its reach set is itself.
    for (const auto& c : fast) CHECK(reachable_from(h, c.front()) == c);
    // Every node reaches some terminal component.
    for (Node a = 0; a < n; a += 17) {
      auto r = reachable_from(h, a);
      bool hits = std::any_of(fast.begin(), fast.end(), [&](const IndexSet& c) {
        return std::binary_search(r.begin(), r.end(), c.front());
      });
      CHECK(hits);
    }
  }
}

TEST_CASE("deep chains do not exhaust the call stack") {
  const std::size_t n = 200000;
  Hypergraph h(n);
  for (Node a = 0; a + 1 < n; ++a) h.add_edge({a}, {a + 1});
  h.add_edge({n - 1}, {0});
  auto least = least_scc(h);
  REQUIRE(least.has_value());
  CHECK(least->size() == n);
}
