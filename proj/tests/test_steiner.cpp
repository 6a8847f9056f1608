#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>

#include "steiner/families.hpp"
#include "steiner/scan.hpp"
#include "steiner/steiner_tree.hpp"

using namespace steiner;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, es);
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, es);
}

/// Witness sanity: edge count matches cost, tree is connected and acyclic,
/// contains the terminals, and every leaf is a terminal.
void check_witness(const Graph& g, const TerminalSet& s, const SteinerResult& r) {
  REQUIRE(r.cost.is_finite());
  REQUIRE((std::int64_t)r.tree_edges.size() == r.cost.value());
  REQUIRE(r.tree_vertices.size() == r.tree_edges.size() + 1);
  std::map<Vertex, int> deg;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [u, v] : r.tree_edges) {
    CHECK(g.has_edge(u, v));
    ++deg[u];
    ++deg[v];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const Vertex t : s.vertices())
    CHECK(std::binary_search(r.tree_vertices.begin(), r.tree_vertices.end(), t));
  for (const auto& [v, d] : deg)
    if (d == 1) CHECK(s.contains(v));
  // connectivity: BFS over the tree edges reaches every tree vertex
  std::set<Vertex> seen{r.tree_vertices.front()};
  std::vector<Vertex> stack{r.tree_vertices.front()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex u : adj[v])
      if (seen.insert(u).second) stack.push_back(u);
  }
  CHECK(seen.size() == r.tree_vertices.size());
}

}  // namespace

TEST_CASE("steiner distance basics") {
  const Graph p4 = path_graph(4);
  CHECK(steiner_distance(p4, TerminalSet({2})).cost == Distance::of(0));
  CHECK(steiner_distance(p4, TerminalSet({0, 3})).cost == Distance::of(3));
  CHECK(steiner_distance_bruteforce(p4, TerminalSet({0, 3})) == Distance::of(3));

  // singleton tree is a bare vertex
  const auto single = steiner_distance(p4, TerminalSet({2}));
  CHECK(single.tree_edges.empty());
  CHECK(single.tree_vertices == std::vector<Vertex>{2});

  const Graph iso = Graph::from_edge_list(2, {});
  CHECK(steiner_distance(iso, TerminalSet({0, 1})).cost.is_unreachable());
  CHECK(steiner_distance(iso, TerminalSet({0, 1})).tree_edges.empty());
  CHECK(steiner_distance_bruteforce(iso, TerminalSet({0, 1})).is_unreachable());

  CHECK_THROWS_AS(steiner_distance(p4, TerminalSet({0, 9})), Error);
}

TEST_CASE("oracle values fixed ahead of the implementation") {
  // C5 with terminals {0,2,4}: brute force over supersets gives 3.
  const Graph c5 = cycle_graph(5);
  const TerminalSet s({0, 2, 4});
  CHECK(steiner_distance_bruteforce(c5, s) == Distance::of(3));
  CHECK(steiner_distance(c5, s).cost == Distance::of(3));

  // star: center 0, leaves 1..3; terminals = leaves, only W = V connects.
  const Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(steiner_distance_bruteforce(star, TerminalSet({1, 2, 3})) == Distance::of(3));
  CHECK(steiner_distance(star, TerminalSet({1, 2, 3})).cost == Distance::of(3));
}

TEST_CASE("bruteforce cap is enforced") {
  const Graph g = path_graph(17);
  CHECK_THROWS_AS(steiner_distance_bruteforce(g, TerminalSet({0, 16})), Error);
  CHECK(steiner_distance_bruteforce(g, TerminalSet({0, 16}), 17) == Distance::of(16));
}

TEST_CASE("dp equals brute force over the whole small-graph corpus") {
  const auto corpus = seeded_corpus(8);
  std::mt19937_64 rng(12345);
  for (const Graph& g : corpus) {
    const int n = g.vertex_count();
    // all terminal sets on tiny graphs, sampled sets on the larger ones
    std::vector<std::vector<Vertex>> sets;
    if (n <= 5) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1u) s.push_back(v);
        if (s.size() >= 2) sets.push_back(s);
      }
    } else {
      for (int trial = 0; trial < 25; ++trial) {
        const int q = 2 + (int)(rng() % (n - 1));
        std::vector<Vertex> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        sets.emplace_back(all.begin(), all.begin() + q);
      }
    }
    for (const auto& vs : sets) {
      const TerminalSet s(vs);
      const SteinerResult r = steiner_distance(g, s);
      const Distance oracle = steiner_distance_bruteforce(g, s);
      REQUIRE(r.cost == oracle);
      check_witness(g, s, r);
    }
  }
}

TEST_CASE("pairs reduce to shortest paths") {
  const auto corpus = seeded_corpus(6);
  for (const Graph& g : corpus) {
    const int n = g.vertex_count();
    if (n < 2) continue;
    for (Vertex u = 0; u < n; ++u) {
      const auto row = g.bfs_distances(u);
      for (Vertex v = u + 1; v < n; ++v)
        CHECK(steiner_distance(g, TerminalSet({u, v})).cost == row[v]);
    }
  }
}

TEST_CASE("monotonicity and the size lower bound") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    EnsembleConfig cfg;
    cfg.kind = EnsembleConfig::Kind::RandomConnectedGnp;
    cfg.n = 10;
    cfg.p = Rational(1, 3);
    cfg.seed = rng();
    const Graph g = random_graph(cfg);
    std::vector<Vertex> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    const int q = 2 + (int)(rng() % 5);
    const TerminalSet small(std::vector<Vertex>(all.begin(), all.begin() + q));
    const TerminalSet big(std::vector<Vertex>(all.begin(), all.begin() + q + 2));
    const auto ds = steiner_distance(g, small).cost;
    const auto db = steiner_distance(g, big).cost;
    CHECK(ds.value() <= db.value());
    CHECK(ds.value() >= small.size() - 1);
    CHECK(db.value() >= big.size() - 1);
  }
}

TEST_CASE("steiner distance is deterministic including its witness") {
  const FamilyHandle fam = build_Gk(6);
  std::vector<Vertex> d_set;
  for (int i = 1; i <= 6; ++i) d_set.push_back(fam.role("d" + std::to_string(i)));
  const auto a = steiner_distance(fam.graph, TerminalSet(d_set));
  const auto b = steiner_distance(fam.graph, TerminalSet(d_set));
  CHECK(a.tree_edges == b.tree_edges);
}

TEST_CASE("enumeration finds exactly the distinct minimum trees") {
  // unique path
  const Graph p3 = path_graph(3);
  const auto unique_tree = enumerate_min_steiner_trees(p3, TerminalSet({0, 2}), 10);
  REQUIRE(unique_tree.size() == 1);
  CHECK(unique_tree[0].tree_edges == std::vector<Edge>{{0, 1}, {1, 2}});

  // 4-cycle, opposite corners: the two length-2 paths
  const Graph c4 = cycle_graph(4);
  const auto two = enumerate_min_steiner_trees(c4, TerminalSet({0, 2}), 10);
  REQUIRE(two.size() == 2);
  CHECK(two[0].tree_edges != two[1].tree_edges);
  for (const auto& t : two) CHECK(t.cost == Distance::of(2));

  // limit truncates deterministically
  const auto capped = enumerate_min_steiner_trees(c4, TerminalSet({0, 2}), 1);
  REQUIRE(capped.size() == 1);
  CHECK(capped[0].tree_edges == two[0].tree_edges);

  CHECK_THROWS_AS(
      enumerate_min_steiner_trees(Graph::from_edge_list(2, {}), TerminalSet({0, 1}), 5), Error);
}

TEST_CASE("enumeration is exhaustive against brute force on the corpus") {
  // Count minimum Steiner trees directly: spanning trees of connected
  // supersets realizing the optimum, deduplicated by edge set.
  const auto corpus = seeded_corpus(5);
  std::mt19937_64 rng(4242);
  for (const Graph& g : corpus) {
    const int n = g.vertex_count();
    if (n < 3 || !g.is_connected()) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const int q = 2 + (int)(rng() % 2);
      std::vector<Vertex> all(n);
      for (int v = 0; v < n; ++v) all[v] = v;
      std::shuffle(all.begin(), all.end(), rng);
      const TerminalSet s(std::vector<Vertex>(all.begin(), all.begin() + std::min(q, n)));

      const int best = (int)steiner_distance_bruteforce(g, s).value();
      // enumerate every edge subset of size `best`: which are Steiner trees?
      const auto edges = g.edges();
      std::set<std::vector<Edge>> expected;
      std::vector<int> idx(best);
      const std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == best) {
          std::vector<Edge> chosen;
          for (const int i : idx) chosen.push_back(edges[i]);
          std::set<Vertex> vs(s.vertices().begin(), s.vertices().end());
          for (const auto& [u, v] : chosen) {
            vs.insert(u);
            vs.insert(v);
          }
          if ((int)vs.size() != best + 1) return;
          // connected on its vertex set?
          std::map<Vertex, std::vector<Vertex>> adj;
          for (const auto& [u, v] : chosen) {
            adj[u].push_back(v);
            adj[v].push_back(u);
          }
          std::set<Vertex> seen{*vs.begin()};
          std::vector<Vertex> stack{*vs.begin()};
          while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const Vertex u : adj[v])
              if (seen.insert(u).second) stack.push_back(u);
          }
          if (seen == vs) expected.insert(chosen);
          return;
        }
        for (int i = start; i <= (int)edges.size() - (best - depth); ++i) {
          idx[depth] = i;
          rec(i + 1, depth + 1);
        }
      };
      rec(0, 0);

      const auto got = enumerate_min_steiner_trees(g, s, 1 + (int)expected.size());
      std::set<std::vector<Edge>> got_set;
      for (const auto& t : got) got_set.insert(t.tree_edges);
      REQUIRE(got_set == expected);
    }
  }
}
