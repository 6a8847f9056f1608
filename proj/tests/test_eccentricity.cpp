#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "steiner/eccentricity.hpp"
#include "steiner/families.hpp"

using namespace steiner;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, es);
}

Graph random_connected(int n, std::uint64_t seed) {
  EnsembleConfig cfg;
  cfg.kind = EnsembleConfig::Kind::RandomConnectedGnp;
  cfg.n = n;
  cfg.p = Rational(2, 5);
  cfg.seed = seed;
  return random_graph(cfg);
}

/// Reference e_k by direct enumeration of all k-subsets containing v,
/// costed with the brute-force oracle. Usable for n <= 16.
std::int64_t ecc_oracle(const Graph& g, Vertex v, int k) {
  const int n = g.vertex_count();
  std::int64_t best = -1;
  std::vector<Vertex> combo(k);
  const std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      if (std::find(combo.begin(), combo.end(), v) == combo.end()) return;
      best = std::max(best, steiner_distance_bruteforce(g, TerminalSet(combo)).value());
      return;
    }
    for (int x = start; x < n; ++x) {
      combo[depth] = x;
      rec(x + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("k-eccentricity against the subset oracle on the 5-vertex star") {
  const Graph star = star_graph(4);
  // brute force: any 3 leaves span 3 edges; center + 2 leaves spans 2
  for (Vertex v = 0; v < 5; ++v)
    CHECK(k_eccentricity(star, v, 3).value.value() == ecc_oracle(star, v, 3));
  CHECK(ecc_oracle(star, 0, 3) == 2);   // the center
  CHECK(ecc_oracle(star, 1, 3) == 3);   // any leaf
  const auto rep = steiner_radius_diameter(star, 3);
  CHECK(rep.srad == Distance::of(2));
  CHECK(rep.sdiam == Distance::of(3));
  CHECK(rep.center_vertices == std::vector<Vertex>{0});
}

TEST_CASE("k = 2 collapses to the classical invariants") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = random_connected(4 + (int)(seed % 9), 1000 + seed);
    const auto rep = steiner_radius_diameter(g, 2);
    CHECK(rep.srad == g.radius());
    CHECK(rep.sdiam == g.diameter());
    CHECK(rep.center_vertices == g.center());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK(k_eccentricity(g, v, 2).value == g.eccentricity(v));
  }
}

TEST_CASE("paths: classical radius/diameter at k = 2") {
  for (int n = 2; n <= 9; ++n) {
    const auto rep = steiner_radius_diameter(path_graph(n), 2);
    CHECK(rep.srad == Distance::of((n - 1 + 1) / 2));
    CHECK(rep.sdiam == Distance::of(n - 1));
  }
  // with k = 2 the diametral pair of a path is its ends
  CHECK(diametral_set(path_graph(3), 2) == TerminalSet({0, 2}));
}

TEST_CASE("complete graph diametral set is the lexicographic first") {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) es.emplace_back(i, j);
  const Graph k5 = Graph::from_edge_list(5, es);
  const auto rep = steiner_radius_diameter(k5, 3);
  CHECK(rep.srad == Distance::of(2));
  CHECK(rep.sdiam == Distance::of(2));
  CHECK(rep.diametral_set == TerminalSet({0, 1, 2}));
}

TEST_CASE("eccentricity reports carry a valid witness") {
  const Graph g = random_connected(9, 77);
  for (int k = 2; k <= 5; ++k) {
    for (Vertex v = 0; v < g.vertex_count(); v += 3) {
      const auto rep = k_eccentricity(g, v, k);
      CHECK(rep.witness.size() == k);
      CHECK(rep.witness.contains(v));
      CHECK(steiner_distance(g, rep.witness).cost == rep.value);
      CHECK(rep.value.value() == ecc_oracle(g, v, k));
    }
  }
}

TEST_CASE("monotonicity of e_k in k") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_connected(8, 500 + seed);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (int k = 2; k + 1 <= g.vertex_count(); ++k)
        CHECK(k_eccentricity(g, v, k).value.value() <=
              k_eccentricity(g, v, k + 1).value.value());
  }
}

TEST_CASE("srad <= sdiam and parallel sweeps are scheduler independent") {
  const Graph g = random_connected(10, 31);
  SweepOptions one;
  one.threads = 1;
  SweepOptions four;
  four.threads = 4;
  for (int k = 2; k <= 5; ++k) {
    const auto a = steiner_radius_diameter(g, k, one);
    const auto b = steiner_radius_diameter(g, k, four);
    CHECK(a.srad.value() <= a.sdiam.value());
    CHECK(a.srad == b.srad);
    CHECK(a.sdiam == b.sdiam);
    CHECK(a.center_vertices == b.center_vertices);
    CHECK(a.diametral_set == b.diametral_set);
    CHECK(a.ecc == b.ecc);
  }
}

TEST_CASE("sweeps reject bad inputs and oversized jobs") {
  const Graph p3 = path_graph(3);
  CHECK_THROWS_AS(steiner_radius_diameter(p3, 1), Error);
  CHECK_THROWS_AS(steiner_radius_diameter(p3, 4), Error);
  CHECK_THROWS_AS(steiner_radius_diameter(Graph::from_edge_list(3, {{0, 1}}), 2), Error);

  SweepOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(steiner_radius_diameter(p3, 2, tiny), BudgetError);
  CHECK_THROWS_AS(k_eccentricity(p3, 0, 2, tiny), BudgetError);
}
