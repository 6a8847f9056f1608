#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

/// A generated graph plus its named construction vertices.
struct FamilyHandle {
  Graph graph;
  std::map<std::string, Vertex> roles;
  int k = 0;
  int m = 0;

  Vertex role(const std::string& name) const {
    const auto it = roles.find(name);
    if (it == roles.end()) throw Error("no role named '" + name + "'");
    return it->second;
  }
};

/// The tightness family: k independent vertices d_1..d_k, split into
/// D_1 = {d_1..d_m} and D_2 = {d_m..d_k} with m = ceil((k+1)/2); one vertex
/// a_i adjacent to D_1 \ {d_i} for each i <= m, one vertex b_j adjacent to
/// D_2 \ {d_j} for each j >= m, and a hub r adjacent to all a's and b's.
/// Satisfies sdiam_k = k+3 and srad_k = k+1, meeting the (k+3)/(k+1) ratio
/// bound with equality.
inline FamilyHandle build_Gk(int k) {
  if (k < 5) throw Error("build_Gk: defined for k >= 5, got k=" + std::to_string(k));
  const int m = (k + 2) / 2;  // ceil((k+1)/2)
  FamilyHandle fam;
  fam.k = k;
  fam.m = m;

  // indices: d_i -> i-1, a_i -> k-1+i, b_j -> k+j (j = m..k), r last
  const auto d_idx = [&](int i) { return i - 1; };
  const auto a_idx = [&](int i) { return k - 1 + i; };
  const auto b_idx = [&](int j) { return k + m + (j - m); };
  const int r_idx = k + m + (k - m + 1);
  const int n = r_idx + 1;

  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j)
      if (j != i) edges.emplace_back(d_idx(j), a_idx(i));
    edges.emplace_back(a_idx(i), r_idx);
  }
  for (int j = m; j <= k; ++j) {
    for (int l = m; l <= k; ++l)
      if (l != j) edges.emplace_back(d_idx(l), b_idx(j));
    edges.emplace_back(b_idx(j), r_idx);
  }

  std::map<std::string, Vertex> labels;
  for (int i = 1; i <= k; ++i) labels["d" + std::to_string(i)] = d_idx(i);
  for (int i = 1; i <= m; ++i) labels["a" + std::to_string(i)] = a_idx(i);
  for (int j = m; j <= k; ++j) labels["b" + std::to_string(j)] = b_idx(j);
  labels["r"] = r_idx;

  fam.graph = Graph::from_edge_list(n, edges, labels);
  fam.roles = labels;
  return fam;
}

/// The 70-vertex counterexample graph: K_{4,4} on U x V minus the matching
/// {u1v4, u2v3, u3v2, u4v1}, a new vertex v0 joined to every u_i, the edge
/// v0u4 subdivided once, and every surviving u-v edge subdivided five times.
/// Resulting distances: d(v0,u_i) = 1 for i <= 3, d(v0,u4) = 2, and
/// d(u_i,v_j) = 6 for every surviving pair.
inline FamilyHandle build_H() {
  // indices: v0 = 0, u1..u4 = 1..4, v1..v4 = 5..8
  const auto u_idx = [](int i) { return i; };
  const auto v_idx = [](int j) { return 4 + j; };

  std::vector<Edge> base;
  for (int i = 1; i <= 4; ++i) base.emplace_back(0, u_idx(i));
  std::vector<Edge> uv;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != 5 - j) uv.emplace_back(u_idx(i), v_idx(j));
  base.insert(base.end(), uv.begin(), uv.end());

  std::map<std::string, Vertex> labels{{"v0", 0}};
  for (int i = 1; i <= 4; ++i) labels["u" + std::to_string(i)] = u_idx(i);
  for (int j = 1; j <= 4; ++j) labels["v" + std::to_string(j)] = v_idx(j);

  Graph g = Graph::from_edge_list(9, base, labels);
  g = g.subdivide_edge(0, u_idx(4), 1);
  for (const auto& [a, b] : uv) g = g.subdivide_edge(a, b, 5);

  FamilyHandle fam;
  fam.k = 4;
  fam.graph = std::move(g);
  fam.roles = labels;
  return fam;
}

/// Seeded random graph ensembles for the scan harness.
struct EnsembleConfig {
  enum class Kind { RandomConnectedGnp, RandomTree };
  Kind kind = Kind::RandomTree;
  int n = 2;
  Rational p{1, 2};          // Gnp only, 0 < p < 1
  int max_rejections = 1000;  // Gnp connectivity retries
  std::uint64_t seed = 0;
};

namespace detail {

/// Unbiased uniform draw in [0, n) by rejection; deterministic for a given
/// engine state.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

/// Decodes a code word of length n-2 over [0,n) into its labeled tree.
inline std::vector<Edge> prufer_decode(const std::vector<int>& code, int n) {
  std::vector<int> deg(n, 1);
  for (const int c : code) ++deg[c];
  std::vector<Edge> edges;
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (const int c : code) {
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--deg[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return edges;
}

}  // namespace detail

inline Graph random_graph(const EnsembleConfig& cfg) {
  if (cfg.n < 2) throw Error("random_graph: n must be >= 2");
  std::mt19937_64 rng(cfg.seed);

  if (cfg.kind == EnsembleConfig::Kind::RandomTree) {
    if (cfg.n == 2) return Graph::from_edge_list(2, {{0, 1}});
    std::vector<int> code(cfg.n - 2);
    for (int& c : code) c = static_cast<int>(detail::uniform_below(rng, cfg.n));
    return Graph::from_edge_list(cfg.n, detail::prufer_decode(code, cfg.n));
  }

  if (cfg.p.num() <= 0 || cfg.p >= Rational(1, 1))
    throw Error("random_graph: p must satisfy 0 < p < 1");
  // Edge kept iff r/2^64 < p, decided exactly in 128-bit.
  const auto keep = [&](std::uint64_t r) {
    return static_cast<unsigned __int128>(r) * static_cast<unsigned __int128>(cfg.p.den()) <
           (static_cast<unsigned __int128>(cfg.p.num()) << 64);
  };
  for (int attempt = 0; attempt <= cfg.max_rejections; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < cfg.n; ++u)
      for (int v = u + 1; v < cfg.n; ++v)
        if (keep(rng())) edges.emplace_back(u, v);
    Graph g = Graph::from_edge_list(cfg.n, edges);
    if (g.is_connected()) return g;
  }
  throw Error("random_graph: no connected sample within " +
              std::to_string(cfg.max_rejections) + " rejections");
}

}  // namespace steiner
