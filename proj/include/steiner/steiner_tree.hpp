#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "steiner/budget.hpp"
#include "steiner/graph.hpp"

namespace steiner {

/// A Steiner distance together with a witness tree. For a finite cost the
/// witness is a minimum Steiner tree: connected, acyclic, containing every
/// terminal, every leaf a terminal, edge count equal to the cost.
struct SteinerResult {
  Distance cost = Distance::unreachable();
  std::vector<Edge> tree_edges;      // normalized u < v, sorted
  std::vector<Vertex> tree_vertices; // sorted
};

namespace detail {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Subset dynamic program over terminal subsets (Dreyfus-Wagner shape).
///
/// State: dp[X][v] = minimum edge count of a tree containing terminal
/// subset X and vertex v, for X over the terminals minus a fixed root.
/// Masks are filled in increasing numeric order; each non-singleton mask is
/// seeded by submask merges dp[Y][v] + dp[X\Y][v] and then closed under
/// shortest-path relaxation (bucket queue; all edges have weight 1). The
/// answer is dp[full][root].
///
/// The solver owns its scratch, so distinct instances may run fully in
/// parallel over a shared Graph. For sweeps, a precomputed all-pairs
/// distance table can be shared to avoid re-running the base BFS.
class SubsetDpSolver {
 public:
  explicit SubsetDpSolver(const Graph& g,
                          const std::vector<std::vector<int>>* all_pairs = nullptr)
      : g_(g), all_pairs_(all_pairs), n_(g.vertex_count()) {}

  /// Exact Steiner distance of `terminals` (sorted, distinct); kInf when the
  /// terminals span more than one component. The dp table is left populated
  /// for traceback.
  int cost(const std::vector<Vertex>& terminals) {
    terms_ = terminals;
    q_ = static_cast<int>(terms_.size());
    if (q_ == 0) throw Error("steiner_distance: empty terminal set");
    for (const Vertex t : terms_) g_.check_vertex(t);
    if (q_ == 1) return 0;

    root_ = terms_.back();
    base_ = terms_;
    base_.pop_back();
    const int b = q_ - 1;
    full_ = (1 << b) - 1;
    dp_.assign(static_cast<std::size_t>(full_ + 1) * n_, kInf);

    for (int i = 0; i < b; ++i) {
      int* row = dp_row(1 << i);
      if (all_pairs_) {
        const auto& src = (*all_pairs_)[base_[i]];
        for (int v = 0; v < n_; ++v) row[v] = src[v] < 0 ? kInf : src[v];
      } else {
        const auto src = g_.bfs_raw(base_[i]);
        for (int v = 0; v < n_; ++v) row[v] = src[v] < 0 ? kInf : src[v];
      }
    }

    for (int mask = 1; mask <= full_; ++mask) {
      if ((mask & (mask - 1)) == 0) continue;  // singleton: BFS row is already closed
      int* row = dp_row(mask);
      const int low = mask & -mask;
      const int rest = mask ^ low;
      for (int t = rest;; t = (t - 1) & rest) {
        const int s = t | low;
        if (s != mask) {
          const int* a = dp_row(s);
          const int* b2 = dp_row(mask ^ s);
          for (int v = 0; v < n_; ++v) {
            if (a[v] < kInf && b2[v] < kInf && a[v] + b2[v] < row[v]) row[v] = a[v] + b2[v];
          }
        }
        if (t == 0) break;
      }
      relax(row);
    }
    return dp_row(full_)[root_];
  }

  /// Deterministic witness for the last cost() call. Tie-break: at each
  /// state prefer an edge step to the smallest tight neighbor, then the
  /// numerically smallest tight submask split.
  SteinerResult traceback() const {
    SteinerResult out;
    if (q_ == 1) {
      out.cost = Distance::of(0);
      out.tree_vertices = terms_;
      return out;
    }
    const int total = dp_row(full_)[root_];
    if (total >= kInf) return out;  // unreachable: empty tree fields

    std::set<Edge> edges;
    std::vector<std::pair<int, Vertex>> stack{{full_, root_}};
    while (!stack.empty()) {
      auto [mask, v] = stack.back();
      stack.pop_back();
      const int* row = dp_row(mask);
      while (true) {
        const int d = row[v];
        if (d == 0) break;  // all terminals of mask sit at v
        Vertex step = -1;
        for (const Vertex u : g_.neighbors(v)) {
          if (row[u] + 1 == d) {
            step = u;
            break;
          }
        }
        if (step >= 0) {
          edges.insert(norm_edge(step, v));
          v = step;
          continue;
        }
        const int split = tight_split(mask, v);
        assert(split > 0);
        stack.emplace_back(split, v);
        stack.emplace_back(mask ^ split, v);
        break;
      }
    }

    out.cost = Distance::of(total);
    out.tree_edges.assign(edges.begin(), edges.end());
    std::set<Vertex> vs(terms_.begin(), terms_.end());
    for (const auto& [a, b] : out.tree_edges) {
      vs.insert(a);
      vs.insert(b);
    }
    out.tree_vertices.assign(vs.begin(), vs.end());
    assert(static_cast<int>(out.tree_edges.size()) == total);
    return out;
  }

  const std::vector<Vertex>& base_terminals() const { return base_; }
  Vertex root() const { return root_; }
  int full_mask() const { return full_; }
  const int* dp_row(int mask) const { return dp_.data() + static_cast<std::size_t>(mask) * n_; }
  int* dp_row(int mask) { return dp_.data() + static_cast<std::size_t>(mask) * n_; }

  /// Smallest submask Y of `mask` (containing its low bit) with
  /// dp[Y][v] + dp[mask^Y][v] = dp[mask][v]; 0 if none.
  int tight_split(int mask, Vertex v) const {
    const int low = mask & -mask;
    const int d = dp_row(mask)[v];
    for (int s = low; s < mask; ++s) {
      if ((s & mask) != s || !(s & low)) continue;
      const int a = dp_row(s)[v];
      const int b = dp_row(mask ^ s)[v];
      if (a < kInf && b < kInf && a + b == d) return s;
    }
    return 0;
  }

 private:
  static Edge norm_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  /// Closes `vals` under unit-weight shortest paths. Finite Steiner values
  /// never exceed n-1, so entries above that are reset to kInf afterwards.
  void relax(int* vals) {
    if (static_cast<int>(buckets_.size()) < n_) buckets_.resize(n_);
    for (auto& b : buckets_) b.clear();
    const int maxd = n_ - 1;
    for (int v = 0; v < n_; ++v)
      if (vals[v] <= maxd) buckets_[vals[v]].push_back(v);
    for (int d = 0; d <= maxd; ++d) {
      auto& bucket = buckets_[d];
      for (std::size_t i = 0; i < bucket.size(); ++i) {
        const Vertex v = bucket[i];
        if (vals[v] != d) continue;
        if (d + 1 > maxd) continue;
        for (const Vertex u : g_.neighbors(v)) {
          if (d + 1 < vals[u]) {
            vals[u] = d + 1;
            buckets_[d + 1].push_back(u);
          }
        }
      }
    }
    for (int v = 0; v < n_; ++v)
      if (vals[v] > maxd) vals[v] = kInf;
  }

  const Graph& g_;
  const std::vector<std::vector<int>>* all_pairs_;
  int n_;
  int q_ = 0;
  Vertex root_ = -1;
  int full_ = 0;
  std::vector<Vertex> terms_;
  std::vector<Vertex> base_;
  std::vector<int> dp_;
  std::vector<std::vector<Vertex>> buckets_;
};

inline std::vector<std::vector<int>> all_pairs_bfs(const Graph& g) {
  std::vector<std::vector<int>> table(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) table[v] = g.bfs_raw(v);
  return table;
}

}  // namespace detail

/// Exact Steiner distance of s in g with a deterministic witness tree.
inline SteinerResult steiner_distance(const Graph& g, const TerminalSet& s,
                                      const SweepOptions& opts = {}) {
  s.validate(g);
  check_budget(dp_call_units(g.vertex_count(), g.edge_count(), s.size()), opts.budget,
               "steiner_distance");
  detail::SubsetDpSolver solver(g);
  solver.cost(s.vertices());
  return solver.traceback();
}

/// Independent oracle: min |W|-1 over vertex sets W containing s whose
/// induced subgraph is connected. Exponential in n; refuses n > cap.
inline Distance steiner_distance_bruteforce(const Graph& g, const TerminalSet& s, int cap = 16) {
  s.validate(g);
  const int n = g.vertex_count();
  if (n > cap)
    throw Error("steiner_distance_bruteforce: n=" + std::to_string(n) + " exceeds cap " +
                std::to_string(cap));
  std::uint32_t smask = 0;
  for (const Vertex v : s.vertices()) smask |= 1u << v;
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

  int best = detail::kInf;
  for (std::uint32_t w = smask;; w = (w + 1) | smask) {
    const int size = __builtin_popcount(w);
    if (size - 1 < best) {
      // connectivity of the subgraph induced by w
      std::uint32_t seen = w & (~w + 1);  // lowest bit
      std::uint32_t frontier = seen;
      while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
          const int v = __builtin_ctz(f);
          f &= f - 1;
          for (const Vertex u : g.neighbors(v))
            if ((w >> u) & 1u) next |= 1u << u;
        }
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen == w) best = size - 1;
    }
    if (w == all) break;
  }
  return best >= detail::kInf ? Distance::unreachable() : Distance::of(best);
}

/// Up to `limit` distinct minimum Steiner trees of s, in lexicographic order
/// of their sorted edge lists. The list is exhaustive whenever the true
/// number of minimum trees is at most `limit`: the dp traceback is branched
/// over every tight choice, and every minimum tree decomposes into tight
/// choices (a suboptimal piece inside an optimal tree could be swapped for
/// an optimal one, lowering the total).
inline std::vector<SteinerResult> enumerate_min_steiner_trees(const Graph& g, const TerminalSet& s,
                                                              int limit,
                                                              const SweepOptions& opts = {}) {
  if (limit < 1) throw Error("enumerate_min_steiner_trees: limit must be >= 1");
  s.validate(g);
  check_budget(dp_call_units(g.vertex_count(), g.edge_count(), s.size()), opts.budget,
               "enumerate_min_steiner_trees");

  using EdgeList = std::vector<Edge>;
  detail::SubsetDpSolver solver(g);
  const int total = solver.cost(s.vertices());
  if (s.size() == 1) {
    SteinerResult r;
    r.cost = Distance::of(0);
    r.tree_vertices = s.vertices();
    return {r};
  }
  if (total >= detail::kInf) throw Error("enumerate_min_steiner_trees: unreachable terminal set");

  const std::size_t cap = static_cast<std::size_t>(limit);
  std::map<std::pair<int, Vertex>, std::vector<EdgeList>> memo;

  const auto norm = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };

  // Forests per state, each sorted; capped at `limit` smallest.
  const std::function<const std::vector<EdgeList>&(int, Vertex)> enumerate =
      [&](int mask, Vertex v) -> const std::vector<EdgeList>& {
    const auto key = std::make_pair(mask, v);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    const int* row = solver.dp_row(mask);
    std::set<EdgeList> out;
    if (row[v] == 0) {
      out.insert(EdgeList{});
    } else {
      for (const Vertex u : g.neighbors(v)) {
        if (row[u] + 1 != row[v]) continue;
        for (const EdgeList& sub : enumerate(mask, u)) {
          EdgeList t = sub;
          t.insert(std::lower_bound(t.begin(), t.end(), norm(u, v)), norm(u, v));
          assert(static_cast<int>(t.size()) == row[v]);
          out.insert(std::move(t));
        }
      }
      if (mask & (mask - 1)) {
        const int low = mask & -mask;
        for (int sp = low; sp < mask; ++sp) {
          if ((sp & mask) != sp || !(sp & low)) continue;
          const int a = solver.dp_row(sp)[v];
          const int b = solver.dp_row(mask ^ sp)[v];
          if (a >= detail::kInf || b >= detail::kInf || a + b != row[v]) continue;
          for (const EdgeList& ta : enumerate(sp, v)) {
            for (const EdgeList& tb : enumerate(mask ^ sp, v)) {
              EdgeList t;
              std::set_union(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(t));
              assert(static_cast<int>(t.size()) == row[v]);  // optimal pieces cannot overlap
              out.insert(std::move(t));
            }
          }
        }
      }
    }
    std::vector<EdgeList> kept;
    for (auto& t : out) {
      kept.push_back(t);
      if (kept.size() >= cap) break;
    }
    return memo.emplace(key, std::move(kept)).first->second;
  };

  std::vector<SteinerResult> results;
  for (const EdgeList& t : enumerate(solver.full_mask(), solver.root())) {
    SteinerResult r;
    r.cost = Distance::of(total);
    r.tree_edges = t;
    std::set<Vertex> vs(s.vertices().begin(), s.vertices().end());
    for (const auto& [a, b] : t) {
      vs.insert(a);
      vs.insert(b);
    }
    r.tree_vertices.assign(vs.begin(), vs.end());
    results.push_back(std::move(r));
    if (static_cast<int>(results.size()) >= limit) break;
  }
  return results;
}

}  // namespace steiner
