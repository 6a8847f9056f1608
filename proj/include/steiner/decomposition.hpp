#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "steiner/eccentricity.hpp"
#include "steiner/steiner_tree.hpp"

namespace steiner {

/// A tree living on a subset of a graph's vertices (edge list + adjacency).
class Tree {
 public:
  Tree() = default;
  Tree(std::vector<Edge> edges, std::vector<Vertex> vertices)
      : edges_(std::move(edges)), vertices_(std::move(vertices)) {
    std::sort(edges_.begin(), edges_.end());
    std::sort(vertices_.begin(), vertices_.end());
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
    if (edges_.size() + 1 != vertices_.size() && !(edges_.empty() && vertices_.size() <= 1))
      throw Error("Tree: edge/vertex count mismatch (not a tree)");
  }
  static Tree from_result(const SteinerResult& r) { return Tree(r.tree_edges, r.tree_vertices); }

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  int degree(Vertex v) const {
    const auto it = adj_.find(v);
    return it == adj_.end() ? 0 : static_cast<int>(it->second.size());
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    static const std::vector<Vertex> none;
    const auto it = adj_.find(v);
    return it == adj_.end() ? none : it->second;
  }
  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (const Vertex v : vertices_)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }
  int max_degree() const {
    int out = 0;
    for (const Vertex v : vertices_) out = std::max(out, degree(v));
    return out;
  }

  /// BFS distances within the tree from `from` (-1 for vertices not in it).
  std::map<Vertex, int> distances_from(Vertex from) const {
    if (!contains(from)) throw Error("Tree: vertex " + std::to_string(from) + " not in tree");
    std::map<Vertex, int> dist;
    dist[from] = 0;
    std::queue<Vertex> q;
    q.push(from);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (const Vertex y : neighbors(x)) {
        if (!dist.count(y)) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    return dist;
  }

  int distance(Vertex a, Vertex b) const {
    const auto dist = distances_from(a);
    const auto it = dist.find(b);
    if (it == dist.end()) throw Error("Tree: vertices not connected in tree");
    return it->second;
  }

  /// Unique path a..b inclusive.
  std::vector<Vertex> path(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) throw Error("Tree: path endpoint not in tree");
    std::map<Vertex, Vertex> parent;
    parent[a] = a;
    std::queue<Vertex> q;
    q.push(a);
    while (!q.empty() && !parent.count(b)) {
      const Vertex x = q.front();
      q.pop();
      for (const Vertex y : neighbors(x)) {
        if (!parent.count(y)) {
          parent[y] = x;
          q.push(y);
        }
      }
    }
    std::vector<Vertex> out;
    for (Vertex v = b;; v = parent.at(v)) {
      out.push_back(v);
      if (v == a) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::vector<Vertex>> adj_;
};

/// The unique minimal subtree of T containing X: strip leaves outside X
/// until every leaf lies in X.
inline Tree spanning_subtree(const Tree& t, const std::vector<Vertex>& x) {
  if (x.empty()) throw Error("spanning_subtree: empty target set");
  std::set<Vertex> keep_targets(x.begin(), x.end());
  for (const Vertex v : x)
    if (!t.contains(v))
      throw Error("spanning_subtree: vertex " + std::to_string(v) + " not in tree");

  std::map<Vertex, int> deg;
  std::set<Vertex> alive(t.vertices().begin(), t.vertices().end());
  for (const Vertex v : t.vertices()) deg[v] = t.degree(v);
  std::queue<Vertex> strip;
  for (const Vertex v : t.vertices())
    if (deg[v] <= 1 && !keep_targets.count(v)) strip.push(v);
  while (!strip.empty()) {
    const Vertex v = strip.front();
    strip.pop();
    if (!alive.count(v) || deg[v] > 1 || keep_targets.count(v)) continue;
    alive.erase(v);
    for (const Vertex u : t.neighbors(v)) {
      if (alive.count(u) && --deg[u] == 1 && !keep_targets.count(u)) strip.push(u);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges())
    if (alive.count(u) && alive.count(v)) edges.emplace_back(u, v);
  return Tree(std::move(edges), std::vector<Vertex>(alive.begin(), alive.end()));
}

/// The per-index apparatus built from a diametral-style set D and a center
/// vertex v0: for each i, the substituted terminal set D_i = (D\{v_i}) u {v0},
/// its deterministic Steiner tree T_i, the pruned subtree T_i' spanning
/// D_i\{v0}, and the gap ell_i = |T_i| - |T_i'|.
struct DecompositionEntry {
  Vertex dropped = -1;  // v_i
  TerminalSet d_i;
  SteinerResult t_i;
  Tree t_i_tree;
  Tree t_i_prime;
  int ell = 0;
};

struct Decomposition {
  TerminalSet d;
  Vertex v0 = -1;
  int k = 0;
  std::vector<DecompositionEntry> entries;  // entries[i] drops d.vertices()[i]
  std::vector<int> order;                   // indices sorted by (ell, index)

  const DecompositionEntry& ordered(int j) const { return entries[order.at(j)]; }
};

inline Decomposition decompose(const Graph& g, const TerminalSet& d, Vertex v0,
                               const SweepOptions& opts = {}) {
  if (!g.is_connected()) throw Error("decompose: graph is not connected");
  if (d.size() < 2) throw Error("decompose: |D| must be >= 2");
  d.validate(g);
  g.check_vertex(v0);

  Decomposition dec;
  dec.d = d;
  dec.v0 = v0;
  dec.k = d.size();
  for (const Vertex vi : d.vertices()) {
    DecompositionEntry e;
    e.dropped = vi;
    e.d_i = d.without(vi).with(v0);
    e.t_i = steiner_distance(g, e.d_i, opts);
    if (e.t_i.cost.is_unreachable()) throw Error("decompose: terminals not connected");
    e.t_i_tree = Tree::from_result(e.t_i);
    std::vector<Vertex> targets;
    for (const Vertex x : e.d_i.vertices())
      if (x != v0) targets.push_back(x);
    e.t_i_prime = spanning_subtree(e.t_i_tree, targets);
    e.ell = e.t_i_tree.edge_count() - e.t_i_prime.edge_count();
    dec.entries.push_back(std::move(e));
  }
  dec.order.resize(dec.entries.size());
  for (std::size_t i = 0; i < dec.order.size(); ++i) dec.order[i] = static_cast<int>(i);
  std::stable_sort(dec.order.begin(), dec.order.end(),
                   [&](int a, int b) { return dec.entries[a].ell < dec.entries[b].ell; });
  return dec;
}

/// Shape of a Steiner tree in the four-terminal analysis: a bare path, a
/// three-leaf spider with segment lengths a+b+c+d = |T|, a four-leaf tree
/// with v0 a leaf and segments ell+a+b+c+d = |T|, or anything else.
struct TreeShape {
  enum class Kind { Path, Spider3, FourLeaf, Other };
  Kind kind = Kind::Other;
  long a = 0, b = 0, c = 0, d = 0, ell = 0;
  Vertex s = -1, t = -1;               // branch vertices (s == t allowed, d == 0)
  Vertex u1 = -1, u2 = -1, u3 = -1;    // leaf labels
  Vertex u4 = -1;                      // Spider3: the interior terminal

  std::string kind_str() const {
    switch (kind) {
      case Kind::Path: return "Path";
      case Kind::Spider3: return "Spider3";
      case Kind::FourLeaf: return "FourLeaf";
      default: return "Other";
    }
  }
};

namespace detail {

/// Walks from leaf along the path until the first vertex of degree >= 3.
inline Vertex branch_vertex_of(const Tree& t, Vertex leaf) {
  Vertex prev = -1, cur = leaf;
  while (t.degree(cur) <= 2) {
    Vertex nxt = -1;
    for (const Vertex u : t.neighbors(cur))
      if (u != prev) nxt = u;
    if (nxt < 0) return cur;  // whole tree is a path
    prev = cur;
    cur = nxt;
  }
  return cur;
}

}  // namespace detail

inline TreeShape classify_shape(const Tree& t, const TerminalSet& terminals, Vertex v0) {
  if (!t.contains(v0)) throw Error("classify_shape: v0 not in tree");
  for (const Vertex x : terminals.vertices())
    if (!t.contains(x)) throw Error("classify_shape: terminal not in tree");

  TreeShape shape;
  if (t.max_degree() <= 2) {
    shape.kind = TreeShape::Kind::Path;
    return shape;
  }
  std::vector<Vertex> leaves = t.leaves();
  const bool leaves_are_terminals =
      std::all_of(leaves.begin(), leaves.end(), [&](Vertex l) { return terminals.contains(l); });

  if (leaves.size() == 3 && leaves_are_terminals && terminals.size() == 4) {
    // Exactly one terminal is interior (possibly the branch vertex itself).
    std::vector<Vertex> interior;
    for (const Vertex x : terminals.vertices())
      if (!std::binary_search(leaves.begin(), leaves.end(), x)) interior.push_back(x);
    if (interior.size() != 1) return shape;
    const Vertex w = interior[0];
    const Vertex s = detail::branch_vertex_of(t, leaves[0]);
    // Pick u3 = the leaf whose arm contains w; ties (w == s) go to the
    // smallest leaf index.
    Vertex u3 = -1;
    if (w == s) {
      u3 = leaves[0];
    } else {
      for (const Vertex l : leaves) {
        const auto arm = t.path(s, l);
        if (std::find(arm.begin(), arm.end(), w) != arm.end()) {
          u3 = l;
          break;
        }
      }
      if (u3 < 0) return shape;
    }
    std::vector<Vertex> rest;
    for (const Vertex l : leaves)
      if (l != u3) rest.push_back(l);
    shape.kind = TreeShape::Kind::Spider3;
    shape.s = s;
    shape.u1 = rest[0];
    shape.u2 = rest[1];
    shape.u3 = u3;
    shape.u4 = w;
    shape.a = t.distance(shape.u1, s);
    shape.b = t.distance(shape.u2, s);
    shape.c = t.distance(u3, w);
    shape.d = t.distance(w, s);
    return shape;
  }

  if (leaves.size() == 4 && leaves_are_terminals && terminals.size() == 4 &&
      std::binary_search(leaves.begin(), leaves.end(), v0)) {
    const Vertex s = detail::branch_vertex_of(t, v0);
    // u3 = the non-v0 leaf whose branch vertex is s; the remaining two in
    // index order hang off t (== s when the tree is a 4-star).
    std::vector<Vertex> others;
    for (const Vertex l : leaves)
      if (l != v0) others.push_back(l);
    std::vector<Vertex> at_s, at_t;
    Vertex tv = -1;
    for (const Vertex l : others) {
      const Vertex b = detail::branch_vertex_of(t, l);
      if (b == s)
        at_s.push_back(l);
      else {
        at_t.push_back(l);
        tv = b;
      }
    }
    if (t.degree(s) == 4 && at_s.size() == 3) {
      shape.kind = TreeShape::Kind::FourLeaf;
      shape.s = shape.t = s;
      shape.u3 = at_s[0];
      shape.u1 = at_s[1];
      shape.u2 = at_s[2];
      shape.d = 0;
    } else if (at_s.size() == 1 && at_t.size() == 2) {
      shape.kind = TreeShape::Kind::FourLeaf;
      shape.s = s;
      shape.t = tv;
      shape.u3 = at_s[0];
      shape.u1 = at_t[0];
      shape.u2 = at_t[1];
      shape.d = t.distance(s, tv);
    } else {
      return shape;
    }
    shape.ell = t.distance(v0, s);
    shape.a = t.distance(shape.u1, shape.t);
    shape.b = t.distance(shape.u2, shape.t);
    shape.c = t.distance(shape.u3, shape.s);
    return shape;
  }
  return shape;
}

inline TreeShape classify_shape(const SteinerResult& r, const TerminalSet& terminals, Vertex v0) {
  return classify_shape(Tree::from_result(r), terminals, v0);
}

/// Drops the u3 branch of a FourLeaf tree (the u3..s path except s itself),
/// leaving |T| - c edges and keeping v0, u1, u2, s, t.
inline Tree prune_to_T_double_prime(const Tree& t, const TreeShape& shape) {
  if (shape.kind != TreeShape::Kind::FourLeaf)
    throw Error("prune_to_T_double_prime: shape is not FourLeaf");
  if (shape.u3 == shape.s) return t;  // empty branch
  const auto arm = t.path(shape.s, shape.u3);
  std::set<Vertex> drop(arm.begin() + 1, arm.end());
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges())
    if (!drop.count(u) && !drop.count(v)) edges.emplace_back(u, v);
  std::vector<Vertex> vertices;
  for (const Vertex v : t.vertices())
    if (!drop.count(v)) vertices.push_back(v);
  return Tree(std::move(edges), std::move(vertices));
}

/// The split point of the ell-minimal tree: x is the vertex of T_1' closest
/// to v0 within T_1. InTerminals when x is one of the non-v0 terminals,
/// Branching otherwise (then x has >= 2 children under v0, possibly x = v0).
struct SplitAtX {
  Vertex x = -1;
  enum class Case { InTerminals, Branching } where = Case::Branching;
};

inline SplitAtX locate_x(const Decomposition& dec) {
  const DecompositionEntry& e1 = dec.ordered(0);
  const auto dist = e1.t_i_tree.distances_from(dec.v0);
  SplitAtX out;
  int best = detail::kInf;
  for (const Vertex v : e1.t_i_prime.vertices()) {
    const int d = dist.at(v);
    if (d < best || (d == best && v < out.x)) {
      best = d;
      out.x = v;
    }
  }
  const bool in_terms = e1.d_i.contains(out.x) && out.x != dec.v0;
  out.where = in_terms ? SplitAtX::Case::InTerminals : SplitAtX::Case::Branching;
  return out;
}

}  // namespace steiner
