#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

/// A hop count that may be infinite. Disconnected queries yield an explicit
/// unreachable value instead of a sentinel integer.
class Distance {
 public:
  static Distance of(std::int64_t v) { return Distance(v); }
  static Distance unreachable() { return Distance(); }

  bool is_unreachable() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  std::int64_t value() const {
    if (!value_) throw Error("Distance: value() on unreachable");
    return *value_;
  }

  friend bool operator==(const Distance& a, const Distance& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Distance& a, const Distance& b) { return !(a == b); }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

 private:
  Distance() = default;
  explicit Distance(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

/// Immutable simple undirected graph on dense vertex indices 0..n-1 with an
/// optional injective label <-> index map. Adjacency lists are sorted and
/// symmetric. All operations are pure queries; constructors return fresh
/// values, so a Graph can be shared freely across threads.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, const std::vector<Edge>& edges,
                              const std::map<std::string, Vertex>& labels = {}) {
    if (n < 0) throw Error("from_edge_list: negative vertex count");
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
      if (u == v) throw Error("from_edge_list: self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error("from_edge_list: edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") out of range for n=" + std::to_string(n));
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    Graph g;
    g.adj_ = std::move(adj);
    g.set_labels(labels);
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const {
    std::size_t deg = 0;
    for (const auto& nb : adj_) deg += nb.size();
    return static_cast<int>(deg / 2);
  }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges normalized u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // -- labels (presentation layer only) --

  bool has_label(Vertex v) const { return v >= 0 && v < vertex_count() && !names_[v].empty(); }
  const std::string& label(Vertex v) const {
    check_vertex(v);
    return names_[v];
  }
  std::optional<Vertex> find_label(const std::string& name) const {
    const auto it = label_to_vertex_.find(name);
    if (it == label_to_vertex_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<std::string, Vertex>& labels() const { return label_to_vertex_; }

  /// Label if present, else the decimal index.
  std::string display(Vertex v) const {
    check_vertex(v);
    return names_[v].empty() ? std::to_string(v) : names_[v];
  }

  /// Resolves a label or a decimal index. Labels win when both would parse.
  Vertex resolve(const std::string& token) const {
    if (const auto v = find_label(token)) return *v;
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used == token.size() && v >= 0 && v < vertex_count()) return v;
    } catch (const std::exception&) {
    }
    throw Error("unknown vertex '" + token + "'");
  }

  // -- distances --

  /// All BFS distances from v; result[u] = d(v,u).
  std::vector<Distance> bfs_distances(Vertex v) const {
    const auto raw = bfs_raw(v);
    std::vector<Distance> out;
    out.reserve(raw.size());
    for (const int d : raw)
      out.push_back(d < 0 ? Distance::unreachable() : Distance::of(d));
    return out;
  }

  Distance distance(Vertex u, Vertex v) const {
    const auto raw = bfs_raw(u);
    check_vertex(v);
    return raw[v] < 0 ? Distance::unreachable() : Distance::of(raw[v]);
  }

  /// BFS distances as plain ints with -1 for unreachable (internal workhorse).
  std::vector<int> bfs_raw(Vertex v) const {
    check_vertex(v);
    std::vector<int> dist(vertex_count(), -1);
    std::queue<Vertex> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (const Vertex y : adj_[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    return dist;
  }

  Distance eccentricity(Vertex v) const {
    const auto dist = bfs_raw(v);
    int worst = 0;
    for (const int d : dist) {
      if (d < 0) return Distance::unreachable();
      worst = std::max(worst, d);
    }
    return Distance::of(worst);
  }

  Distance radius() const { return ecc_extreme(true); }
  Distance diameter() const { return ecc_extreme(false); }

  /// Vertices of minimum eccentricity. For a disconnected graph every
  /// eccentricity is unreachable, so the whole vertex set comes back.
  std::vector<Vertex> center() const {
    if (vertex_count() == 0) throw Error("center: empty graph");
    const Distance rad = radius();
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (eccentricity(v) == rad) out.push_back(v);
    return out;
  }

  bool is_connected() const {
    if (vertex_count() == 0) return true;
    const auto dist = bfs_raw(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  }

  bool is_tree() const {
    return is_connected() && edge_count() == vertex_count() - 1;
  }

  // -- construction helpers --

  /// Replaces edge uv by a path u - w_1 - ... - w_t - v through t fresh
  /// vertices appended at indices n..n+t-1.
  Graph subdivide_edge(Vertex u, Vertex v, int t) const {
    if (!has_edge(u, v)) throw Error("subdivide_edge: (" + std::to_string(u) + "," +
                                     std::to_string(v) + ") is not an edge");
    if (t < 1) throw Error("subdivide_edge: t must be >= 1");
    const int n = vertex_count();
    std::vector<Edge> es;
    for (const auto& e : edges())
      if (e != Edge{std::min(u, v), std::max(u, v)}) es.push_back(e);
    Vertex prev = u;
    for (int i = 0; i < t; ++i) {
      es.emplace_back(std::min(prev, n + i), std::max(prev, n + i));
      prev = n + i;
    }
    es.emplace_back(std::min(prev, v), std::max(prev, v));
    Graph g = from_edge_list(n + t, es);
    g.set_labels(label_to_vertex_);
    return g;
  }

  struct Induced;

  /// Subgraph induced by W (new indices follow the sorted order of W).
  Induced induced_subgraph(const std::vector<Vertex>& w) const;

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
      throw Error("vertex index " + std::to_string(v) + " out of range (n=" +
                  std::to_string(vertex_count()) + ")");
  }

 private:
  void set_labels(const std::map<std::string, Vertex>& labels) {
    names_.assign(adj_.size(), "");
    label_to_vertex_.clear();
    for (const auto& [name, v] : labels) {
      check_vertex(v);
      if (name.empty() || name.find_first_of(" \t\n\r") != std::string::npos)
        throw Error("label '" + name + "' is empty or contains whitespace");
      if (!names_[v].empty())
        throw Error("vertex " + std::to_string(v) + " labeled twice");
      names_[v] = name;
      label_to_vertex_[name] = v;
    }
  }

  Distance ecc_extreme(bool want_min) const {
    if (vertex_count() == 0) throw Error("radius/diameter: empty graph");
    std::optional<std::int64_t> best;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      const Distance e = eccentricity(v);
      if (e.is_unreachable()) return Distance::unreachable();
      if (!best || (want_min ? e.value() < *best : e.value() > *best)) best = e.value();
    }
    return Distance::of(*best);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> names_;            // "" when unlabeled
  std::map<std::string, Vertex> label_to_vertex_;
};

struct Graph::Induced {
  Graph graph;
  std::vector<Vertex> original_of;  // new index -> original index
};

inline Graph::Induced Graph::induced_subgraph(const std::vector<Vertex>& w) const {
  if (w.empty()) throw Error("induced_subgraph: empty vertex set");
  std::vector<Vertex> keep = w;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> new_index(vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    new_index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  std::map<std::string, Vertex> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const Vertex y : adj_[keep[i]])
      if (new_index[y] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), new_index[y]);
    if (!names_[keep[i]].empty()) labels[names_[keep[i]]] = static_cast<int>(i);
  }
  return Induced{from_edge_list(static_cast<int>(keep.size()), es, labels), std::move(keep)};
}

/// Nonempty sorted set of distinct vertex indices.
class TerminalSet {
 public:
  TerminalSet() = default;
  explicit TerminalSet(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
    if (vs_.empty()) throw Error("TerminalSet: empty");
  }

  void validate(const Graph& g) const {
    for (const Vertex v : vs_) g.check_vertex(v);
  }

  int size() const { return static_cast<int>(vs_.size()); }
  const std::vector<Vertex>& vertices() const { return vs_; }
  bool contains(Vertex v) const { return std::binary_search(vs_.begin(), vs_.end(), v); }

  TerminalSet with(Vertex v) const {
    std::vector<Vertex> c = vs_;
    c.push_back(v);
    return TerminalSet(std::move(c));
  }
  TerminalSet without(Vertex v) const {
    std::vector<Vertex> c;
    for (const Vertex x : vs_)
      if (x != v) c.push_back(x);
    return TerminalSet(std::move(c));
  }

  friend bool operator==(const TerminalSet& a, const TerminalSet& b) { return a.vs_ == b.vs_; }
  friend bool operator<(const TerminalSet& a, const TerminalSet& b) { return a.vs_ < b.vs_; }

  std::string str(const Graph& g) const {
    std::string out;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
      if (i) out += ",";
      out += g.display(vs_[i]);
    }
    return out;
  }

 private:
  std::vector<Vertex> vs_;
};

}  // namespace steiner
