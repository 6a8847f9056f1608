#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "steiner/graph.hpp"

namespace steiner {

// Text format:
//   line 1:  n m
//   m lines: u v            (0-based; written with u < v, sorted)
//   then:    label <index> <string>   one per labeled vertex, by index
// Lines starting with '#' are comments. Round-trips bit-exactly modulo
// edge order normalization.

inline void write_graph(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.has_label(v)) os << "label " << v << " " << g.label(v) << "\n";
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline Graph read_graph(std::istream& is) {
  std::string line;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::map<std::string, Vertex> labels;
  int edges_seen = 0;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto at = [&] { return " at line " + std::to_string(lineno); };
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw Error("graph file: bad header (want 'n m')" + at());
      continue;
    }
    if (edges_seen < m) {
      int u, v;
      if (!(ls >> u >> v)) throw Error("graph file: bad edge line" + at());
      edges.emplace_back(u, v);
      ++edges_seen;
      continue;
    }
    std::string kw;
    ls >> kw;
    if (kw == "label") {
      int v;
      std::string name;
      if (!(ls >> v >> name)) throw Error("graph file: bad label line" + at());
      if (labels.count(name)) throw Error("graph file: duplicate label '" + name + "'" + at());
      labels[name] = v;
    } else {
      throw Error("graph file: unexpected line '" + line + "'" + at());
    }
  }
  if (n < 0) throw Error("graph file: missing header");
  if (edges_seen < m)
    throw Error("graph file: expected " + std::to_string(m) + " edges, got " +
                std::to_string(edges_seen));
  Graph g = Graph::from_edge_list(n, edges, labels);
  if (g.edge_count() != m)
    throw Error("graph file: header claims " + std::to_string(m) + " edges but " +
                std::to_string(g.edge_count()) + " are distinct");
  return g;
}

inline Graph read_graph_string(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open graph file '" + path + "'");
  return read_graph(f);
}

inline void save_graph_file(const std::string& path, const Graph& g) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write graph file '" + path + "'");
  write_graph(f, g);
}

}  // namespace steiner
