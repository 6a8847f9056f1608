#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "steiner/families.hpp"
#include "steiner/verify.hpp"

namespace steiner {

/// Result of a seeded randomized search for extremal sdiam_k/srad_k ratios.
struct ScanResult {
  int k = 0;
  int trials = 0;
  int completed = 0;  // trials that produced a graph and a sweep
  Rational best_ratio{0, 1};
  int best_trial = -1;
  Graph best_graph;
  Distance best_srad = Distance::unreachable();
  Distance best_sdiam = Distance::unreachable();
  TerminalSet best_diametral;
  std::vector<Vertex> best_center;
  std::vector<std::string> violations;  // must stay empty
  std::vector<std::string> log;

  std::string line() const {
    std::string out = "claim=scan status=";
    out += violations.empty() ? "Verified" : "Refuted";
    out += " k=" + std::to_string(k) + " trials=" + std::to_string(trials) +
           " completed=" + std::to_string(completed) + " best_ratio=" + best_ratio.str();
    if (best_trial >= 0)
      out += " best_trial=" + std::to_string(best_trial) + " best_srad=" + best_srad.str() +
             " best_sdiam=" + best_sdiam.str();
    out += " violations=" + std::to_string(violations.size());
    return out;
  }
};

/// Seeded scan: per trial, generate a graph from cfg with seed
/// cfg.seed + trial, sweep srad_k/sdiam_k exactly, track the maximum ratio,
/// and record any violation of the applicable bound (general bound always,
/// tree bound additionally when the sample is a tree). Near-extremal trials
/// for k >= 5 also re-run the distance-lemma check. Deterministic for fixed
/// (cfg, k, trials); generation failures are logged and skipped.
inline ScanResult ratio_scan(const EnsembleConfig& cfg, int k, int trials,
                             const SweepOptions& opts = {}, bool keep_log = false) {
  if (trials < 1) throw Error("ratio_scan: trials must be >= 1");
  ScanResult out;
  out.k = k;
  out.trials = trials;
  const BoundSpec spec = BoundSpec::for_k(k);
  const Rational lemma_trigger = spec.bound - Rational(1, 100);

  for (int t = 0; t < trials; ++t) {
    EnsembleConfig trial_cfg = cfg;
    trial_cfg.seed = cfg.seed + static_cast<std::uint64_t>(t);
    Graph g;
    try {
      g = random_graph(trial_cfg);
    } catch (const Error& e) {
      out.log.push_back("trial=" + std::to_string(t) + " error=" + e.what());
      continue;
    }
    if (g.vertex_count() < k) {
      out.log.push_back("trial=" + std::to_string(t) + " skipped=n_lt_k");
      continue;
    }
    const auto rep = steiner_radius_diameter(g, k, opts);
    ++out.completed;
    const std::int64_t srad = rep.srad.value(), sdiam = rep.sdiam.value();
    if (keep_log)
      out.log.push_back("trial=" + std::to_string(t) + " srad=" + std::to_string(srad) +
                        " sdiam=" + std::to_string(sdiam));

    if (spec.bound.den() * sdiam > spec.bound.num() * srad)
      out.violations.push_back("trial=" + std::to_string(t) + " bound ratio=" +
                               rep.ratio.str() + " limit=" + spec.bound.str());
    if (g.is_tree()) {
      const Rational tb = BoundSpec::tree_bound(k);
      if (tb.den() * sdiam > tb.num() * srad)
        out.violations.push_back("trial=" + std::to_string(t) + " tree_bound ratio=" +
                                 rep.ratio.str() + " limit=" + tb.str());
    }
    if (k >= 5 && rep.ratio > lemma_trigger) {
      const Rational p = rep.ratio * Rational(999, 1000);
      if (p > Rational(1, 1)) {
        const auto lem = check_lemma(g, k, p, opts);
        if (lem.status == Status::Refuted)
          out.violations.push_back("trial=" + std::to_string(t) + " lemma " + lem.line());
      }
    }

    if (rep.ratio > out.best_ratio) {
      out.best_ratio = rep.ratio;
      out.best_trial = t;
      out.best_graph = g;
      out.best_srad = rep.srad;
      out.best_sdiam = rep.sdiam;
      out.best_diametral = rep.diametral_set;
      out.best_center = rep.center_vertices;
    }
  }

  // Recompute the headline witness from scratch to guard the aggregation.
  if (out.best_trial >= 0) {
    const auto again = steiner_radius_diameter(out.best_graph, k, opts);
    if (again.srad != out.best_srad || again.sdiam != out.best_sdiam ||
        !(again.ratio == out.best_ratio))
      out.violations.push_back("recheck: best witness does not reproduce");
  }
  return out;
}

namespace detail {

/// Packs the adjacency of a graph on n <= 7 vertices into bits indexed by
/// pairs (i < j) in lexicographic order.
inline std::uint32_t adjacency_code(const std::vector<Edge>& edges, int n) {
  std::uint32_t code = 0;
  for (const auto& [u, v] : edges) {
    const int i = std::min(u, v), j = std::max(u, v);
    code |= 1u << (i * n - i * (i + 1) / 2 + (j - i - 1));
  }
  return code;
}

/// Minimum adjacency code over all vertex permutations.
inline std::uint32_t canonical_code(const std::vector<Edge>& edges, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint32_t best = ~0u;
  do {
    std::uint32_t code = 0;
    for (const auto& [u, v] : edges) {
      const int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
      code |= 1u << (a * n - a * (a + 1) / 2 + (b - a - 1));
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<Edge> edges_of_code(std::uint32_t code, int n) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1u) edges.emplace_back(i, j);
  return edges;
}

/// All canonical connected graphs on exactly n vertices, grown by attaching
/// a new vertex to every nonempty subset of each (n-1)-vertex parent. Every
/// connected graph has a non-cut vertex, so nothing is missed.
inline std::vector<std::uint32_t> connected_canonical_codes(int n) {
  if (n == 1) return {0};
  std::vector<std::uint32_t> out;
  std::set<std::uint32_t> seen;
  for (const std::uint32_t parent : connected_canonical_codes(n - 1)) {
    const std::vector<Edge> base = edges_of_code(parent, n - 1);
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = base;
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1u) edges.emplace_back(v, n - 1);
      seen.insert(canonical_code(edges, n));
    }
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace detail

/// Deterministic test corpus: every connected graph up to 7 vertices
/// (one representative per isomorphism class), plus 100 seeded random
/// connected graphs on 8 vertices when max_n = 8.
inline std::vector<Graph> seeded_corpus(int max_n) {
  if (max_n < 1 || max_n > 8) throw Error("seeded_corpus: max_n must be in 1..8");
  std::vector<Graph> out;
  for (int n = 1; n <= std::min(max_n, 7); ++n)
    for (const std::uint32_t code : detail::connected_canonical_codes(n))
      out.push_back(Graph::from_edge_list(n, detail::edges_of_code(code, n)));
  if (max_n == 8) {
    EnsembleConfig cfg;
    cfg.kind = EnsembleConfig::Kind::RandomConnectedGnp;
    cfg.n = 8;
    cfg.p = Rational(1, 2);
    for (int i = 0; i < 100; ++i) {
      cfg.seed = 0xC0FFEEULL + static_cast<std::uint64_t>(i);
      out.push_back(random_graph(cfg));
    }
  }
  return out;
}

}  // namespace steiner
