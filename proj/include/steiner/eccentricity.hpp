#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "steiner/budget.hpp"
#include "steiner/steiner_tree.hpp"

namespace steiner {

/// Steiner k-eccentricity of one vertex with a witness k-set.
struct EccentricityReport {
  Vertex vertex = -1;
  int k = 0;
  Distance value = Distance::unreachable();
  TerminalSet witness;  // size k, contains vertex, d(witness) = value
};

/// One exhaustive sweep over all k-subsets fills the whole report.
struct RadiusDiameterReport {
  int k = 0;
  Distance srad = Distance::unreachable();
  Distance sdiam = Distance::unreachable();
  std::vector<Vertex> center_vertices;   // argmin of e_k, ascending
  TerminalSet diametral_set;             // lex smallest S with d(S) = sdiam
  Rational ratio;                        // sdiam / srad, reduced
  std::vector<std::int64_t> ecc;         // e_k(v) for every vertex
};

namespace detail {

inline std::vector<Vertex> unrank_combination(std::uint64_t rank, int n, int k) {
  std::vector<Vertex> combo(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t c = binomial_capped(n - x - 1, k - i - 1);
      if (rank < c) break;
      rank -= c;
      ++x;
    }
    combo[i] = x++;
  }
  return combo;
}

inline bool next_combination(std::vector<Vertex>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

/// Runs `body(chunk_index)` over [0, chunks) on up to opts.threads workers.
/// Callers combine per-chunk results in chunk order afterwards, so the
/// outcome does not depend on scheduling or thread count.
template <typename Body>
void run_chunked(std::uint64_t chunks, const SweepOptions& opts, const Body& body) {
  unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) break;
        body(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

struct SweepPlan {
  std::uint64_t total = 0;   // number of k-subsets
  std::uint64_t chunk = 0;   // ranks per chunk
  std::uint64_t chunks = 0;
};

inline SweepPlan plan_sweep(const Graph& g, int k, int universe, const SweepOptions& opts,
                            const std::string& what) {
  if (!g.is_connected()) throw Error(what + ": graph is not connected");
  if (k < 2 || k > g.vertex_count())
    throw Error(what + ": k=" + std::to_string(k) + " out of range 2.." +
                std::to_string(g.vertex_count()));
  SweepPlan plan;
  plan.total = binomial_capped(universe, k);
  const std::uint64_t estimate =
      saturating_mul(plan.total, dp_call_units(g.vertex_count(), g.edge_count(), k));
  check_budget(estimate, opts.budget, what);
  const unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                            : std::max(1u, std::thread::hardware_concurrency());
  plan.chunk = std::clamp<std::uint64_t>(plan.total / (workers * 16ULL) + 1, 64, 65536);
  plan.chunks = (plan.total + plan.chunk - 1) / plan.chunk;
  return plan;
}

}  // namespace detail

/// Exact e_k(v): maximum Steiner distance over all k-sets containing v.
/// Witness is the lexicographically smallest maximizing set.
inline EccentricityReport k_eccentricity(const Graph& g, Vertex v, int k,
                                         const SweepOptions& opts = {}) {
  g.check_vertex(v);
  const int n = g.vertex_count();
  const auto plan = detail::plan_sweep(g, k, n - 1, opts, "k_eccentricity");

  struct ChunkBest {
    int value = -1;
    std::vector<Vertex> witness;
  };
  std::vector<ChunkBest> results(plan.chunks);
  const auto all_pairs = detail::all_pairs_bfs(g);

  detail::run_chunked(plan.chunks, opts, [&](std::uint64_t c) {
    detail::SubsetDpSolver solver(g, &all_pairs);
    ChunkBest best;
    const std::uint64_t lo = c * plan.chunk;
    const std::uint64_t hi = std::min(plan.total, lo + plan.chunk);
    // Combinations over the n-1 slots of V \ {v}; slot s is vertex s or s+1.
    std::vector<Vertex> slots = detail::unrank_combination(lo, n - 1, k - 1);
    std::vector<Vertex> terms(k);
    for (std::uint64_t r = lo; r < hi; ++r) {
      for (int i = 0; i < k - 1; ++i) terms[i] = slots[i] < v ? slots[i] : slots[i] + 1;
      terms[k - 1] = v;
      std::sort(terms.begin(), terms.end());
      const int cost = solver.cost(terms);
      if (cost > best.value) {
        best.value = cost;
        best.witness = terms;
      }
      if (r + 1 < hi) detail::next_combination(slots, n - 1);
    }
    results[c] = std::move(best);
  });

  EccentricityReport report;
  report.vertex = v;
  report.k = k;
  int best = -1;
  std::vector<Vertex> witness;
  for (const auto& r : results) {
    if (r.value > best) {
      best = r.value;
      witness = r.witness;
    }
  }
  report.value = Distance::of(best);
  report.witness = TerminalSet(witness);
  return report;
}

/// Full exhaustive sweep: e_k for every vertex, srad_k, sdiam_k, the
/// k-center, the lex-smallest diametral set, and the exact ratio.
inline RadiusDiameterReport steiner_radius_diameter(const Graph& g, int k,
                                                    const SweepOptions& opts = {}) {
  const int n = g.vertex_count();
  const auto plan = detail::plan_sweep(g, k, n, opts, "steiner_radius_diameter");

  struct ChunkResult {
    std::vector<int> ecc;
    int best = -1;
    std::vector<Vertex> witness;
  };
  std::vector<ChunkResult> results(plan.chunks);
  const auto all_pairs = detail::all_pairs_bfs(g);

  detail::run_chunked(plan.chunks, opts, [&](std::uint64_t c) {
    detail::SubsetDpSolver solver(g, &all_pairs);
    ChunkResult res;
    res.ecc.assign(n, -1);
    const std::uint64_t lo = c * plan.chunk;
    const std::uint64_t hi = std::min(plan.total, lo + plan.chunk);
    std::vector<Vertex> combo = detail::unrank_combination(lo, n, k);
    for (std::uint64_t r = lo; r < hi; ++r) {
      const int cost = solver.cost(combo);
      for (const Vertex x : combo) res.ecc[x] = std::max(res.ecc[x], cost);
      if (cost > res.best) {
        res.best = cost;
        res.witness = combo;
      }
      if (r + 1 < hi) detail::next_combination(combo, n);
    }
    results[c] = std::move(res);
  });

  RadiusDiameterReport report;
  report.k = k;
  std::vector<int> ecc(n, -1);
  int best = -1;
  std::vector<Vertex> witness;
  for (const auto& r : results) {
    for (int v = 0; v < n; ++v) ecc[v] = std::max(ecc[v], r.ecc[v]);
    if (r.best > best) {
      best = r.best;
      witness = r.witness;
    }
  }
  int lo = detail::kInf, hi = -1;
  for (const int e : ecc) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  report.srad = Distance::of(lo);
  report.sdiam = Distance::of(hi);
  report.ecc.assign(ecc.begin(), ecc.end());
  for (Vertex v = 0; v < n; ++v)
    if (ecc[v] == lo) report.center_vertices.push_back(v);
  report.diametral_set = TerminalSet(witness);
  report.ratio = Rational(hi, lo);
  return report;
}

inline Distance steiner_radius(const Graph& g, int k, const SweepOptions& opts = {}) {
  return steiner_radius_diameter(g, k, opts).srad;
}
inline Distance steiner_diameter(const Graph& g, int k, const SweepOptions& opts = {}) {
  return steiner_radius_diameter(g, k, opts).sdiam;
}
inline std::vector<Vertex> steiner_center(const Graph& g, int k, const SweepOptions& opts = {}) {
  return steiner_radius_diameter(g, k, opts).center_vertices;
}
inline TerminalSet diametral_set(const Graph& g, int k, const SweepOptions& opts = {}) {
  return steiner_radius_diameter(g, k, opts).diametral_set;
}

}  // namespace steiner
