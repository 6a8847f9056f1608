#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "steiner/rational.hpp"

namespace steiner {

// Exhaustive sweeps can be asked for sizes that would run for days. Every
// sweeping operation estimates its cost in abstract DP units up front and
// refuses (BudgetError) when the estimate exceeds the configured budget.
// The default admits the bundled family sweeps up to k=8; larger jobs must
// opt in via SweepOptions::budget or the STEINER_BUDGET environment variable.

inline constexpr std::uint64_t kDefaultBudget = 3'000'000'000ULL;
inline constexpr std::uint64_t kUnitCap = UINT64_MAX / 4;

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("STEINER_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error("STEINER_BUDGET: expected a positive integer, got '" + std::string(env) + "'");
    return v;
  }
  return kDefaultBudget;
}

struct SweepOptions {
  std::uint64_t budget = default_budget();
  int threads = 0;  // 0 = all hardware threads
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kUnitCap / a) return kUnitCap;
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return (a > kUnitCap - b) ? kUnitCap : a + b;
}

inline std::uint64_t pow_capped(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

inline std::uint64_t binomial_capped(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = saturating_mul(out, static_cast<std::uint64_t>(n - k + i));
    if (out == kUnitCap) return kUnitCap;
    out /= static_cast<std::uint64_t>(i);
  }
  return out;
}

/// Estimated units for one Steiner-distance DP on k terminals: the subset
/// merges plus one distance relaxation per terminal submask.
inline std::uint64_t dp_call_units(int n, int m, int k) {
  const std::uint64_t merge = saturating_mul(pow_capped(3, k > 0 ? k - 1 : 0),
                                             static_cast<std::uint64_t>(n));
  const std::uint64_t relax = saturating_mul(pow_capped(2, k > 0 ? k - 1 : 0),
                                             2ULL * static_cast<std::uint64_t>(n + m));
  return saturating_add(merge, relax);
}

inline void check_budget(std::uint64_t estimate, std::uint64_t limit, const std::string& what) {
  if (estimate > limit)
    throw BudgetError(what + ": estimated cost " + std::to_string(estimate) +
                          " units exceeds budget " + std::to_string(limit) +
                          " (raise with STEINER_BUDGET or the budget option)",
                      estimate, limit);
}

}  // namespace steiner
