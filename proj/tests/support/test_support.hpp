#pragma once

// Shared test utilities: a deterministic random-pattern corpus generator,
// complete pattern enumeration at small n, and the closed-form transfer
// matrix for the example-b fixture used as an independent oracle.

#include <vector>

#include "netident/graph.hpp"
#include "netident/matrix.hpp"
#include "netident/rng.hpp"

namespace netident::testsupport {

/// Random pattern with node count in [n_min, n_max] and edge density in
/// [d_min, d_max]. Draws are retried until the no-isolated-node invariant
/// holds, so the result is always constructible.
inline NetworkPattern random_pattern(RandomStream& rng, int n_min, int n_max, double d_min,
                                     double d_max) {
  for (;;) {
    const int n = n_min + static_cast<int>(rng.next_u64() %
                                           static_cast<std::uint64_t>(n_max - n_min + 1));
    const double density = rng.uniform(d_min, d_max);
    std::vector<Edge> edges;
    for (NodeId from = 1; from <= n; ++from)
      for (NodeId to = 1; to <= n; ++to)
        if (from != to && rng.next_unit() < density) edges.push_back({from, to});
    if (edges.empty()) continue;

    std::vector<int> degree(n + 1, 0);
    for (const Edge& e : edges) {
      ++degree[e.from];
      ++degree[e.to];
    }
    bool isolated = false;
    for (NodeId v = 1; v <= n; ++v) isolated = isolated || degree[v] == 0;
    if (isolated) continue;
    return NetworkPattern(n, std::move(edges));
  }
}

/// Every pattern on n nodes (all subsets of ordered pairs) that satisfies
/// the pattern invariants. Exponential; intended for n <= 4.
inline std::vector<NetworkPattern> enumerate_patterns(int n) {
  std::vector<Edge> slots;
  for (NodeId from = 1; from <= n; ++from)
    for (NodeId to = 1; to <= n; ++to)
      if (from != to) slots.push_back({from, to});

  std::vector<NetworkPattern> out;
  const std::uint64_t total = 1ULL << slots.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<Edge> edges;
    std::vector<int> degree(n + 1, 0);
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask & (1ULL << b)) {
        edges.push_back(slots[b]);
        ++degree[slots[b].from];
        ++degree[slots[b].to];
      }
    }
    bool ok = true;
    for (NodeId v = 1; v <= n; ++v) ok = ok && degree[v] > 0;
    if (ok) out.emplace_back(n, std::move(edges));
  }
  return out;
}

/// Closed-form transfer matrix for the example-b fixture, written out from
/// the loop gains of the graph (feedback loops 1->2->3->1 and 2->3->2).
/// Serves as an oracle independent of the LU inversion path.
inline RealMatrix example_b_closed_form_t(const RealMatrix& g) {
  const double g13 = g(0, 2), g14 = g(0, 3);
  const double g21 = g(1, 0), g23 = g(1, 2), g24 = g(1, 3);
  const double g32 = g(2, 1);
  const double g51 = g(4, 0);
  const double delta = 1.0 - g23 * g32 - g21 * g13 * g32;

  RealMatrix t(5, 5);
  t(0, 0) = (1.0 - g23 * g32) / delta;
  t(0, 1) = g13 * g32 / delta;
  t(0, 2) = g13 / delta;
  t(0, 3) = (g13 * g32 * g24 - g14 * g23 * g32 + g14) / delta;
  t(1, 0) = g21 / delta;
  t(1, 1) = 1.0 / delta;
  t(1, 2) = (g23 + g21 * g13) / delta;
  t(1, 3) = (g21 * g14 + g24) / delta;
  t(2, 0) = g32 * g21 / delta;
  t(2, 1) = g32 / delta;
  t(2, 2) = 1.0 / delta;
  t(2, 3) = g32 * (g21 * g14 + g24) / delta;
  t(3, 3) = 1.0;
  t(4, 0) = g51 * (1.0 - g23 * g32) / delta;
  t(4, 1) = g51 * g13 * g32 / delta;
  t(4, 2) = g51 * g13 / delta;
  t(4, 3) = g51 * (g13 * g32 * g24 - g14 * g23 * g32 + g14) / delta;
  t(4, 4) = 1.0;
  return t;
}

}  // namespace netident::testsupport
