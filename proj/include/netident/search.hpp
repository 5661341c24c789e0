#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "netident/emp.hpp"
#include "netident/graph.hpp"
#include "netident/identifiability.hpp"

namespace netident {

struct OracleConfig {
  int trials = 3;        // confirmation trials (also used by validate_emp)
  int search_trials = 2; // cheaper screening trials during enumeration
  std::uint64_t seed = 42;
};

struct SearchLimits {
  long max_candidates = 0;                 // 0 = unlimited
  std::chrono::milliseconds time_budget{0};  // zero = unlimited
};

/// Optional per-node costs, indexed by node id (index 0 unused; missing
/// entries count as 1). Costs only reorder candidates of equal cardinality
/// toward cheaper ones first; validity and minimality stay cardinality-based.
struct SearchCosts {
  std::vector<double> excitation;
  std::vector<double> measurement;

  double excite(NodeId v) const {
    return v < static_cast<NodeId>(excitation.size()) ? excitation[v] : 1.0;
  }
  double measure(NodeId v) const {
    return v < static_cast<NodeId>(measurement.size()) ? measurement[v] : 1.0;
  }
  double total(const Emp& emp) const {
    double cost = 0.0;
    for (NodeId v : emp.excited) cost += excite(v);
    for (NodeId v : emp.measured) cost += measure(v);
    return cost;
  }
};

struct SearchResult {
  std::optional<Emp> emp;
  bool proven_minimal = false;
  long explored = 0;  // candidates submitted to the oracle
  bool budget_exhausted = false;
};

/// Necessary conditions first, oracle second. When a necessary condition
/// fails the oracle is skipped and the verdict reports the violations.
inline IdentVerdict validate_emp(const NetworkPattern& pattern, const Emp& emp,
                                 const OracleConfig& config = {}) {
  auto violations = necessary_check(pattern, emp);
  if (!violations.empty()) {
    IdentVerdict verdict;
    verdict.identifiable = false;
    verdict.required_rank = static_cast<int>(pattern.edges().size());
    verdict.violations = std::move(violations);
    return verdict;
  }
  return generic_identifiability(pattern, emp, config.trials, config.seed);
}

namespace detail_search {

// Per-node assignment: forced statuses come from the necessary conditions
// (sources/dources excited, sinks/dinks measured); a node forced both ways
// can only be covered by the "both" status.
struct NodeConstraint {
  NodeId node;
  bool must_excite;
  bool must_measure;
};

inline std::vector<NodeConstraint> node_constraints(const NetworkPattern& pattern,
                                                    const NodeClassification& c) {
  std::vector<NodeConstraint> constraints;
  constraints.reserve(pattern.node_count());
  for (NodeId v = 1; v <= pattern.node_count(); ++v) {
    const bool excite = c.is_source(v) || c.is_dource(v);
    const bool measure = c.is_sink(v) || c.is_dink(v);
    constraints.push_back({v, excite, measure});
  }
  return constraints;
}

// All candidates with exactly `both_count` doubly-covered nodes, sorted
// lexicographically by (excited set, measured set). Every candidate
// satisfies the necessary conditions by construction except possibly
// non-emptiness, which the caller re-checks.
inline std::vector<Emp> candidates_at_level(const std::vector<NodeConstraint>& constraints,
                                            int both_count) {
  const int n = static_cast<int>(constraints.size());
  std::vector<Emp> out;

  std::vector<int> free_choice;  // indices assignable to either single status
  std::vector<NodeId> base_excited, base_measured;

  // Choose the "both" subset via a combination mask over all nodes.
  std::vector<bool> in_both(n, false);
  std::vector<int> comb(both_count);
  for (int i = 0; i < both_count; ++i) comb[i] = i;

  auto emit_for_both_subset = [&]() {
    base_excited.clear();
    base_measured.clear();
    free_choice.clear();
    for (int i = 0; i < n; ++i) {
      const auto& nc = constraints[i];
      if (in_both[i]) {
        base_excited.push_back(nc.node);
        base_measured.push_back(nc.node);
      } else if (nc.must_excite && nc.must_measure) {
        return;  // needs "both" but was not selected
      } else if (nc.must_excite) {
        base_excited.push_back(nc.node);
      } else if (nc.must_measure) {
        base_measured.push_back(nc.node);
      } else {
        free_choice.push_back(i);
      }
    }
    const int k = static_cast<int>(free_choice.size());
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      std::vector<NodeId> excited = base_excited;
      std::vector<NodeId> measured = base_measured;
      for (int bit = 0; bit < k; ++bit) {
        const NodeId v = constraints[free_choice[bit]].node;
        if (mask & (1ULL << bit))
          measured.push_back(v);
        else
          excited.push_back(v);
      }
      out.emplace_back(std::move(excited), std::move(measured));
    }
  };

  if (both_count == 0) {
    emit_for_both_subset();
  } else if (both_count <= n) {
    while (true) {
      std::fill(in_both.begin(), in_both.end(), false);
      for (int idx : comb) in_both[idx] = true;
      emit_for_both_subset();
      // next combination
      int i = both_count - 1;
      while (i >= 0 && comb[i] == n - both_count + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < both_count; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  return out;
}

inline void order_candidates(std::vector<Emp>& candidates, const SearchCosts& costs) {
  std::sort(candidates.begin(), candidates.end(), [&](const Emp& a, const Emp& b) {
    const double ca = costs.total(a);
    const double cb = costs.total(b);
    if (ca != cb) return ca < cb;
    if (a.excited != b.excited) return a.excited < b.excited;
    return a.measured < b.measured;
  });
}

}  // namespace detail_search

/// Exhaustive minimal-EMP search in nondecreasing cardinality order,
/// starting at the lower cardinality bound. Sources and dources are pinned
/// to excitation, sinks and dinks to measurement, and every node receives
/// at least one status, so the enumerated space is exactly the one allowed
/// by the necessary conditions. The first candidate passing the oracle
/// (screened with `search_trials`, confirmed with `trials`) wins;
/// minimality is proven when every strictly smaller candidate was
/// exhausted within budget.
inline SearchResult find_minimal_emp(const NetworkPattern& pattern,
                                     const OracleConfig& config = {},
                                     const SearchLimits& limits = {},
                                     const SearchCosts& costs = {}) {
  const auto started = std::chrono::steady_clock::now();
  const NodeClassification c = classify(pattern);
  const auto constraints = detail_search::node_constraints(pattern, c);
  const int n = pattern.node_count();

  SearchResult result;
  auto out_of_budget = [&]() {
    if (limits.max_candidates > 0 && result.explored >= limits.max_candidates) return true;
    if (limits.time_budget.count() > 0 &&
        std::chrono::steady_clock::now() - started >= limits.time_budget)
      return true;
    return false;
  };

  for (int both_count = 0; both_count <= n; ++both_count) {
    auto candidates = detail_search::candidates_at_level(constraints, both_count);
    detail_search::order_candidates(candidates, costs);
    for (const Emp& candidate : candidates) {
      if (candidate.excited.empty() || candidate.measured.empty()) continue;
      if (out_of_budget()) {
        result.budget_exhausted = true;
        return result;
      }
      ++result.explored;
      const IdentVerdict screened = generic_identifiability(
          pattern, candidate, config.search_trials, config.seed);
      if (!screened.identifiable) continue;
      const IdentVerdict confirmed =
          generic_identifiability(pattern, candidate, config.trials, config.seed);
      if (!confirmed.identifiable) continue;
      result.emp = candidate;
      result.proven_minimal = true;
      return result;
    }
  }
  return result;  // no valid EMP below the full double pattern; not expected
}

}  // namespace netident
