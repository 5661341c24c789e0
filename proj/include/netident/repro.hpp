#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "netident/emp.hpp"
#include "netident/fixtures.hpp"
#include "netident/graph.hpp"
#include "netident/identifiability.hpp"
#include "netident/instance.hpp"
#include "netident/search.hpp"

namespace netident {

struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail_repro {

template <typename Fn>
ReproCheck guarded(const std::string& name, Fn&& fn) {
  ReproCheck check;
  check.name = name;
  try {
    std::ostringstream detail;
    check.pass = fn(detail);
    check.detail = detail.str();
  } catch (const std::exception& e) {
    check.pass = false;
    check.detail = e.what();
  }
  return check;
}

}  // namespace detail_repro

/// Checks pinned to the example-a shape: an unexcited dource leaves the
/// witness block matrix one rank short, and the oracle agrees. Accepts the
/// pattern as input so a deliberately altered fixture fails by name.
inline std::vector<ReproCheck> example_a_checks(const NetworkPattern& pattern, int trials,
                                                std::uint64_t seed) {
  std::vector<ReproCheck> checks;
  checks.push_back(detail_repro::guarded(
      "example-a dource block rank deficiency", [&](std::ostringstream& detail) {
        const auto inst = sample_instance(pattern, seed);
        const auto part = dource_partition(pattern, 1);
        const auto report = dependence_witness(inst, 1, part);
        detail << "block rank " << report.block_rank << " of " << report.block_rows
               << ", dependence residual " << report.dependence_residual;
        return report.rank_deficient() && report.block_rank == 2 &&
               report.dependence_residual < 1e-9;
      }));
  checks.push_back(detail_repro::guarded(
      "example-a not identifiable without exciting node 1", [&](std::ostringstream& detail) {
        std::vector<NodeId> excited;
        for (NodeId v = 2; v <= pattern.node_count(); ++v) excited.push_back(v);
        const auto all = full_double_emp(pattern);
        const auto verdict =
            generic_identifiability(pattern, Emp(excited, all.measured), trials, seed);
        detail << "rank " << verdict.achieved_rank << " of " << verdict.required_rank;
        return !verdict.identifiable &&
               verdict.achieved_rank == verdict.required_rank - 1;
      }));
  return checks;
}

/// Checks pinned to the example-b shape: the dource row dependence, the
/// four row-recovery systems with node 3 unexcited, and the known-valid
/// EMP {1,2,4} excited / {1,2,3,5} measured.
inline std::vector<ReproCheck> example_b_checks(const NetworkPattern& pattern, int trials,
                                                std::uint64_t seed) {
  std::vector<ReproCheck> checks;
  checks.push_back(detail_repro::guarded(
      "example-b dource row dependence", [&](std::ostringstream& detail) {
        const auto inst = sample_instance(pattern, seed);
        const auto report = dependence_witness(inst, 1, dource_partition(pattern, 1));
        detail << "residual " << report.dependence_residual << ", block rank "
               << report.block_rank << " of " << report.block_rows;
        return report.rank_deficient() && report.dependence_residual < 1e-9;
      }));
  checks.push_back(detail_repro::guarded(
      "example-b rows recoverable without exciting node 3", [&](std::ostringstream& detail) {
        const auto inst = sample_instance(pattern, seed);
        const auto& t = inst.t;
        const auto& g = inst.g;
        const std::vector<NodeId> known_cols = {1, 2, 4};
        double worst = 0.0;
        for (NodeId row = 1; row <= pattern.node_count(); ++row) {
          const auto& support = pattern.in_neighbors(row);
          if (support.empty()) continue;
          const RealMatrix coeff = node_submatrix(t, support, known_cols);
          RealMatrix rhs(1, static_cast<int>(known_cols.size()));
          for (int k = 0; k < rhs.cols(); ++k)
            rhs(0, k) = t(row - 1, known_cols[k] - 1) - (row == known_cols[k] ? 1.0 : 0.0);
          const RealMatrix solved = solve_xa_eq_b(coeff, rhs);
          for (int k = 0; k < solved.cols(); ++k) {
            const double planted = g(row - 1, support[k] - 1);
            worst = std::max(worst, std::abs(solved(0, k) - planted) / std::abs(planted));
          }
        }
        detail << "worst relative recovery error " << worst;
        return worst < 1e-7;
      }));
  checks.push_back(detail_repro::guarded(
      "example-b EMP {1,2,4}/{1,2,3,5} is valid", [&](std::ostringstream& detail) {
        OracleConfig config;
        config.trials = trials;
        config.seed = seed;
        const auto verdict = validate_emp(pattern, Emp({1, 2, 4}, {1, 2, 3, 5}), config);
        detail << "rank " << verdict.achieved_rank << " of " << verdict.required_rank;
        return verdict.identifiable;
      }));
  return checks;
}

/// The full built-in suite, as run by the command-line `repro` command.
inline std::vector<ReproCheck> run_repro_checks(int trials, std::uint64_t seed) {
  auto checks = example_a_checks(fixtures::example_a(), trials, seed);
  auto b = example_b_checks(fixtures::example_b(), trials, seed);
  checks.insert(checks.end(), b.begin(), b.end());
  return checks;
}

}  // namespace netident
