#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netident/emp.hpp"
#include "netident/graph.hpp"
#include "netident/instance.hpp"
#include "netident/matrix.hpp"
#include "netident/rng.hpp"

namespace netident {

class EmptyEmp : public std::invalid_argument {
 public:
  EmptyEmp() : std::invalid_argument("EMP must excite and measure at least one node") {}
};

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of the generic-identifiability oracle. The network is judged
/// identifiable iff some trial reaches the required rank (one parameter
/// per edge).
struct IdentVerdict {
  bool identifiable = false;
  int achieved_rank = 0;
  int required_rank = 0;
  int trials = 0;
  std::vector<int> per_trial_ranks;
  std::vector<NecessaryViolation> violations;  // empty when the oracle ran
};

/// Jacobian of the map from edge parameters to the input-output matrix
/// M = C T B, evaluated at the instance. Perturbing one edge j -> i gives
/// dT = T e_i e_j' T, so the column for that edge is the outer product of
/// column i of C·T with row j of T·B, vectorized. Size (|C|·|B|) x |edges|.
inline RealMatrix jacobian(const NumericInstance& inst, const Emp& emp) {
  if (emp.excited.empty() || emp.measured.empty()) throw EmptyEmp();
  const int n = inst.pattern.node_count();
  for (NodeId v : emp.excited)
    if (v < 1 || v > n) throw ValidationError("excited node " + std::to_string(v) + " out of range");
  for (NodeId v : emp.measured)
    if (v < 1 || v > n) throw ValidationError("measured node " + std::to_string(v) + " out of range");

  const RealMatrix& t = inst.t;
  const auto& edges = inst.pattern.edges();
  const int num_measured = static_cast<int>(emp.measured.size());
  const int num_excited = static_cast<int>(emp.excited.size());

  RealMatrix jac(num_measured * num_excited, static_cast<int>(edges.size()));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const int i = edges[e].to - 1;
    const int j = edges[e].from - 1;
    int row = 0;
    for (NodeId c : emp.measured) {
      const double left = t(c - 1, i);
      for (NodeId b : emp.excited) {
        jac(row++, e) = left * t(j, b - 1);
      }
    }
  }
  return jac;
}

/// Decide generic identifiability of the pattern under the EMP by rank
/// tests at random parameter points. Each trial draws a fresh instance
/// from a derived seed; the verdict aggregates by maximum rank, so one
/// full-rank trial suffices (rank can only be lost on a measure-zero set,
/// never gained).
inline IdentVerdict generic_identifiability(const NetworkPattern& pattern, const Emp& emp,
                                            int trials = 3, std::uint64_t seed = 42) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  IdentVerdict verdict;
  verdict.trials = trials;
  verdict.required_rank = static_cast<int>(pattern.edges().size());
  for (int trial = 0; trial < trials; ++trial) {
    const NumericInstance inst =
        sample_instance(pattern, derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const int rank = numerical_rank(jacobian(inst, emp));
    verdict.per_trial_ranks.push_back(rank);
    verdict.achieved_rank = std::max(verdict.achieved_rank, rank);
  }
  verdict.identifiable = verdict.achieved_rank == verdict.required_rank;
  return verdict;
}

/// Build the EMP that leaves node D unexcited: D measured but not excited,
/// sources excited, sinks measured, every other node both. Valid whenever
/// D is neither a source nor a dource.
inline Emp emp_without_excitation(const NetworkPattern& pattern, NodeId d) {
  if (d < 1 || d > pattern.node_count())
    throw ValidationError("node " + std::to_string(d) + " out of range");
  const NodeClassification c = classify(pattern);
  if (c.is_source(d))
    throw NotApplicable("node " + std::to_string(d) + " is a source and must be excited");
  if (c.is_dource(d))
    throw NotApplicable("node " + std::to_string(d) + " is a dource and must be excited");

  std::vector<NodeId> excited, measured;
  for (NodeId v = 1; v <= pattern.node_count(); ++v) {
    if (!c.is_sink(v) && v != d) excited.push_back(v);
    if (!c.is_source(v)) measured.push_back(v);
  }
  return Emp(std::move(excited), std::move(measured));
}

/// Dual construction: D excited but not measured. Valid whenever D is
/// neither a sink nor a dink. Realized by running the primal construction
/// on the reversed pattern and swapping the roles of the two sets.
inline Emp emp_without_measurement(const NetworkPattern& pattern, NodeId d) {
  if (d < 1 || d > pattern.node_count())
    throw ValidationError("node " + std::to_string(d) + " out of range");
  const NodeClassification c = classify(pattern);
  if (c.is_sink(d))
    throw NotApplicable("node " + std::to_string(d) + " is a sink and must be measured");
  if (c.is_dink(d))
    throw NotApplicable("node " + std::to_string(d) + " is a dink and must be measured");

  const Emp mirrored = emp_without_excitation(reverse(pattern), d);
  return Emp(mirrored.measured, mirrored.excited);
}

/// Numerical verification that every row of G stays recoverable when the
/// column of T at D is withheld (D measured but not excited).
///
/// With O the out-neighbors of D, I the in-neighbors not in O, and S the
/// rest, three facts are checked at the instance:
///  (a) T with row and column D removed has full rank n-1,
///  (b) the row of T at D (column D excluded) is the combination of the
///      rows at its in-neighbors with weights G_{D,*}, and
///  (c) for the first out-neighbor o1 missing an edge from some in-neighbor
///      i1 of D, dropping row i1 of T (and column D) still leaves full rank
///      n-1, which makes the row of G at o1 solvable despite the unknown
///      G_{o1,D}.
struct RecoveryReport {
  NodeId node = 0;
  int basis_rank = 0;       // (a): rank of T with row/col D removed
  int basis_required = 0;   // n - 1
  double dependence_residual = 0.0;  // (b), relative to max(1, max|T|)
  NodeId pivot_out_neighbor = 0;     // o1 in (c)
  NodeId dropped_in_neighbor = 0;    // i1 in (c)
  int substitute_rank = 0;           // (c): rank with row i1 / col D removed
  int substitute_required = 0;       // n - 1

  bool basis_full_rank() const { return basis_rank == basis_required; }
  bool substitute_full_rank() const { return substitute_rank == substitute_required; }
};

inline RecoveryReport unexcited_recovery_check(const NumericInstance& inst, NodeId d) {
  const NetworkPattern& pattern = inst.pattern;
  const NodeClassification c = classify(pattern);
  if (c.is_source(d))
    throw NotApplicable("node " + std::to_string(d) + " is a source; its excitation is required");
  if (c.is_dource(d))
    throw NotApplicable("node " + std::to_string(d) + " is a dource; its excitation is required");
  if (c.is_sink(d))
    throw NotApplicable("node " + std::to_string(d) +
                        " is a sink; it has no out-neighbors to constrain");

  const int n = pattern.node_count();
  const RealMatrix& t = inst.t;
  const RealMatrix& g = inst.g;

  std::vector<NodeId> cols;
  for (NodeId v = 1; v <= n; ++v)
    if (v != d) cols.push_back(v);

  RecoveryReport report;
  report.node = d;
  report.basis_required = n - 1;
  report.substitute_required = n - 1;
  report.basis_rank = numerical_rank(node_submatrix(t, cols, cols));

  const auto& in = pattern.in_neighbors(d);
  double residual = 0.0;
  for (NodeId k : cols) {
    double predicted = 0.0;
    for (NodeId i : in) predicted += g(d - 1, i - 1) * t(i - 1, k - 1);
    residual = std::max(residual, std::abs(t(d - 1, k - 1) - predicted));
  }
  report.dependence_residual = residual / relative_residual_scale(t);

  // Because D is not a dource, every out-neighbor o lacks an edge from at
  // least one in-neighbor of D (possibly o itself, via the zero diagonal).
  // That structural zero removes one unknown from the equation for row o
  // of G, and the remaining square system must stay nonsingular.
  for (NodeId o : pattern.out_neighbors(d)) {
    for (NodeId i : in) {
      if (pattern.has_edge(i, o)) continue;
      report.pivot_out_neighbor = o;
      report.dropped_in_neighbor = i;
      std::vector<NodeId> rows;
      for (NodeId v = 1; v <= n; ++v)
        if (v != i) rows.push_back(v);
      report.substitute_rank = numerical_rank(node_submatrix(t, rows, cols));
      return report;
    }
  }
  // Unreachable for a non-dource D: were every in-neighbor connected to
  // some out-neighbor o, that o would witness D as a dource.
  throw NotApplicable("no out-neighbor of node " + std::to_string(d) +
                      " is missing an in-neighbor edge");
}

}  // namespace netident
