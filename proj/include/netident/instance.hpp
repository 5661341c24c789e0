#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netident/graph.hpp"
#include "netident/matrix.hpp"
#include "netident/rng.hpp"

namespace netident {

/// Raised when repeated draws keep producing a numerically ill-posed
/// (I - G); signals a pathological pattern/tolerance interaction.
class WellPosednessFailure : public std::runtime_error {
 public:
  explicit WellPosednessFailure(int attempts)
      : std::runtime_error("failed to draw a well-posed instance after " +
                           std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}

  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

/// A concrete network matrix consistent with a pattern, together with its
/// transfer matrix T = (I - G)^{-1}.
///
/// Invariants: G_{ij} is nonzero exactly on edges j -> i and zero on the
/// diagonal; the inversion residual max|(I-G)T - I| stays below 1e-9
/// relative to max(1, max|T|).
struct NumericInstance {
  NetworkPattern pattern;
  RealMatrix g;
  RealMatrix t;
  std::uint64_t seed = 0;
};

/// Submatrix of `m` addressed by 1-based node ids.
inline RealMatrix node_submatrix(const RealMatrix& m, const std::vector<NodeId>& row_nodes,
                                 const std::vector<NodeId>& col_nodes) {
  RealMatrix s(static_cast<int>(row_nodes.size()), static_cast<int>(col_nodes.size()));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) s(i, j) = m(row_nodes[i] - 1, col_nodes[j] - 1);
  return s;
}

inline double relative_residual_scale(const RealMatrix& t) {
  return std::max(1.0, t.max_abs());
}

/// Entry T_{ij} is identically zero unless i == j or the pattern has a
/// directed path from j to i. LU inversion leaves roundoff noise in those
/// positions, which scale-free rank decisions downstream would mistake for
/// signal; pin them to exact zero.
inline void zero_structural_t_entries(const NetworkPattern& pattern, RealMatrix& t) {
  const int n = pattern.node_count();
  std::vector<NodeId> stack;
  std::vector<bool> reached(n + 1);
  for (NodeId j = 1; j <= n; ++j) {
    std::fill(reached.begin(), reached.end(), false);
    reached[j] = true;
    stack.assign(1, j);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : pattern.out_neighbors(v)) {
        if (!reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (NodeId i = 1; i <= n; ++i)
      if (!reached[i]) t(i - 1, j - 1) = 0.0;
  }
}

/// Draw edge weights uniformly from [0.25, 1.75] with random sign and
/// compute T. Weights are produced by a counter-based stream keyed by
/// (seed, attempt), so identical inputs give bit-identical instances; a
/// fresh substream is used whenever |det(I-G)| < 1e-6 or the inversion
/// residual violates the instance invariant, up to 32 attempts.
inline NumericInstance sample_instance(const NetworkPattern& pattern, std::uint64_t seed) {
  const int n = pattern.node_count();
  constexpr int kMaxAttempts = 32;
  constexpr double kDetFloor = 1e-6;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RandomStream rng(seed, static_cast<std::uint64_t>(attempt));
    RealMatrix g(n, n);
    for (const Edge& e : pattern.edges()) {
      const double magnitude = rng.uniform(0.25, 1.75);
      const double sign = rng.next_bool() ? -1.0 : 1.0;
      g(e.to - 1, e.from - 1) = sign * magnitude;
    }

    RealMatrix a = RealMatrix::identity(n) - g;
    if (std::abs(determinant(a)) < kDetFloor) continue;

    RealMatrix t;
    try {
      t = invert(a);
    } catch (const SingularMatrix&) {
      continue;
    }
    zero_structural_t_entries(pattern, t);
    const double residual = max_abs_diff(a * t, RealMatrix::identity(n));
    if (residual > 1e-9 * relative_residual_scale(t)) continue;

    return NumericInstance{pattern, std::move(g), std::move(t), seed};
  }
  throw WellPosednessFailure(kMaxAttempts);
}

/// Maximum residuals of the algebraic identities tying T to G:
///   diagonal:     T_ii = 1 + sum_j T_ij G_ji
///   off-diagonal: T_ik = sum_j T_ij G_jk          (k != i)
///   commutation:  G T  = T G
/// All hold exactly for T = (I - G)^{-1}; the residuals measure numerical
/// error only. `scale` normalizes them: residual/scale is the relative form.
struct IdentityReport {
  double diagonal_residual = 0.0;
  double off_diagonal_residual = 0.0;
  double commutation_residual = 0.0;
  double scale = 1.0;

  double max_relative() const {
    return std::max({diagonal_residual, off_diagonal_residual, commutation_residual}) / scale;
  }
};

inline IdentityReport check_identities(const NumericInstance& inst) {
  const RealMatrix& g = inst.g;
  const RealMatrix& t = inst.t;
  const int n = t.rows();

  IdentityReport report;
  report.scale = relative_residual_scale(t);

  const RealMatrix tg = t * g;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double residual = std::abs(t(i, k) - tg(i, k) - (i == k ? 1.0 : 0.0));
      if (i == k)
        report.diagonal_residual = std::max(report.diagonal_residual, residual);
      else
        report.off_diagonal_residual = std::max(report.off_diagonal_residual, residual);
    }
  }
  report.commutation_residual = max_abs_diff(g * t, tg);
  return report;
}

/// Witness of the structural rank deficiency created by an unexcited dource.
///
/// With the partition (D, O, I, S) around a dource D, the row of T at D
/// restricted to columns != D is exactly G_{D,I} times the corresponding
/// rows at I, so the block matrix [T_{D,[O I S]}; T_{I,[O I S]}] loses one
/// rank regardless of the parameter values.
struct DependenceReport {
  NodeId dource = 0;
  NodeId witness = 0;
  double dependence_residual = 0.0;  // relative to max(1, max|T|)
  int block_rank = 0;
  int block_rows = 0;  // 1 + |I|; the rank must fall short of this

  bool rank_deficient() const { return block_rank < block_rows; }
};

inline DependenceReport dependence_witness(const NumericInstance& inst, NodeId d,
                                           const DourcePartition& part) {
  if (part.dource != d)
    throw ValidationError("partition does not belong to node " + std::to_string(d));

  const RealMatrix& t = inst.t;
  const RealMatrix& g = inst.g;

  std::vector<NodeId> cols;
  cols.push_back(part.witness);
  cols.insert(cols.end(), part.in_neighbors.begin(), part.in_neighbors.end());
  cols.insert(cols.end(), part.rest.begin(), part.rest.end());

  std::vector<NodeId> rows;
  rows.push_back(d);
  rows.insert(rows.end(), part.in_neighbors.begin(), part.in_neighbors.end());

  const RealMatrix block = node_submatrix(t, rows, cols);

  DependenceReport report;
  report.dource = d;
  report.witness = part.witness;
  report.block_rows = static_cast<int>(rows.size());
  report.block_rank = numerical_rank(block);

  double residual = 0.0;
  for (NodeId k : cols) {
    double predicted = 0.0;
    for (NodeId i : part.in_neighbors) predicted += g(d - 1, i - 1) * t(i - 1, k - 1);
    residual = std::max(residual, std::abs(t(d - 1, k - 1) - predicted));
  }
  report.dependence_residual = residual / relative_residual_scale(t);
  return report;
}

}  // namespace netident
