#include "netident/matrix.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "netident/fixtures.hpp"
#include "netident/instance.hpp"
#include "netident/rng.hpp"
#include "support/test_support.hpp"

namespace netident {
namespace {

TEST(Invert, IdentityIsItsOwnInverse) {
  const RealMatrix id = RealMatrix::identity(3);
  EXPECT_LT(max_abs_diff(invert(id), id), 1e-14);
}

TEST(Invert, UnitLowerTriangular) {
  const double g = 0.9;
  const RealMatrix m = RealMatrix::from_rows({{1.0, 0.0}, {-g, 1.0}});
  const RealMatrix expected = RealMatrix::from_rows({{1.0, 0.0}, {g, 1.0}});
  EXPECT_LT(max_abs_diff(invert(m), expected), 1e-14);
}

TEST(Invert, SingularMatrixCarriesPivot) {
  const RealMatrix m = RealMatrix::from_rows({{1.0, 2.0}, {2.0, 4.0}});
  try {
    invert(m);
    FAIL() << "expected SingularMatrix";
  } catch (const SingularMatrix& e) {
    EXPECT_LT(e.smallest_pivot(), 1e-12);
  }
}

TEST(Invert, ExampleBMatchesClosedForm) {
  const auto pattern = fixtures::example_b();
  for (std::uint64_t seed : {7ULL, 21ULL, 1234ULL}) {
    const auto inst = sample_instance(pattern, seed);
    const RealMatrix t = invert(RealMatrix::identity(5) - inst.g);
    const RealMatrix oracle = testsupport::example_b_closed_form_t(inst.g);
    EXPECT_LT(max_abs_diff(t, oracle) / oracle.max_abs(), 1e-12);
    EXPECT_NEAR(t(3, 3), 1.0, 1e-12);  // source row/column structure
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(t(i, 4), 0.0, 1e-15);
    EXPECT_NEAR(t(4, 4), 1.0, 1e-12);
  }
}

TEST(Invert, RoundTripIsIdentity) {
  RandomStream rng(99, 0);
  RealMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rng.uniform(-1.0, 1.0) + (i == j ? 3.0 : 0.0);
  EXPECT_LT(max_abs_diff(invert(invert(m)), m) / m.max_abs(), 1e-8);
}

TEST(NumericalRank, DependentRowStructure) {
  // Block matrix around an unexcited dource in the example-a fixture: the
  // first row is 0.7 * row2 + 1.3 * row3 for any such values.
  const RealMatrix m = RealMatrix::from_rows({{0.0, 0.7, 1.3, 0.0},
                                              {0.0, 1.0, 0.0, 0.0},
                                              {0.0, 0.0, 1.0, 0.0}});
  EXPECT_EQ(numerical_rank(m), 2);
}

TEST(NumericalRank, ZeroMatrix) {
  EXPECT_EQ(numerical_rank(RealMatrix(3, 5)), 0);
}

TEST(NumericalRank, AgreesWithDeterminantOracle) {
  // Dense 5-node pattern: full rank iff the determinant is nonzero.
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= 5; ++i)
    for (NodeId j = 1; j <= 5; ++j)
      if (i != j) edges.push_back({i, j});
  const NetworkPattern dense(5, edges);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
    const auto inst = sample_instance(dense, seed);
    const bool det_nonzero = std::abs(determinant(inst.g)) > 1e-9;
    EXPECT_EQ(numerical_rank(inst.g) == 5, det_nonzero);
    EXPECT_EQ(numerical_rank(inst.t), 5);
  }
}

TEST(NumericalRank, InvariantUnderPermutationAndScaling) {
  RandomStream rng(4242, 0);
  for (int trial = 0; trial < 20; ++trial) {
    RealMatrix m(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = rng.next_bool() ? rng.uniform(-2.0, 2.0) : 0.0;
    // Make one row dependent so both full- and deficient-rank cases appear.
    if (trial % 2 == 0)
      for (int j = 0; j < 6; ++j) m(3, j) = 0.5 * m(0, j) - 2.0 * m(1, j);

    const int base = numerical_rank(m);

    RealMatrix permuted(4, 6);
    const int row_perm[4] = {2, 0, 3, 1};
    const int col_perm[6] = {5, 3, 0, 1, 4, 2};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) permuted(i, j) = m(row_perm[i], col_perm[j]);
    EXPECT_EQ(numerical_rank(permuted), base);

    for (double scale : {1e3, 1e-3}) {
      RealMatrix scaled = m;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) scaled(i, j) *= scale;
      EXPECT_EQ(numerical_rank(scaled), base);
    }

    EXPECT_EQ(numerical_rank(m.transposed()), base);
  }
}

TEST(SolveRowSystem, IdentityCoefficient) {
  const RealMatrix b = RealMatrix::from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
  const RealMatrix x = solve_xa_eq_b(RealMatrix::identity(3), b);
  EXPECT_LT(max_abs_diff(x, b), 1e-12);
}

TEST(SolveRowSystem, RecoversPlantedRowOfG) {
  // Row 2 of G in the example-b fixture from the columns of T at the
  // excited nodes {1, 2, 4}: the system X * A = B with X = [G21 G23 G24].
  const auto pattern = fixtures::example_b();
  for (std::uint64_t seed : {5ULL, 17ULL}) {
    const auto inst = sample_instance(pattern, seed);
    const auto& t = inst.t;
    const RealMatrix coeff = node_submatrix(t, {1, 3, 4}, {1, 2, 4});
    RealMatrix rhs(1, 3);
    rhs(0, 0) = t(1, 0);
    rhs(0, 1) = t(1, 1) - 1.0;
    rhs(0, 2) = t(1, 3);
    const RealMatrix solved = solve_xa_eq_b(coeff, rhs);
    EXPECT_NEAR(solved(0, 0), inst.g(1, 0), 1e-8 * std::abs(inst.g(1, 0)));
    EXPECT_NEAR(solved(0, 1), inst.g(1, 2), 1e-8 * std::abs(inst.g(1, 2)));
    EXPECT_NEAR(solved(0, 2), inst.g(1, 3), 1e-8 * std::abs(inst.g(1, 3)));
  }
}

TEST(SolveRowSystem, RankDeficientCoefficientIsRejected) {
  // The deficient block matrix from the example-a fixture cannot determine
  // the three unknown entries.
  const auto inst = sample_instance(fixtures::example_a(), 11);
  const auto part = dource_partition(inst.pattern, 1);
  std::vector<NodeId> cols = {part.witness};
  cols.insert(cols.end(), part.in_neighbors.begin(), part.in_neighbors.end());
  cols.insert(cols.end(), part.rest.begin(), part.rest.end());
  std::vector<NodeId> rows = {1};
  rows.insert(rows.end(), part.in_neighbors.begin(), part.in_neighbors.end());
  const RealMatrix coeff = node_submatrix(inst.t, rows, cols);
  const RealMatrix rhs(1, coeff.cols());
  try {
    solve_xa_eq_b(coeff, rhs);
    FAIL() << "expected RankDeficient";
  } catch (const RankDeficient& e) {
    EXPECT_EQ(e.achieved_rank(), 2);
    EXPECT_EQ(e.required_rank(), 3);
  }
}

}  // namespace
}  // namespace netident
