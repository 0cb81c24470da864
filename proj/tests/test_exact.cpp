#include "oracles.hpp"

#include <pentakirch/decomposition.hpp>
#include <pentakirch/exact.hpp>
#include <pentakirch/graph.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace pentakirch;

namespace {

using IntMatrix = DenseMatrix<BigInteger>;

Graph triangle() {
  const std::vector<Graph::Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return Graph::from_edges(3, e);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t order, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(Bareiss, Identity) { EXPECT_EQ(det_bareiss(IntMatrix::identity(5)), 1); }

TEST(Bareiss, TridiagonalR) {
  EXPECT_EQ(det_bareiss(tridiagonal_r(4)), 5);
  EXPECT_EQ(det_bareiss(tridiagonal_r_marked(4, 2)), 11);
}

TEST(Bareiss, ZeroPivotNeedsRowSwap) {
  EXPECT_EQ(det_bareiss(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(det_bareiss(IntMatrix::from_rows({{0, 2, 1}, {0, 1, 3}, {4, 0, 0}})), 20);
}

TEST(Bareiss, SingularMatrices) {
  EXPECT_EQ(det_bareiss(IntMatrix::from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(det_bareiss(IntMatrix::from_rows({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}})), 0);
  EXPECT_EQ(det_bareiss(laplacian<BigInteger>(build_pentagonal_cylinder(2))), 0);
}

TEST(Bareiss, EmptyAndScalar) {
  EXPECT_EQ(det_bareiss(IntMatrix(0)), 1);
  EXPECT_EQ(det_bareiss(IntMatrix::from_rows({{-7}})), -7);
}

TEST(Bareiss, AgreesWithLaplaceExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto order = static_cast<std::size_t>(1 + trial % 7);
    const auto m = random_matrix(rng, order, trial % 3 == 0 ? 0 : -4, 4);
    EXPECT_EQ(det_bareiss(m), oracle::det_laplace(m)) << "trial " << trial;
  }
}

TEST(Bareiss, RDeterminantFormulas) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(det_bareiss(tridiagonal_r(n)), BigInteger(n % 2 == 0 ? 1 + n : -(1 + n))) << "n=" << n;
  }
  for (int n = 1; n <= 25; ++n)
    for (int m = 1; m <= n; ++m) {
      const int magnitude = 1 + n + m + m * n - m * m;
      EXPECT_EQ(det_bareiss(tridiagonal_r_marked(n, m)), BigInteger(n % 2 == 0 ? magnitude : -magnitude))
          << "n=" << n << " m=" << m;
    }
  EXPECT_THROW(tridiagonal_r_marked(3, 4), std::domain_error);
  EXPECT_THROW(tridiagonal_r(0), std::domain_error);
}

TEST(Bareiss, RankOneUpdateUnitVectors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto order = static_cast<std::size_t>(2 + trial % 5);
    const auto m = random_matrix(rng, order);
    const BigInteger base = det_bareiss(m);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        IntMatrix updated = m;
        updated(i, j) += 1;  // M + e_i e_j^T
        EXPECT_EQ(det_bareiss(updated), base + cofactor(m, i, j));
      }
  }
}

TEST(CharPoly, SingleEdge) {
  const auto p = char_poly_rational(to_rational(laplacian<BigInteger>(Graph::from_edges(2, std::vector<Graph::Edge>{{0, 1}}))));
  EXPECT_EQ(p, (Polynomial<BigRational>{{0, -2, 1}}));
  EXPECT_EQ(coefficient(p, 1), -2);
}

TEST(CharPoly, AntisymmetricBlockConstantTerm) {
  const auto ls = build_decomposition(2, Variant::Cylinder).l_s;
  const auto p = char_poly_rational(to_rational(ls));
  EXPECT_EQ(coefficient(p, 0), 96);
  EXPECT_EQ(det_bareiss(ls), 96);
  EXPECT_EQ(coefficient(p, 4), 1);
}

TEST(CharPoly, ConnectedLaplacianHasSimpleZero) {
  const auto p = char_poly_rational(to_rational(laplacian<BigInteger>(build_pentagonal_cylinder(2))));
  EXPECT_EQ(p.degree(), 10u);
  EXPECT_EQ(coefficient(p, 0), 0);
  EXPECT_NE(coefficient(p, 1), 0);
}

TEST(CharPoly, CoefficientOutOfRange) {
  const Polynomial<BigRational> p{{0, -2, 1}};
  EXPECT_THROW(coefficient(p, 3), std::domain_error);
  EXPECT_THROW(coefficient(p, -1), std::domain_error);
}

TEST(CharPoly, ConstantTermMatchesDeterminant) {
  std::mt19937 rng(3);
  for (std::size_t order = 1; order <= 12; ++order) {
    const auto m = random_matrix(rng, order);
    const auto p = char_poly_rational(to_rational(m));
    const BigInteger det = det_bareiss(m);
    EXPECT_EQ(coefficient(p, 0), BigRational(order % 2 == 0 ? det : BigInteger(-det))) << "order " << order;
    EXPECT_EQ(coefficient(p, static_cast<long>(order)), 1);
  }
}

TEST(CharPoly, LinearCoefficientIsSumOfCofactors) {
  for (Variant v : {Variant::Cylinder, Variant::Moebius})
    for (int n : {2, 3, 4}) {
      const Graph g = build_chain({v, n});
      const auto l = laplacian<BigInteger>(g);
      const auto p = char_poly_rational(to_rational(l));
      BigInteger minors = 0;
      for (std::size_t i = 0; i < l.order(); ++i) minors += det_bareiss(l.without(i));
      const std::size_t order = l.order();
      const BigInteger sign = (order - 1) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(coefficient(p, 1), BigRational(sign * minors));
      EXPECT_EQ(minors, BigInteger(static_cast<long>(order)) * spanning_tree_count(g));
    }
}

TEST(SpanningTrees, Fixtures) {
  EXPECT_EQ(spanning_tree_count(triangle()), 3);
  EXPECT_EQ(spanning_tree_count(Graph::from_edges(3, std::vector<Graph::Edge>{{0, 1}})), 0);
}

TEST(SpanningTrees, SmallChainsAgainstEnumeration) {
  const Graph p2 = build_pentagonal_cylinder(2);
  const Graph q2 = build_pentagonal_moebius(2);
  EXPECT_EQ(spanning_tree_count(p2), 768);
  EXPECT_EQ(spanning_tree_count(q2), 800);
  EXPECT_EQ(oracle::spanning_trees_bruteforce(10, oracle::chain_edges(2, false)), 768u);
  EXPECT_EQ(oracle::spanning_trees_bruteforce(10, oracle::chain_edges(2, true)), 800u);
}

TEST(SpanningTrees, IndependentOfDeletedVertex) {
  for (Variant v : {Variant::Cylinder, Variant::Moebius})
    for (int n : {2, 3}) {
      const Graph g = build_chain({v, n});
      const BigInteger reference = spanning_tree_count(g, 0);
      for (std::size_t k = 1; k < g.vertex_count(); ++k) EXPECT_EQ(spanning_tree_count(g, k), reference);
    }
}

TEST(ExactResistance, Triangle) {
  const auto r = resistance_exact(triangle());
  EXPECT_EQ(r(0, 1), BigRational(2, 3));
  EXPECT_EQ(r(1, 2), BigRational(2, 3));
  EXPECT_EQ(r(0, 0), 0);
}

TEST(ExactResistance, MatchesEigenOracle) {
  for (Variant v : {Variant::Cylinder, Variant::Moebius}) {
    const Graph g = build_chain({v, 3});
    const auto exact = resistance_exact(g);
    const auto reference = oracle::resistances(g.vertex_count(), oracle::chain_edges(3, v == Variant::Moebius));
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = 0; j < g.vertex_count(); ++j)
        EXPECT_NEAR(to_double(exact(i, j)), reference(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)),
                    1e-10);
  }
}

TEST(ExactResistance, DisconnectedRejected) {
  EXPECT_THROW(resistance_exact(Graph::from_edges(3, std::vector<Graph::Edge>{{0, 1}})), std::domain_error);
  EXPECT_THROW(kirchhoff_exact(Graph::from_edges(3, std::vector<Graph::Edge>{{0, 1}})), std::domain_error);
}

TEST(ExactKirchhoff, SmallChains) {
  EXPECT_EQ(kirchhoff_exact(build_pentagonal_cylinder(2)), BigRational(469, 12));
  EXPECT_EQ(kirchhoff_exact(build_pentagonal_moebius(2)), BigRational(77, 2));
  EXPECT_EQ(kirchhoff_exact(triangle()), 2);
}

TEST(Inverse, SingularRejected) {
  EXPECT_THROW(inverse_rational(DenseMatrix<BigRational>::from_rows({{1, 2}, {2, 4}})), std::domain_error);
  const auto a = DenseMatrix<BigRational>::from_rows({{0, 2}, {3, 1}});
  EXPECT_EQ(a * inverse_rational(a), DenseMatrix<BigRational>::identity(2));
}
