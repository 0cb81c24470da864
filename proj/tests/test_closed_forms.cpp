#include "oracles.hpp"

#include <pentakirch/closed_forms.hpp>
#include <pentakirch/decimal.hpp>
#include <pentakirch/exact.hpp>
#include <pentakirch/spectral.hpp>
#include <pentakirch/published_table.hpp>

#include <gtest/gtest.h>

using namespace pentakirch;

namespace {

constexpr Variant kBoth[] = {Variant::Cylinder, Variant::Moebius};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST(KirchhoffClosed, SmallValues) {
  EXPECT_EQ(kirchhoff_closed({Variant::Cylinder, 2}), BigRational(469, 12));
  EXPECT_EQ(kirchhoff_closed({Variant::Moebius, 2}), BigRational(77, 2));
  EXPECT_NEAR(to_double(kirchhoff_closed({Variant::Cylinder, 10})), 2679.717254, 5e-7);
  EXPECT_EQ(to_decimal(kirchhoff_closed({Variant::Cylinder, 2}), 6), "39.083333");
}

TEST(KirchhoffClosed, RejectsShortChain) {
  EXPECT_THROW(kirchhoff_closed({Variant::Cylinder, 1}), std::domain_error);
  EXPECT_THROW(spanning_trees_closed({Variant::Moebius, 0}), std::domain_error);
  EXPECT_THROW(wiener_closed({Variant::Moebius, 1}), std::domain_error);
}

TEST(KirchhoffClosed, MatchesExactCharPoly) {
  for (int n = 2; n <= 8; ++n)
    for (Variant v : kBoth) EXPECT_EQ(kirchhoff_closed({v, n}), kirchhoff_exact(build_chain({v, n}))) << n;
}

TEST(KirchhoffClosed, MatchesFloatOracles) {
  for (int n = 2; n <= 20; ++n)
    for (Variant v : kBoth) {
      const double closed = to_double(kirchhoff_closed({v, n}));
      const Graph g = build_chain({v, n});
      EXPECT_LT(rel(closed, kirchhoff_spectral(g)), 1e-8);
      EXPECT_LT(rel(closed, oracle::kirchhoff_by_resistances(g.vertex_count(), oracle::chain_edges(n, v == Variant::Moebius))),
                1e-8);
    }
}

TEST(KirchhoffClosed, MoebiusIsSmaller) {
  for (int n = 2; n <= 60; ++n) {
    EXPECT_LT(kirchhoff_closed({Variant::Moebius, n}), kirchhoff_closed({Variant::Cylinder, n}));
    EXPECT_LT(wiener_closed({Variant::Moebius, n}), wiener_closed({Variant::Cylinder, n}));
  }
}

TEST(SpanningTreesClosed, Values) {
  EXPECT_EQ(spanning_trees_closed({Variant::Cylinder, 2}), 768);
  EXPECT_EQ(spanning_trees_closed({Variant::Moebius, 2}), 800);
  EXPECT_EQ(spanning_trees_closed({Variant::Cylinder, 3}), 23232);
}

TEST(SpanningTreesClosed, MatchesMatrixTree) {
  for (int n = 2; n <= 30; ++n) {
    const BigInteger cyl = spanning_trees_closed({Variant::Cylinder, n});
    const BigInteger moe = spanning_trees_closed({Variant::Moebius, n});
    EXPECT_EQ(cyl, spanning_tree_count(build_pentagonal_cylinder(n))) << n;
    EXPECT_EQ(moe, spanning_tree_count(build_pentagonal_moebius(n))) << n;
    EXPECT_EQ(moe - cyl, BigInteger(n) << static_cast<unsigned>(n + 2));
  }
}

TEST(WienerClosed, Values) {
  EXPECT_EQ(wiener_closed({Variant::Cylinder, 2}), 86);
  EXPECT_EQ(wiener_closed({Variant::Moebius, 3}), 243);
  EXPECT_EQ(wiener_closed({Variant::Cylinder, 99}), 6152553);
}

TEST(WienerClosed, MatchesBfs) {
  for (int n = 2; n <= 50; ++n)
    for (Variant v : kBoth) EXPECT_EQ(wiener_closed({v, n}), BigInteger(wiener_index_bfs(build_chain({v, n})))) << n;
}

TEST(WienerClosed, IntegralUpToThousand) {
  for (int n = 2; n <= 1000; ++n)
    for (Variant v : kBoth) EXPECT_NO_THROW(wiener_closed({v, n}));
}

TEST(BetaClosed, IntegralAndPositive) {
  EXPECT_EQ(beta_closed_form(2), 140);
  EXPECT_EQ(beta_closed_form(3), 2079);
  EXPECT_EQ(beta_closed_form(4), 27440);
  EXPECT_EQ(beta_closed_form(5), 339535);
  for (int n = 2; n <= 100; ++n) {
    EXPECT_GT(beta_closed_form(n), 0);
    EXPECT_EQ(beta_closed_form(n), beta_by_convolution(n)) << n;
  }
}

TEST(RatioSeries, KnownCells) {
  const auto cyl = ratio_series(Variant::Cylinder, 20);
  EXPECT_NEAR(cyl.back().ratio, 2.81012729783, 1e-8);
  EXPECT_NEAR(cyl[8].ratio, 2.66819194799, 1e-8);  // n = 10
  const auto moe = ratio_series(Variant::Moebius, 2);
  ASSERT_EQ(moe.size(), 1u);
  EXPECT_NEAR(moe.front().ratio, 2.12987012987, 1e-8);
}

// The exact ratios at these two cells differ from the printed table values
// 2.200426458 (P_2) and 2.95663768188 (P'_99) by more than 1e-8; the printed
// Moebius cell equals 6152355 / 2080862, i.e. W over a truncated Kf.
TEST(RatioSeries, ExactValuesAtDisputedCells) {
  EXPECT_EQ(BigRational(wiener_closed({Variant::Cylinder, 2})) / kirchhoff_closed({Variant::Cylinder, 2}),
            BigRational(1032, 469));
  EXPECT_NEAR(ratio_series(Variant::Cylinder, 2).front().ratio, 2.2004264392324096, 1e-15);
  const auto moe = ratio_series(Variant::Moebius, 99);
  EXPECT_NEAR(moe.back().ratio, 2.95663716599, 1e-11);
  EXPECT_NEAR(6152355.0 / 2080862.0, 2.95663768188, 1e-11);
}

TEST(RatioSeries, StrictlyIncreasingBelowThree) {
  for (Variant v : kBoth) {
    const auto rows = ratio_series(v, 99);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
    EXPECT_LT(rows.back().ratio, 3.0);
  }
}

TEST(Decimal, RoundHalfEven) {
  EXPECT_EQ(to_decimal(BigRational(1, 8), 2), "0.12");
  EXPECT_EQ(to_decimal(BigRational(3, 8), 2), "0.38");
  EXPECT_EQ(to_decimal(BigRational(-1, 3), 3), "-0.333");
  EXPECT_EQ(to_decimal(BigRational(77, 2), 6), "38.500000");
  EXPECT_EQ(to_decimal(BigRational(5, 2), 0), "2");
  EXPECT_EQ(to_decimal(BigRational(7, 2), 0), "4");
}

TEST(Decimal, ParseAndPlaces) {
  EXPECT_EQ(parse_decimal("2.12987012987"), BigRational(212987012987LL, 100000000000LL));
  EXPECT_EQ(parse_decimal("-1.5"), BigRational(-3, 2));
  EXPECT_EQ(decimal_places("2.660728474"), 9);
  EXPECT_EQ(decimal_places("86"), 0);
  EXPECT_THROW(parse_decimal("1.2.3"), std::invalid_argument);
}

TEST(PublishedTable, KirchhoffAndWienerCells) {
  for (const auto& row : kPublishedTable) {
    const auto cmp = compare_published_row(row);
    ASSERT_EQ(cmp.cells.size(), 6u);
    for (std::size_t c : {0u, 1u, 3u, 4u}) EXPECT_TRUE(cmp.cells[c].matches) << row.n << " " << cmp.cells[c].column;
  }
}

TEST(PublishedTable, RatioCellsOtherThanTheTwoDisputed) {
  for (const auto& row : kPublishedTable) {
    const auto cmp = compare_published_row(row);
    EXPECT_EQ(cmp.cells[2].matches, row.n != 2) << row.n;
    EXPECT_EQ(cmp.cells[5].matches, row.n != 99) << row.n;
  }
}
