#include <gtest/gtest.h>

#include <cmath>

#include "polytrig/sector_area.hpp"
#include "support/oracles.hpp"

using namespace polytrig;
using polytrig::testing::kEps;

namespace {

const CirclePoint kTop = point_from_ordinate(1.0);
const CirclePoint kBottom = point_from_ordinate(0.0);
const CirclePoint kSix = point_from_ordinate(0.6);

double host_sector(double ya, double yb) { return 0.5 * polytrig::testing::host_arc(ya, yb); }

}  // namespace

TEST(SectorSandwich, QuarterCircleLevels) {
  const SectorSandwich s0 = sector_sandwich(kTop, kBottom, 0);
  EXPECT_NEAR(s0.inner_area, 0.5, 2 * kEps);
  EXPECT_NEAR(s0.outer_area, 1.0, 2 * kEps);
  EXPECT_NEAR(s0.gap, 0.5, 2 * kEps);

  const SectorSandwich s1 = sector_sandwich(kTop, kBottom, 1);
  EXPECT_NEAR(s1.inner_area, 0.70710678118654752, 4 * kEps);
  EXPECT_NEAR(s1.outer_area, 0.82842712474619010, 4 * kEps);
  EXPECT_NEAR(s1.gap, 0.12132034355964257, 4 * kEps);

  EXPECT_NEAR(inner_polygon_area(kTop, kBottom, 2), 0.76536686473017954, 8 * kEps);
  EXPECT_NEAR(outer_polygon_area(kTop, kBottom, 2), 0.79564946951863203, 8 * kEps);
}

TEST(SectorSandwich, GapMatchesDifference) {
  polytrig::testing::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [ya, yb] = rng.arc();
    const CirclePoint a = point_from_ordinate(ya);
    const CirclePoint b = point_from_ordinate(yb);
    for (int m = 0; m <= 20; ++m) {
      const SectorSandwich s = sector_sandwich(a, b, m);
      const BisectionRecord r = length_sequence(a, b, m).back();
      const double closed = 0.5 * r.total_length * r.height * (1.0 / (r.height * r.height) - 1.0);
      EXPECT_NEAR(s.gap, closed, 8 * kEps * s.outer_area);
      if (m <= 8) {
        EXPECT_NEAR(s.gap, s.outer_area - s.inner_area, 16 * kEps * s.outer_area);
      }
    }
  }
}

TEST(SectorSandwich, NestedAndEnclosing) {
  polytrig::testing::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [ya, yb] = rng.arc();
    const CirclePoint a = point_from_ordinate(ya);
    const CirclePoint b = point_from_ordinate(yb);
    const double exact = host_sector(ya, yb);
    SectorSandwich prev = sector_sandwich(a, b, 0);
    for (int m = 1; m <= 20; ++m) {
      const SectorSandwich s = sector_sandwich(a, b, m);
      EXPECT_GE(s.inner_area, prev.inner_area - 8 * kEps);
      EXPECT_LE(s.outer_area, prev.outer_area + 8 * kEps);
      EXPECT_LE(s.gap, prev.gap);
      EXPECT_LE(s.inner_area, exact + 8 * kEps);
      EXPECT_GE(s.outer_area, exact - 8 * kEps);
      prev = s;
    }
  }
}

TEST(SectorSandwich, Errors) {
  EXPECT_THROW(sector_sandwich(kSix, kSix, 0), DegenerateArcError);
  EXPECT_THROW(sector_sandwich(kTop, kBottom, -1), DomainError);
  EXPECT_THROW(sector_sandwich(kTop, kBottom, 63), CapacityError);
}

TEST(GapIterations, Examples) {
  EXPECT_EQ(gap_iterations(kTop, kBottom, 0.3), 1);
  EXPECT_EQ(gap_iterations(kTop, kBottom, 0.5000001), 0);
  EXPECT_EQ(gap_iterations(kTop, kBottom, 0.5), 1);
  EXPECT_EQ(gap_iterations(kSix, kSix, 1e-9), 0);
  EXPECT_THROW(gap_iterations(kTop, kBottom, 0.0), DomainError);
  EXPECT_THROW(gap_iterations(kTop, kBottom, 1e-30, 5), NonConvergenceError);
}

TEST(GapIterations, FirstLevelBelowEpsilon) {
  polytrig::testing::Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [ya, yb] = rng.arc();
    const CirclePoint a = point_from_ordinate(ya);
    const CirclePoint b = point_from_ordinate(yb);
    const double eps = std::pow(10.0, -rng.uniform(2.0, 12.0));
    const int m = gap_iterations(a, b, eps);
    EXPECT_LT(sector_sandwich(a, b, m).gap, eps);
    if (m > 0) {
      EXPECT_GE(sector_sandwich(a, b, m - 1).gap, eps);
    }
  }
}

TEST(HeightCriterion, SufficientForGap) {
  polytrig::testing::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [ya, yb] = rng.arc();
    const CirclePoint a = point_from_ordinate(ya);
    const CirclePoint b = point_from_ordinate(yb);
    const double eps = std::pow(10.0, -rng.uniform(2.0, 10.0));
    const int level = height_criterion_level(a, b, eps);
    EXPECT_GE(level, gap_iterations(a, b, eps));
    EXPECT_LT(sector_sandwich(a, b, level).gap, eps);
    EXPECT_TRUE(height_criterion_holds(a, b, eps, level + 1));
  }
}

TEST(SectorArea, QuarterCircle) {
  const CertifiedValue r = sector_area(kTop, kBottom, 1e-9);
  EXPECT_TRUE(r.enclosure.contains(polytrig::testing::kPi / 4.0));
  EXPECT_LE(r.enclosure.width(), 1e-9);
  EXPECT_EQ(r.report.quantity, Quantity::sector_area);
  EXPECT_EQ(r.report.stop_reason, StopReason::tolerance_met);
}

TEST(SectorArea, EmptyArc) {
  const CertifiedValue r = sector_area(kSix, kSix, 1e-9);
  EXPECT_EQ(r.enclosure, (Enclosure{0.0, 0.0}));
}

TEST(SectorArea, EnclosureSoundOnRandomArcs) {
  polytrig::testing::Rng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [ya, yb] = rng.arc();
    const double tol = std::pow(10.0, -rng.uniform(4.0, 12.0));
    const CertifiedValue r = sector_area(point_from_ordinate(ya), point_from_ordinate(yb), tol);
    EXPECT_TRUE(r.enclosure.contains(host_sector(ya, yb))) << ya << " " << yb;
    EXPECT_LE(r.enclosure.width(), tol);
    for (const ReportRow& row : r.report.rows) {
      EXPECT_LE(row.inner_area, row.outer_area);
    }
  }
}

TEST(SectorArea, ConvergenceError) {
  EXPECT_THROW(sector_area(kTop, kBottom, 1e-9, 3), NonConvergenceError);
  EXPECT_THROW(sector_area(kTop, kBottom, -1.0), DomainError);
}

TEST(Ratio, Examples) {
  EXPECT_NEAR(verify_ratio(kTop, kBottom, 1e-9), 2.0, 1e-8);
  EXPECT_NEAR(verify_ratio(kBottom, kSix, 1e-9), 2.0, 1e-8);
  EXPECT_THROW(verify_ratio(kSix, kSix, 1e-9), DegenerateArcError);
}

TEST(Ratio, ShortArcsStayAccurate) {
  const CirclePoint a = point_from_ordinate(0.4);
  const CirclePoint b = point_from_ordinate(0.4 + 1e-6);
  const RatioResult r = verify_ratio_detailed(a, b, 1e-9);
  EXPECT_NEAR(r.ratio, 2.0, 1e-8);
  // asin(0.400001) - asin(0.4) at 40 digits; the host difference cancels too much here
  EXPECT_TRUE(r.arc.enclosure.contains(1.0910897109343121e-6));
}

TEST(Ratio, RandomArcsWithinTenTol) {
  polytrig::testing::Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [ya, yb] = rng.arc();
    EXPECT_NEAR(verify_ratio(point_from_ordinate(ya), point_from_ordinate(yb), 1e-9), 2.0, 1e-8);
  }
}

TEST(Monotonicity, LongerArcHasLargerEnclosures) {
  polytrig::testing::Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [y1, y0] = rng.arc();
    const double y2 = y1 + (1.0 - y1) * rng.uniform(0.01, 1.0);
    if (y2 <= y1) continue;
    const CirclePoint p0 = point_from_ordinate(y0);
    const CirclePoint p1 = point_from_ordinate(y1);
    const CirclePoint p2 = point_from_ordinate(y2);
    const double tol = 1e-10;
    const Enclosure short_arc = arc_length(p0, p1, tol).enclosure;
    const Enclosure long_arc = arc_length(p0, p2, tol).enclosure;
    if (polytrig::testing::host_arc(y2, y1) > 4 * tol) {
      EXPECT_LT(short_arc.hi, long_arc.lo);
      EXPECT_LT(sector_area(p0, p1, tol).enclosure.hi, sector_area(p0, p2, tol).enclosure.lo);
    }
  }
}
