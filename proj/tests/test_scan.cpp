#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qps/errors.hpp"
#include "qps/scan.hpp"

using namespace qps;

TEST(ScanConfig, Validation) {
  EXPECT_NO_THROW(ScanConfig{}.validate());
  EXPECT_THROW((ScanConfig{15, 1e-10, 1.0}.validate()), ParameterError);
  EXPECT_THROW((ScanConfig{16, 0.0, 1.0}.validate()), ParameterError);
  EXPECT_THROW((ScanConfig{16, 1.0, 1.0}.validate()), ParameterError);
  EXPECT_THROW((ScanConfig{16, 1e-10, 0.0}.validate()), ParameterError);
  EXPECT_THROW((ScanConfig{16, 1e-10, 1.5}.validate()), ParameterError);
}

TEST(GoldenSection, FindsParabolaVertex) {
  const auto found = golden_section_min([](double x) { return (x - 0.3) * (x - 0.3) + 2.0; },
                                        0.0, 1.0, 1e-10);
  EXPECT_NEAR(found.angle, 0.3, 1e-7);  // flat minimum: x resolution ~ sqrt(eps)
  EXPECT_NEAR(found.value, 2.0, 1e-15);
}

TEST(BoundaryMinRe, ConstantSeries) {
  const auto found = boundary_min_re(NormalizedSeries(1), ScanConfig{});
  EXPECT_EQ(found.value, 1.0);
  EXPECT_EQ(boundary_min_re(NormalizedSeries(12), ScanConfig{}).value, 1.0);
}

TEST(BoundaryMinRe, OnePlusZ) {
  const auto found = boundary_min_re(NormalizedSeries({{1.0, 0.0}}, 2), ScanConfig{});
  EXPECT_NEAR(found.value, 0.0, 1e-15);
  EXPECT_NEAR(found.angle, std::numbers::pi, 1e-7);
}

// Re(1 + z/2 + z^2/4) on the circle is 0.75 + c/2 + c^2/2 with c = cos(theta),
// minimized at c = -1/2 with value 5/8.
TEST(BoundaryMinRe, QuadraticClosedForm) {
  const NormalizedSeries u({{0.5, 0.0}, {0.25, 0.0}}, 3);
  const auto found = boundary_min_re(u, ScanConfig{});
  EXPECT_NEAR(found.value, 0.625, 1e-12);
  EXPECT_NEAR(std::cos(found.angle), -0.5, 1e-6);
  EXPECT_NEAR(found.value, oracle::dense_min_re(u, 1.0).value, 1e-8);
}

TEST(BoundaryMinRe, SmallerRadius) {
  // Re(1 + z) at radius r has minimum 1 - r.
  ScanConfig scan;
  scan.radius = 0.4;
  EXPECT_NEAR(boundary_min_re(NormalizedSeries({{1.0, 0.0}}, 2), scan).value, 0.6, 1e-14);
}

TEST(BoundaryMinRe, AgreesWithDenseScan) {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int order = rng.uniform_int(2, 32);
    const auto u = oracle::random_bounded_series(rng, order);
    const auto found = boundary_min_re(u, ScanConfig{});
    const auto dense = oracle::dense_min_re(u, 1.0);
    EXPECT_NEAR(found.value, dense.value, 1e-8) << "order " << order;
    EXPECT_NEAR(found.value, oracle::re_direct(u.coeffs(), 1.0, found.angle), 1e-12);
  }
}
