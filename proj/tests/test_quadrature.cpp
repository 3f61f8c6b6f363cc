#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ptrig/errors.hpp"
#include "ptrig/quadrature.hpp"

using namespace ptrig;

TEST(TanhSinh, Polynomial) {
  const auto r = tanh_sinh([](double t, double, double) { return 3 * t * t; }, 0, 2);
  EXPECT_NEAR(r.value, 8.0, 1e-14);
  EXPECT_GT(r.evaluations, 0);
}

TEST(TanhSinh, EmptyInterval) {
  EXPECT_EQ(tanh_sinh([](double, double, double) { return 1.0; }, 0.5, 0.5).value, 0.0);
}

TEST(TanhSinh, InverseSquareRootSingularity) {
  // int_0^1 (1 - t^2)^{-1/2} dt = pi/2, evaluated through the distance to the right end.
  const auto r = tanh_sinh(
      [](double t, double, double d_hi) { return 1.0 / std::sqrt(d_hi * (1.0 + t)); }, 0, 1);
  EXPECT_NEAR(r.value, std::numbers::pi / 2, 1e-14);
}

TEST(TanhSinh, LogSingularityAtLeft) {
  const auto r = tanh_sinh([](double, double d_lo, double) { return std::log(d_lo); }, 0, 1);
  EXPECT_NEAR(r.value, -1.0, 1e-14);
}

TEST(TanhSinh, EndpointDistancesAreAccurate) {
  // Distances must be consistent with t and never vanish.
  bool ok = true;
  tanh_sinh(
      [&](double t, double d_lo, double d_hi) {
        if (!(d_lo > 0 && d_hi > 0)) ok = false;
        if (std::abs((t - 2.0) - d_lo) > 1e-15 * 4 || std::abs((5.0 - t) - d_hi) > 1e-15 * 8) ok = false;
        return t;
      },
      2, 5);
  EXPECT_TRUE(ok);
}

TEST(TanhSinh, ReportsNonConvergence) {
  QuadratureOptions opts;
  opts.max_level = 2;
  opts.abs_tol = opts.rel_tol = 1e-300;
  EXPECT_THROW(tanh_sinh([](double t, double, double) { return std::sin(200 * t); }, 0, 1, opts),
               ConvergenceError);
}

TEST(TanhSinh, RejectsReversedInterval) {
  EXPECT_THROW(tanh_sinh([](double, double, double) { return 1.0; }, 1, 0), DomainError);
}
