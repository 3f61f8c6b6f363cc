#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles/reference_values.inc"
#include "ptrig/errors.hpp"
#include "ptrig/specfun.hpp"

using namespace ptrig;

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Gamma, ClassicalValues) {
  EXPECT_EQ(ptrig::gamma(1.0), 1.0);
  EXPECT_NEAR(ptrig::gamma(0.5), std::sqrt(std::numbers::pi), 4e-16);
  // mpmath, 30 digits
  EXPECT_LT(rel(ptrig::gamma(4.0 / 3.0), 0.892979511569249211218564313658), 1e-14);
}

TEST(Gamma, MatchesFrozenOracle) {
  for (const auto& r : kGamma) EXPECT_LT(rel(ptrig::gamma(r.x), r.value), 2e-14) << "x = " << r.x;
}

TEST(Gamma, FactorialRecurrence) {
  for (double x = 0.05; x < 30; x *= 1.37) EXPECT_LT(rel(ptrig::gamma(x + 1), x * ptrig::gamma(x)), 1e-13) << x;
}

TEST(Gamma, RejectsNonPositive) {
  for (double x : {0.0, -1.0, -0.5, std::nan(""), HUGE_VAL}) EXPECT_THROW(ptrig::gamma(x), DomainError) << x;
}

TEST(Digamma, ClassicalValues) {
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-15);
  EXPECT_NEAR(digamma(0.5), -kEulerGamma - 2 * std::numbers::ln2, 1e-15);
  EXPECT_NEAR(digamma(2.0 / 3.0), -1.31823441578658847240234081665, 1e-14);
}

TEST(Digamma, MatchesFrozenOracle) {
  for (const auto& r : kDigamma)
    EXPECT_LT(std::abs(digamma(r.x) - r.value), 1e-14 * (1 + std::abs(r.value))) << "x = " << r.x;
}

TEST(Digamma, RejectsNonPositive) {
  EXPECT_THROW(digamma(0.0), DomainError);
  EXPECT_THROW(digamma(-2.5), DomainError);
}

TEST(Beta, ClassicalValues) {
  EXPECT_NEAR(beta(1, 1), 1.0, 1e-15);
  for (double p : {1.1, 2.0, 3.0, 7.5, 50.0}) EXPECT_LT(rel(beta(1, 1 / p), p), 1e-14) << p;
  const double pi3 = 2 * std::numbers::pi / (3 * std::sin(std::numbers::pi / 3));
  EXPECT_LT(rel(beta(1 - 1.0 / 3, 1.0 / 3), 1.5 * pi3), 1e-14);
}

TEST(Beta, Symmetric) { EXPECT_DOUBLE_EQ(beta(0.3, 2.7), beta(2.7, 0.3)); }

TEST(Beta, RejectsNonPositive) {
  EXPECT_THROW(beta(0, 1), DomainError);
  EXPECT_THROW(beta(1, -1), DomainError);
}

TEST(Hyper2F1, ZeroArgumentIsOne) {
  const EvalResult r = hyper2f1({0.3, 0.7, 1.1, 0.0});
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.abs_error, 0.0);
}

TEST(Hyper2F1, ArcsinRepresentation) {
  const EvalResult r = hyper2f1({0.5, 0.5, 1.5, 0.25});
  EXPECT_NEAR(r.value, std::asin(0.5) / 0.5, 1e-15);
  EXPECT_EQ(r.method, Method::direct_series);
}

TEST(Hyper2F1, TabulatedArcsinAtPThree) {
  const double third = 1.0 / 3.0;
  EXPECT_NEAR(0.5 * hyper2f1({third, third, 1 + third, 0.125}).value, 0.50547, 5e-6);
}

TEST(Hyper2F1, MatchesFrozenOracle) {
  for (const auto& r : kHyper2F1) {
    const EvalResult got = hyper2f1({r.a, r.b, r.c, r.z});
    EXPECT_LT(rel(got.value, r.value), 1e-12)
        << "(" << r.a << ", " << r.b << ", " << r.c << ", " << r.z << ") via " << to_string(got.method);
  }
}

TEST(Hyper2F1, RoutesByArgument) {
  EXPECT_EQ(hyper2f1({0.5, 0.5, 1.5, -0.5}).method, Method::pfaff_transform);
  EXPECT_EQ(hyper2f1({0.5, 0.5, 1.5, 0.9}).method, Method::direct_series);
  EXPECT_EQ(hyper2f1({0.5, 0.5, 1.5, 0.99}).method, Method::connection_formula);
  EXPECT_EQ(hyper2f1({1.5, 2, 2.5, 0.99}).method, Method::euler_transform);
  EXPECT_EQ(hyper2f1({0.5, 0.5, 1.5, 1.0}).method, Method::closed_form);
}

TEST(Hyper2F1, GaussSummationAtOne) {
  const double v = hyper2f1({0.5, 0.5, 1.5, 1.0}).value;
  EXPECT_NEAR(v, std::numbers::pi / 2, 1e-14);
}

TEST(Hyper2F1, ErrorEstimateIsSmallAndNonNegative) {
  for (const auto& r : kHyper2F1) {
    const EvalResult got = hyper2f1({r.a, r.b, r.c, r.z});
    EXPECT_GE(got.abs_error, 0.0);
    EXPECT_LT(got.abs_error, 1e-8 * (1 + std::abs(got.value)));
  }
}

TEST(Hyper2F1, Errors) {
  EXPECT_THROW(hyper2f1({1, 1, 0, 0.5}), DomainError);
  EXPECT_THROW(hyper2f1({1, 1, -2, 0.5}), DomainError);
  EXPECT_THROW(hyper2f1({1, 1, 2, 1.5}), DomainError);
  EXPECT_THROW(hyper2f1({1, 1, 1.5, 1.0}), DomainError);  // c - a - b <= 0 at z = 1
  try {
    hyper2f1({1, 1, 2, 2.0});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "hyper2f1: real argument must satisfy z <= 1");
  }
}

TEST(Hyper2F1Series, AgreesInsideDisc) {
  for (double z : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
    const Hyper2F1Params q{0.7, 1.3, 2.2, z};
    EXPECT_LT(rel(hyper2f1_series(q).value, hyper2f1(q).value), 1e-13) << z;
  }
  EXPECT_THROW(hyper2f1_series({1, 1, 2, 1.0}), DomainError);
}

TEST(Hyper2F1Integral, AgreesWithSeries) {
  const Hyper2F1Params q{0.7, 1.3, 2.2, 0.6};
  const EvalResult r = hyper2f1_integral(q);
  EXPECT_EQ(r.method, Method::quadrature);
  EXPECT_LT(rel(r.value, hyper2f1_series(q).value), 1e-12);
  EXPECT_THROW(hyper2f1_integral({1, 1, 0.5, 0.5}), DomainError);
}

TEST(PfaffTransform, IdentityAtZero) {
  const TransformedParams t = pfaff_transform({0.3, 0.4, 1.7, 0.0});
  EXPECT_EQ(t.prefactor, 1.0);
  EXPECT_EQ(t.params.z, 0.0);
}

TEST(PfaffTransform, ArctanRewrite) {
  const double p = 3, x = 0.8, xp = std::pow(x, p);
  const TransformedParams t = pfaff_transform({1, 1 / p, 1 + 1 / p, -xp});
  EXPECT_NEAR(t.params.z, xp / (1 + xp), 1e-16);
  EXPECT_NEAR(t.params.a, 1 / p, 1e-16);
  EXPECT_NEAR(t.params.b, 1 / p, 1e-16);
  EXPECT_NEAR(t.params.c, 1 + 1 / p, 1e-16);
  EXPECT_NEAR(t.prefactor, std::pow(1 + xp, -1 / p), 1e-16);
}

TEST(PfaffTransform, BothSidesAgree) {
  const Hyper2F1Params q{0.2, 0.7, 1.9, -0.6};
  const TransformedParams t = pfaff_transform(q);
  const double lhs = hyper2f1_series(q).value;
  const double rhs = t.prefactor * hyper2f1_series(t.params).value;
  EXPECT_NEAR(lhs, rhs, 1e-12);
  EXPECT_NEAR(lhs, 0.963016813991977476766598290039, 1e-14);
  EXPECT_THROW(pfaff_transform({1, 1, 2, 1.0}), DomainError);
}

TEST(EulerTransform, ArctanChain) {
  const double p = 4, w = 0.3;
  const TransformedParams t = euler_transform({1, 1, 1 + 1 / p, w});
  EXPECT_NEAR(t.prefactor, std::pow(1 - w, 1 / p - 1), 1e-15);
  EXPECT_NEAR(t.params.a, 1 / p, 1e-15);
  EXPECT_NEAR(t.params.b, 1 / p, 1e-15);
  EXPECT_NEAR(t.params.z, w, 0.0);
}

TEST(EulerTransform, BothSidesAgree) {
  const Hyper2F1Params q{0.8, 0.9, 1.2, 0.5};
  const TransformedParams t = euler_transform(q);
  const double lhs = hyper2f1_series(q).value;
  EXPECT_NEAR(lhs, t.prefactor * hyper2f1_series(t.params).value, 1e-12);
  EXPECT_NEAR(lhs, 1.50599929694852360510337556975, 1e-13);
  const TransformedParams at0 = euler_transform({0.8, 0.9, 1.2, 0.0});
  EXPECT_EQ(at0.prefactor, 1.0);
}

TEST(EulerTransform, Hypotheses) {
  EXPECT_THROW(euler_transform({0.3, 0.3, 1.5, 0.5}), DomainError);   // c > a + b
  EXPECT_THROW(euler_transform({-0.3, 2, 1.5, 0.5}), DomainError);    // a < 0
  EXPECT_THROW(euler_transform({0.8, 0.9, 1.2, 1.0}), DomainError);   // x = 1
}

TEST(Method, Names) {
  EXPECT_EQ(to_string(Method::direct_series), "direct_series");
  EXPECT_EQ(to_string(Method::connection_formula), "connection_formula");
}
