#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "oracles/reference_values.inc"
#include "ptrig/errors.hpp"
#include "ptrig/inverse.hpp"
#include "support/grids.hpp"

using namespace ptrig;
using ptrig::testing::chebyshev;
using ptrig::testing::kDefaultP;
using ptrig::testing::scaled_error;

namespace {

const PExponent p3(3);
const PExponent p2(2);

std::string name(PFunctionKind k) { return std::string(to_string(k)); }

}  // namespace

TEST(InverseTable, PThreeValues) {
  struct Row { double x, asn, acs, atn, ash, ath; };
  const Row rows[] = {
      {0.00, 0.00000, 1.20920, 0.00000, 0.00000, 0.00000},
      {0.25, 0.25033, 1.17782, 0.24903, 0.24968, 0.25099},
      {0.50, 0.50547, 1.07974, 0.48540, 0.49502, 0.51685},
      {0.75, 0.78196, 0.88660, 0.68570, 0.72710, 0.85661},
      {1.00, 1.20920, 0.00000, 0.83565, 0.93771, 0.0},
  };
  for (const Row& r : rows) {
    EXPECT_NEAR(arcsin_p(p3, r.x).value, r.asn, 5e-6) << r.x;
    EXPECT_NEAR(arccos_p(p3, r.x).value, r.acs, 5e-6) << r.x;
    EXPECT_NEAR(arctan_p(p3, r.x).value, r.atn, 5e-6) << r.x;
    EXPECT_NEAR(arsinh_p(p3, r.x).value, r.ash, 5e-6) << r.x;
    if (r.x < 1) {
      EXPECT_NEAR(artanh_p(p3, r.x).value, r.ath, 5e-6) << r.x;
    }
  }
}

TEST(InverseClassical, PTwoMatchesStandardLibrary) {
  for (double x : chebyshev(0, 1, 256)) {
    EXPECT_NEAR(arcsin_p(p2, x).value, std::asin(x), 1e-12) << x;
    EXPECT_NEAR(arccos_p(p2, x).value, std::acos(x), 1e-12) << x;
    EXPECT_NEAR(arctan_p(p2, x).value, std::atan(x), 1e-12) << x;
    EXPECT_NEAR(arsinh_p(p2, x).value, std::asinh(x), 1e-12) << x;
    EXPECT_NEAR(artanh_p(p2, x).value, std::atanh(x), 1e-12) << x;
  }
  EXPECT_NEAR(arcsin_p(p2, 0.5).value, std::numbers::pi / 6, 1e-15);
  EXPECT_NEAR(arccos_p(p2, 0.5).value, std::numbers::pi / 3, 1e-15);
  EXPECT_NEAR(arctan_p(p2, 1).value, std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(arsinh_p(p2, 1).value, std::log(1 + std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(artanh_p(p2, 0.5).value, 0.5493061443340549, 1e-15);
}

TEST(InverseClassical, LargeArguments) {
  for (double x : {1.5, 10.0, 1e3, 1e8}) {
    EXPECT_LT(scaled_error(arctan_p(p2, x).value, std::atan(x)), 1e-14) << x;
    EXPECT_LT(scaled_error(arsinh_p(p2, x).value, std::asinh(x)), 1e-14) << x;
  }
}

TEST(InverseOracle, FrozenValuesOnUnitInterval) {
  for (const auto& r : kInverse) {
    const PExponent p(r.p);
    EXPECT_LT(scaled_error(arcsin_p(p, r.x).value, r.arcsin), 1e-14) << r.p << " " << r.x;
    EXPECT_LT(scaled_error(arccos_p(p, r.x).value, r.arccos), 1e-14) << r.p << " " << r.x;
    EXPECT_LT(scaled_error(arctan_p(p, r.x).value, r.arctan), 1e-14) << r.p << " " << r.x;
    EXPECT_LT(scaled_error(arsinh_p(p, r.x).value, r.arsinh), 1e-14) << r.p << " " << r.x;
    EXPECT_LT(scaled_error(artanh_p(p, r.x).value, r.artanh), 1e-14) << r.p << " " << r.x;
  }
}

TEST(InverseOracle, FrozenValuesAboveOne) {
  for (const auto& r : kLargeArg) {
    const PExponent p(r.p);
    EXPECT_LT(scaled_error(arctan_p(p, r.x).value, r.arctan), 1e-14) << r.p << " " << r.x;
    EXPECT_LT(scaled_error(arsinh_p(p, r.x).value, r.arsinh), 1e-14) << r.p << " " << r.x;
  }
}

TEST(InverseOracle, QuadratureAgreesWithSeries) {
  for (double pv : kDefaultP) {
    const PExponent p(pv);
    for (PFunctionKind k : kInverseKinds) {
      for (double x : chebyshev(0, 1, 48)) {
        const double a = inverse(k, p, x).value, b = quadrature_oracle(k, p, x).value;
        EXPECT_LE(scaled_error(a, b), 1e-10) << name(k) << " p=" << pv << " x=" << x;
      }
    }
  }
}

TEST(InverseOracle, QuadratureReproducesTable) {
  EXPECT_EQ(quadrature_oracle(PFunctionKind::arcsin_p, p3, 0).value, 0.0);
  EXPECT_NEAR(quadrature_oracle(PFunctionKind::arcsin_p, p3, 0.75).value, 0.78196, 5e-6);
  EXPECT_EQ(quadrature_oracle(PFunctionKind::arcsin_p, p3, 0.75).method, Method::quadrature);
}

TEST(InverseEndpoints, ExactValues) {
  for (double pv : kDefaultP) {
    const PExponent p(pv);
    const PConstants c = constants(p);
    for (PFunctionKind k : kInverseKinds) {
      if (k != PFunctionKind::arccos_p) {
        EXPECT_EQ(inverse(k, p, 0).value, 0.0) << name(k);
      }
    }
    EXPECT_NEAR(arcsin_p(p, 1).value, c.a_p, 1e-15 * c.a_p);
    EXPECT_NEAR(arccos_p(p, 0).value, c.a_p, 1e-15 * c.a_p);
    EXPECT_EQ(arccos_p(p, 1).value, 0.0);
    EXPECT_NEAR(arctan_p(p, 1).value, c.b_p, 1e-15);
    EXPECT_NEAR(arsinh_p(p, 1).value, c.c_p, 1e-15);
  }
}

TEST(InverseEndpoints, ArctanLimitIsHalfPiP) {
  for (double pv : {1.5, 2.0, 3.0, 10.0}) {
    const PExponent p(pv);
    const double half = pi_p(p) / 2;
    EXPECT_LE(arctan_p(p, 1e12).value, half);
    EXPECT_NEAR(arctan_p(p, 1e12).value, half, 1e-11 * std::pow(1e12, 2 - pv) + 1e-15);
  }
}

TEST(InverseMonotonicity, StrictlyIncreasing) {
  for (double pv : kDefaultP) {
    const PExponent p(pv);
    for (PFunctionKind k : kInverseKinds) {
      const auto xs = chebyshev(0, 1, 200);
      double prev = inverse(k, p, xs[0]).value;
      for (std::size_t i = 1; i < xs.size(); ++i) {
        const double v = inverse(k, p, xs[i]).value;
        if (k == PFunctionKind::arccos_p)
          EXPECT_LE(v, prev) << name(k) << " " << pv;
        else
          EXPECT_GE(v, prev) << name(k) << " " << pv;
        prev = v;
      }
    }
  }
}

TEST(InverseDerivative, ExactValues) {
  for (double pv : {1.2, 3.0, 9.0}) EXPECT_EQ(inverse_derivative(PFunctionKind::arcsin_p, PExponent(pv), 0), 1.0);
  EXPECT_NEAR(inverse_derivative(PFunctionKind::artanh_p, p3, 0.5), 8.0 / 7.0, 1e-15);
  EXPECT_NEAR(inverse_derivative(PFunctionKind::arccos_p, p2, 0.6), -1 / std::sqrt(1 - 0.36), 1e-15);
}

TEST(InverseDerivative, MatchesFiniteDifferences) {
  const double h = 1e-5;
  for (double pv : {1.5, 3.0, 7.0}) {
    const PExponent p(pv);
    for (PFunctionKind k : kInverseKinds) {
      for (double x : {0.2, 0.5, 0.8}) {
        const double fd = (inverse(k, p, x + h).value - inverse(k, p, x - h).value) / (2 * h);
        EXPECT_NEAR(inverse_derivative(k, p, x), fd, 1e-6 * (1 + std::abs(fd)))
            << name(k) << " p=" << pv << " x=" << x;
      }
    }
  }
}

TEST(InverseDerivative, SingularEndpoints) {
  EXPECT_THROW(inverse_derivative(PFunctionKind::arcsin_p, p3, 1), DomainError);
  EXPECT_THROW(inverse_derivative(PFunctionKind::artanh_p, p3, 1), DomainError);
}

TEST(InverseDomain, Errors) {
  EXPECT_THROW(arcsin_p(p3, -0.1), DomainError);
  EXPECT_THROW(arcsin_p(p3, 1.1), DomainError);
  EXPECT_THROW(arccos_p(p3, 1.5), DomainError);
  EXPECT_THROW(arctan_p(p3, -1), DomainError);
  EXPECT_THROW(arsinh_p(p3, -1), DomainError);
  EXPECT_THROW(artanh_p(p3, -1), DomainError);
  EXPECT_THROW(arcsin_p(p3, NAN), DomainError);
  try {
    artanh_p(p3, 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "artanh_p: x must be < 1");
  }
}

TEST(InverseKind, NamesRoundTrip) {
  for (PFunctionKind k : kInverseKinds) EXPECT_EQ(parse_inverse_kind(to_string(k)), k);
  EXPECT_FALSE(parse_inverse_kind("arcsin").has_value());
  EXPECT_EQ(domain_of(PFunctionKind::artanh_p).hi_inclusive, false);
  EXPECT_TRUE(std::isinf(domain_of(PFunctionKind::arctan_p).hi));
}

TEST(ArcsinTail, ComplementsArcsin) {
  for (double pv : {1.5, 3.0, 10.0}) {
    const PExponent p(pv);
    for (double w : {0.5, 0.1, 1e-3}) {
      const double tail = arcsin_p_tail(p, w).value;
      EXPECT_NEAR(tail, constants(p).a_p - arcsin_p(p, 1 - w).value, 1e-14) << pv << " " << w;
    }
  }
}
