#pragma once

/**
 * @file specfun.hpp
 * @brief Scalar special functions on the positive real axis.
 *
 * Gamma, digamma and beta for x > 0, and the Gauss hypergeometric function
 * 2F1(a, b; c; z) for real z <= 1. The hypergeometric evaluator picks a path
 * by argument:
 *
 *   z < 0             Pfaff transformation into (0, 1)
 *   0 <= z <= 0.95    direct power series
 *   0.95 < z < 1      Euler transformation if c - a - b < 0, then the
 *                     z -> 1 - z connection formula; near-integer c - a - b
 *                     falls back to the capped series or the Euler integral
 *   z = 1             Gauss summation (c - a - b > 0 only)
 *
 * All routines are pure and thread-safe.
 */

#include <string_view>

namespace ptrig {

enum class Method {
  direct_series,
  pfaff_transform,
  euler_transform,
  connection_formula,
  quadrature,
  closed_form,
};

std::string_view to_string(Method m);

struct EvalResult {
  double value = 0.0;
  double abs_error = 0.0;  // forward-recurrence estimate, not a rigorous bound
  Method method = Method::direct_series;
};

struct Hyper2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

// A 2F1 parameter set together with the factor that multiplies its value.
struct TransformedParams {
  Hyper2F1Params params;
  double prefactor = 1.0;
};

inline constexpr double kSeriesSwitch = 0.95;
inline constexpr long kSeriesTermCap = 1'000'000;

// std::tgamma with a domain check; throws OverflowError above x ~ 171.6.
double gamma(double x);
double digamma(double x);
double beta(double x, double y);

EvalResult hyper2f1(const Hyper2F1Params& q);

// Plain summation of the defining series, no transformations. Requires
// |z| < 1 (or z = 1 with convergent series is rejected; use hyper2f1).
EvalResult hyper2f1_series(const Hyper2F1Params& q);

// Euler integral representation, needs c > b > 0 (or c > a > 0) and z < 1.
EvalResult hyper2f1_integral(const Hyper2F1Params& q);

// F(a,b;c;z) = (1-z)^{-b} F(b, c-a; c; -z/(1-z)).
TransformedParams pfaff_transform(const Hyper2F1Params& q);

// F(a,b;c;x) = (1-x)^{c-a-b} F(c-a, c-b; c; x), for a,b,c > 0, c < a+b,
// 0 <= x < 1.
TransformedParams euler_transform(const Hyper2F1Params& q);

namespace detail {
// Gamma on the whole real line except the poles; used by the connection
// formula where arguments can be negative.
double gamma_signed(double x);
// 1/Gamma(x), exactly zero at non-positive integers.
double rgamma(double x);
}  // namespace detail

}  // namespace ptrig
