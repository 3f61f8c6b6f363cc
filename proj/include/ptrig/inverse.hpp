#pragma once

/**
 * @file inverse.hpp
 * @brief The five inverse p-functions.
 *
 * Production values come from hypergeometric representations:
 *
 *   arcsin_p x = x F(1/p, 1/p; 1 + 1/p; x^p)
 *   arctan_p x = w^{1/p} F(1/p, 1/p; 1 + 1/p; w),    w = x^p / (1 + x^p)
 *   arsinh_p x = w^{1/p} F(1, 1/p; 1 + 1/p; w)
 *   artanh_p x = x F(1, 1/p; 1 + 1/p; x^p)
 *   arccos_p x = arcsin_p((1 - x^p)^{1/p})
 *
 * Near the singular end of each series the evaluation switches to
 * double-exponential quadrature (arcsin_p for x^p > 0.95 as a_p minus the
 * tail integral, artanh_p for x^p > 0.75, arsinh_p for w > 0.95) or, for
 * arctan_p with w > 0.95, to the complement pi_p/2 - x^{1-p}/(p-1) F(...).
 *
 * quadrature_oracle() integrates the defining integrals directly and is kept
 * independent of all of the above; tests compare the two.
 */

#include <array>
#include <optional>
#include <string_view>

#include "ptrig/constants.hpp"
#include "ptrig/specfun.hpp"

namespace ptrig {

enum class PFunctionKind { arcsin_p, arccos_p, arctan_p, arsinh_p, artanh_p };

inline constexpr std::array<PFunctionKind, 5> kInverseKinds = {
    PFunctionKind::arcsin_p, PFunctionKind::arccos_p, PFunctionKind::arctan_p,
    PFunctionKind::arsinh_p, PFunctionKind::artanh_p};

std::string_view to_string(PFunctionKind k);
std::optional<PFunctionKind> parse_inverse_kind(std::string_view name);

// Maximal real domain of each kind: [0,1] for arcsin/arccos, [0,1) for
// artanh, [0, inf) for arctan/arsinh.
struct InverseDomain {
  double lo = 0.0;
  double hi = 1.0;
  bool hi_inclusive = true;
};
InverseDomain domain_of(PFunctionKind k);

inline constexpr double kArcsinTailSwitch = 0.95;  // on x^p
inline constexpr double kArtanhQuadSwitch = 0.75;  // on x^p
inline constexpr double kArsinhQuadSwitch = 0.95;  // on x^p / (1 + x^p)

EvalResult arcsin_p(PExponent p, double x);
EvalResult arccos_p(PExponent p, double x);
EvalResult arctan_p(PExponent p, double x);
EvalResult arsinh_p(PExponent p, double x);
EvalResult artanh_p(PExponent p, double x);

EvalResult inverse(PFunctionKind k, PExponent p, double x);

// First derivative of the inverse function (the integrand for all kinds but
// arccos_p, which is -x^{p-2} (1 - x^p)^{1/p - 1}).
double inverse_derivative(PFunctionKind k, PExponent p, double x);

// Direct tanh-sinh quadrature of the defining integral.
EvalResult quadrature_oracle(PFunctionKind k, PExponent p, double x);

// int_{1-w}^1 (1 - t^p)^{-1/p} dt = a_p - arcsin_p(1 - w), with w given
// exactly. Used by sin_p near the top of its range.
EvalResult arcsin_p_tail(PExponent p, double w);

// int_x^inf dt / (1 + t^p) = a_p - arctan_p(x) for x >= 1. Used by tan_p
// near pi_p/2.
EvalResult arctan_p_tail(PExponent p, double x);

}  // namespace ptrig
