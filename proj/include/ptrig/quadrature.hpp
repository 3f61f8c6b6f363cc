#pragma once

#include <functional>

namespace ptrig {

// Integrand signature for endpoint-aware quadrature: f(t, t - lo, hi - t).
// The two distances are computed from the node transform directly, so they
// keep full relative precision even where t itself rounds to an endpoint.
// This is what lets (1 - t^p)^{-1/p} be evaluated at t = 1 - 1e-200.
using EndpointIntegrand = std::function<double(double, double, double)>;

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int levels = 0;
  long evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-15;
  double rel_tol = 1e-14;
  int max_level = 12;
};

/// Double-exponential (tanh-sinh) quadrature on a finite interval [lo, hi].
///
/// Step size is halved level by level until two successive estimates agree to
/// max(abs_tol, rel_tol * |I|). Integrable endpoint singularities are fine;
/// the integrand is never evaluated exactly at lo or hi.
///
/// Throws ConvergenceError if max_level is reached first.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double lo, double hi,
                           const QuadratureOptions& opts = {});

}  // namespace ptrig
