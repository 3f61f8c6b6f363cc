#pragma once

#include <cstdint>
#include <utility>

#include "ptrig/constants.hpp"

namespace ptrig {

// Residual of -(|u'|^{p-2} u')' = lambda |u|^{p-2} u for u(t) = sin_p(n pi_p t)
// on a uniform grid of [0, 1].
struct EigenResidualReport {
  double p = 0.0;
  std::int64_t n = 1;
  std::int64_t grid_size = 0;
  double step = 0.0;
  double lambda = 0.0;  // eigenvalue used, lambda_n times the requested scale
  double max_rel_residual = 0.0;
  double argmax_t = 0.0;
  std::pair<double, double> boundary_values{0.0, 0.0};
  std::int64_t samples = 0;         // grid points that survived node exclusion
  std::int64_t interior_nodes = 0;  // sign changes of u on (0, 1)
};

inline constexpr double kNodeExclusion = 1e-3;
inline constexpr std::int64_t kMinGridSize = 64;
inline constexpr std::int64_t kMinSamples = 16;

// Calibrated acceptance bound max_rel_residual <= kResidualConstant / grid_size.
// A refinement study over p in [1.5, 10], n <= 3, grid sizes 64..65536 peaks at
// 59.9 / grid_size (p = 1.5, n = 3, 4096 points). Closer to p = 1 or for higher
// modes the node neighbourhoods need finer grids and the bound is exceeded.
inline constexpr double kResidualConstant = 64.0;
inline double residual_threshold(std::int64_t grid_size) {
  return kResidualConstant / static_cast<double>(grid_size);
}

// sin_p(n pi_p t) continued past a_p by reflection: symmetric about a_p, odd
// about pi_p, period 2 pi_p. Exactly zero where n t is an integer.
double extended_sin_p(PExponent p, double t, std::int64_t n);

// d/dt of extended_sin_p, i.e. n pi_p cos_p(.) with the reflection sign.
double extended_sin_p_derivative(PExponent p, double t, std::int64_t n);

// w = |u'|^{p-2} u' is differenced centrally with step h = 1/grid_size at each
// grid point where |u| > kNodeExclusion. lambda_scale multiplies lambda_n and
// exists for sensitivity checks.
EigenResidualReport residual(PExponent p, std::int64_t n, std::int64_t grid_size,
                             double lambda_scale = 1.0);

// Diagnostic variant. Points with |u| <= node_exclusion or with
// |u| >= 1 - peak_exclusion are skipped; the second band isolates the
// critical points of u, where the third derivative of w is unbounded for p > 2.
struct ResidualOptions {
  double lambda_scale = 1.0;
  double node_exclusion = kNodeExclusion;
  double peak_exclusion = 0.0;
};
EigenResidualReport residual(PExponent p, std::int64_t n, std::int64_t grid_size,
                             const ResidualOptions& opts);

}  // namespace ptrig
