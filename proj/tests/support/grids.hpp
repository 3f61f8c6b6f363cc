#pragma once

// Sample grids shared by the unit tests and the acceptance runner.

#include <cmath>
#include <numbers>
#include <vector>

namespace ptrig::testing {

inline const std::vector<double> kDefaultP = {1.1, 1.5, 2, 2.5, 3, 5, 10, 50};

// n Chebyshev points strictly inside (lo, hi), increasing.
inline std::vector<double> chebyshev(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int k = n; k >= 1; --k)
    out.push_back(mid + half * std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n)));
  return out;
}

inline std::vector<double> log_chebyshev(double lo, double hi, int n) {
  std::vector<double> out = chebyshev(std::log(lo), std::log(hi), n);
  for (double& v : out) v = std::exp(v);
  return out;
}

// |a - b| measured absolutely below 1 and relatively above.
inline double scaled_error(double a, double b) {
  return std::abs(a - b) / std::fmax(1.0, std::abs(b));
}

}  // namespace ptrig::testing
