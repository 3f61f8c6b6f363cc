#pragma once

#include <cstdint>

namespace ptrig {

/// Exponent p of the p-Laplacian family. Always finite and > 1.
class PExponent {
 public:
  explicit PExponent(double p);

  double value() const noexcept { return p_; }
  double reciprocal() const noexcept { return 1.0 / p_; }

  friend bool operator==(PExponent, PExponent) = default;

 private:
  double p_;
};

struct PConstants {
  double pi_p = 0.0;
  double a_p = 0.0;  // pi_p / 2, right end of the increasing branch of sin_p
  // a_p minus its double value, from a long double evaluation (zero where
  // long double is no wider than double). Lets a_p - y be formed to full
  // relative accuracy for y close to a_p.
  double a_p_lo = 0.0;
  double b_p = 0.0;  // arctan_p(1)
  double c_p = 0.0;  // arsinh_p(1)
};

// 2 pi / (p sin(pi / p)), evaluated in long double and rounded.
double pi_p(PExponent p);

// b_p through (psi((1+p)/(2p)) - psi(1/(2p))) / (2p).
double b_p_digamma(PExponent p);
// b_p through 2^{-1/p} F(1/p, 1/p; 1 + 1/p; 1/2).
double b_p_hypergeometric(PExponent p);
// Evaluates both routes; throws ConsistencyError if they differ by more
// than kBpRouteTolerance (relative). Returns the hypergeometric value.
double b_p(PExponent p);
inline constexpr double kBpRouteTolerance = 1e-11;

// (1/2)^{1/p} F(1, 1/p; 1 + 1/p; 1/2).
double c_p(PExponent p);

// n-th Dirichlet eigenvalue (p - 1)(n pi_p)^p of the 1-D p-Laplacian on (0, 1).
// Throws OverflowError when the value is not representable.
double lambda_n(PExponent p, std::int64_t n);

// Record for p, served from a small bounded cache.
// Safe to call from several threads.
PConstants constants(PExponent p);

}  // namespace ptrig
