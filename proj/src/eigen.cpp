#include "ptrig/eigen.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ptrig/errors.hpp"
#include "ptrig/forward.hpp"

namespace ptrig {

namespace {

void require_n(std::int64_t n) {
  if (n < 1) throw DomainError("n must be a positive integer");
}

// Position within the eigenfunction: n t = k + phi with phi in [0, 1).
// Returns the sign (-1)^k, the reflected argument in [0, a_p] and whether
// the reflection about a_p was used.
struct Folded {
  double sign;
  double s;
  bool reflected;
};

Folded fold(double pi_p, double phi, std::int64_t k) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  if (phi <= 0.5) return {sign, phi * pi_p, false};
  return {sign, (1.0 - phi) * pi_p, true};
}

Folded fold_t(PExponent p, double t, std::int64_t n) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("t must be in [0, 1]");
  require_n(n);
  const double nt = static_cast<double>(n) * t;
  const double k = std::floor(nt);
  return fold(constants(p).pi_p, nt - k, static_cast<std::int64_t>(k));
}

// sin_p and cos_p at s in [0, a_p] from a single inversion.
std::pair<double, double> sin_cos(PExponent p, double s) {
  const double a = constants(p).a_p;
  if (s >= a) return {1.0, 0.0};
  if (s <= 0.0) return {0.0, 1.0};
  const SinComplement sc = sin_p_with_complement(p, s);
  const double pv = p.value();
  double d = sc.sin < 0.5 ? 1.0 - std::pow(sc.sin, pv)
                          : -std::expm1(pv * std::log1p(-sc.one_minus_sin));
  return {sc.sin, sc.one_minus_sin == 0.0 ? 0.0 : std::exp(std::log(d) / pv)};
}

}  // namespace

double extended_sin_p(PExponent p, double t, std::int64_t n) {
  const Folded f = fold_t(p, t, n);
  if (f.s == 0.0) return 0.0;
  return f.sign * sin_p(p, std::min(f.s, constants(p).a_p)).value;
}

double extended_sin_p_derivative(PExponent p, double t, std::int64_t n) {
  const Folded f = fold_t(p, t, n);
  const double c = cos_p(p, std::min(f.s, constants(p).a_p));
  return static_cast<double>(n) * constants(p).pi_p * f.sign * (f.reflected ? -c : c);
}

EigenResidualReport residual(PExponent p, std::int64_t n, std::int64_t grid_size,
                             double lambda_scale) {
  ResidualOptions o;
  o.lambda_scale = lambda_scale;
  return residual(p, n, grid_size, o);
}

EigenResidualReport residual(PExponent p, std::int64_t n, std::int64_t grid_size,
                             const ResidualOptions& opts) {
  const double lambda_scale = opts.lambda_scale;
  require_n(n);
  if (!(opts.node_exclusion >= 0.0 && opts.peak_exclusion >= 0.0 &&
        opts.node_exclusion + opts.peak_exclusion < 1.0))
    throw DomainError("exclusion bands must be non-negative and leave part of (0, 1)");
  if (grid_size < kMinGridSize)
    throw DomainError("grid_size must be >= " + std::to_string(kMinGridSize));
  if (!(lambda_scale > 0.0) || !std::isfinite(lambda_scale))
    throw DomainError("lambda_scale must be positive");

  const double pv = p.value();
  const double pi_p = constants(p).pi_p;
  const std::int64_t N = grid_size;
  const double h = 1.0 / static_cast<double>(N);
  const double lambda = lambda_n(p, n) * lambda_scale;
  const double npi = static_cast<double>(n) * pi_p;

  // Grid point j sits at phase (n j mod N) / N of a half period; by the
  // reflection only phases up to one half need a forward evaluation.
  const std::int64_t half = N / 2;
  std::vector<double> S(half + 1), C(half + 1);
  for (std::int64_t r = 0; r <= half; ++r) {
    auto [s, c] = sin_cos(p, static_cast<double>(r) * h * pi_p);
    S[r] = s;
    C[r] = c;
  }

  std::vector<double> u(N + 1), w(N + 1);
  for (std::int64_t j = 0; j <= N; ++j) {
    const std::int64_t m = n * j;  // n t_j = m / N
    const std::int64_t k = m / N;
    const std::int64_t r = m % N;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double sv, dv;
    if (2 * r <= N) {
      sv = S[r];
      dv = C[r];
    } else {
      sv = S[N - r];
      dv = -C[N - r];
    }
    u[j] = sign * sv;
    const double du = npi * sign * dv;
    w[j] = std::copysign(std::pow(std::abs(du), pv - 1.0), du);
  }

  EigenResidualReport rep;
  rep.p = pv;
  rep.n = n;
  rep.grid_size = N;
  rep.step = h;
  rep.lambda = lambda;
  rep.boundary_values = {u[0], u[N]};
  for (std::int64_t j = 1; j <= N; ++j)
    if ((u[j - 1] < 0.0 && u[j] > 0.0) || (u[j - 1] > 0.0 && u[j] < 0.0) ||
        (j < N && u[j] == 0.0 && u[j - 1] * u[j + 1] < 0.0))
      ++rep.interior_nodes;

  for (std::int64_t j = 1; j < N; ++j) {
    const double au = std::abs(u[j]);
    if (au <= opts.node_exclusion) continue;
    if (opts.peak_exclusion > 0.0 && au >= 1.0 - opts.peak_exclusion) continue;
    ++rep.samples;
    const double dw = (w[j + 1] - w[j - 1]) / (2.0 * h);
    const double rhs = lambda * std::copysign(std::pow(std::abs(u[j]), pv - 1.0), u[j]);
    const double res = std::abs(-dw - rhs) / lambda;
    if (res > rep.max_rel_residual) {
      rep.max_rel_residual = res;
      rep.argmax_t = static_cast<double>(j) * h;
    }
  }
  if (rep.samples < kMinSamples)
    throw DomainError("degenerate grid: only " + std::to_string(rep.samples) +
                      " samples survive node exclusion");
  return rep;
}

}  // namespace ptrig
