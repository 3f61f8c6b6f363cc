#include "ptrig/forward.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ptrig/errors.hpp"
#include "ptrig/inverse.hpp"

namespace ptrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 200;
constexpr double kBracketCap = 1e300;
constexpr double kConvergedTol = 1e-13;

struct Solve {
  double v = 0.0;
  int iterations = 0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
};

struct NeverResolved {
  bool operator()(double, double) const { return false; }
};

// Root of an increasing g on [lo, hi] with g(lo) <= 0 <= g(hi). gd(v) returns
// {g(v), g'(v)}. Newton steps that leave the bracket, or that fail to halve
// |g| twice running, are replaced by bisection. Iterates well past the
// reporting tolerance and stops at machine resolution, or once resolved(lo,
// hi) says the bracket maps to a single representable result.
template <class GD, class Resolved = NeverResolved>
Solve newton_bisect(GD gd, double lo, double hi, double v, double scale,
                    Resolved resolved = {}) {
  Solve s;
  s.residual = std::numeric_limits<double>::infinity();
  double g_prev = std::numeric_limits<double>::infinity();
  int slow = 0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    s.iterations = it;
    auto [g, d] = gd(v);
    if (std::abs(g) < s.residual) {
      s.residual = std::abs(g);
      s.v = v;
    }
    if (g == 0.0 || std::abs(g) <= 2.0 * kEps * scale) break;
    if (g < 0.0) lo = v; else hi = v;
    if (hi - lo <= 2.0 * kEps * std::abs(hi) || resolved(lo, hi)) break;
    double vn = v - g / d;
    bool bisect = !std::isfinite(vn) || vn <= lo || vn >= hi;
    if (!bisect && std::abs(g) > 0.5 * std::abs(g_prev)) {
      if (++slow >= 2) {
        bisect = true;
        slow = 0;
      }
    }
    if (bisect) vn = 0.5 * (lo + hi);
    if (vn == v) break;
    if (!bisect && std::abs(vn - v) <= 4.0 * kEps * std::abs(v)) {
      // Newton step at the resolution of v: take it and stop.
      auto [gn, dn] = gd(vn);
      (void)dn;
      ++s.iterations;
      if (std::abs(gn) < s.residual) {
        s.residual = std::abs(gn);
        s.v = vn;
      }
      break;
    }
    g_prev = g;
    v = vn;
  }
  s.lo = lo;
  s.hi = hi;
  return s;
}

InversionResult finish(double value, const Solve& s, double width, double y) {
  InversionResult r;
  r.value = value;
  r.iterations = s.iterations;
  r.bracket_width = width;
  r.residual = s.residual;
  r.converged = width <= kConvergedTol * (1.0 + std::abs(value)) ||
                s.residual <= kConvergedTol * (1.0 + std::abs(y));
  if (!r.converged)
    throw ConvergenceError("inversion did not converge (residual " +
                           std::to_string(s.residual) + ")");
  return r;
}

void require_y(double y, const char* fn) {
  if (std::isnan(y)) throw DomainError(std::string(fn) + ": y must not be NaN");
  if (y < 0.0) throw DomainError(std::string(fn) + ": y must be >= 0");
}

struct SinSolve {
  SinComplement sc;
  InversionResult info;
};

SinSolve solve_sin(PExponent pe, double y) {
  require_y(y, "sin_p");
  const double p = pe.value();
  const PConstants k = constants(pe);
  const double a = k.a_p;
  if (y > a + kSnapTolerance) throw DomainError("sin_p: y must be <= a_p = pi_p/2");
  const double tau = (a - y) + k.a_p_lo;  // exact a_p - y up to long double rounding
  if (y >= a || !(tau > 0.0)) return {{1.0, 0.0}, {1.0, 0, 0.0, true, 0.0}};
  if (y == 0.0) return {{0.0, 1.0}, {0.0, 0, 0.0, true, 0.0}};

  // Below the series switch invert arcsin_p in x; above it invert the tail
  // integral in s = w^{1-1/p}, w = 1 - x, where it is nearly linear.
  const double x_sw = std::pow(kArcsinTailSwitch, 1.0 / p);
  const double y_sw = arcsin_p(pe, x_sw).value;
  if (y <= y_sw) {
    auto gd = [&](double x) {
      return std::pair{arcsin_p(pe, x).value - y,
                       inverse_derivative(PFunctionKind::arcsin_p, pe, x)};
    };
    Solve s = newton_bisect(gd, 0.0, x_sw, std::min(y, x_sw), y);
    return {{s.v, 1.0 - s.v}, finish(s.v, s, s.hi - s.lo, y)};
  }

  const double q = p / (p - 1.0);
  const double s_max = std::pow(1.0 - x_sw, 1.0 / q);
  auto gd = [&](double s) {
    const double w = std::pow(s, q);
    const double t = arcsin_p_tail(pe, w).value;
    const double dtdw = std::exp(-std::log(-std::expm1(p * std::log1p(-w))) / p);
    return std::pair{t - tau, dtdw * q * std::pow(s, q - 1.0)};
  };
  // Near w = 0 the tail is p^{-1/p} q s to leading order.
  double s0 = tau * std::pow(p, 1.0 / p) / q;
  if (!(s0 > 0.0 && s0 < s_max)) s0 = 0.5 * s_max;
  Solve s = newton_bisect(gd, 0.0, s_max, s0, tau);
  const double w = std::pow(s.v, q);
  const double width = std::pow(s.hi, q) - std::pow(s.lo, q);
  // Within the snap distance of a_p the sine is reported as exactly 1; the
  // complement is kept so that cos_p stays accurate.
  const double sin = a - y <= kSnapTolerance ? 1.0 : 1.0 - w;
  return {{sin, w}, finish(sin, s, width, y)};
}

}  // namespace

std::string_view to_string(ForwardKind k) {
  switch (k) {
    case ForwardKind::sin_p: return "sin_p";
    case ForwardKind::cos_p: return "cos_p";
    case ForwardKind::tan_p: return "tan_p";
    case ForwardKind::sinh_p: return "sinh_p";
    case ForwardKind::tanh_p: return "tanh_p";
  }
  return "?";
}

std::optional<ForwardKind> parse_forward_kind(std::string_view name) {
  for (ForwardKind k : kForwardKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

InversionResult sin_p(PExponent p, double y) { return solve_sin(p, y).info; }

SinComplement sin_p_with_complement(PExponent p, double y) { return solve_sin(p, y).sc; }

double cos_p(PExponent pe, double y) {
  if (std::isnan(y) || y < 0.0) require_y(y, "cos_p");
  if (y == 0.0) return 1.0;
  const SinComplement sc = solve_sin(pe, y).sc;
  const double p = pe.value();
  if (sc.one_minus_sin == 0.0) return 0.0;
  double d;  // 1 - sin^p
  if (sc.sin < 0.5) d = 1.0 - std::pow(sc.sin, p);
  else d = -std::expm1(p * std::log1p(-sc.one_minus_sin));
  return std::exp(std::log(d) / p);
}

InversionResult tan_p(PExponent pe, double y) {
  require_y(y, "tan_p");
  const PConstants k = constants(pe);
  const double tau = (k.a_p - y) + k.a_p_lo;  // pi_p/2 - y
  if (y >= k.a_p || !(tau > 0.0)) throw DomainError("tan_p: y must be < pi_p/2");
  if (y == 0.0) return {0.0, 0, 0.0, true, 0.0};
  if (y <= k.b_p) {
    auto gd = [&](double x) {
      return std::pair{arctan_p(pe, x).value - y,
                       inverse_derivative(PFunctionKind::arctan_p, pe, x)};
    };
    // arctan_p(x) <= x, so the root is at least y.
    Solve s = newton_bisect(gd, 0.0, 1.0, std::min(y, 1.0), y);
    return finish(s.v, s, s.hi - s.lo, y);
  }
  // Past x = 1 solve arctan_p_tail(x) = pi_p/2 - y in L = log x. The log of
  // the tail is close to (1 - p) L there, and working with tau keeps the
  // relative accuracy that a_p - arctan_p(x) would lose near the pole.
  const double p = pe.value();
  const double log_tau = std::log(tau);
  auto log_tail = [&](double L) { return std::log(arctan_p_tail(pe, std::exp(L)).value); };
  const double L_cap = std::log(kBracketCap);
  double lo = 0.0, hi = 1.0;
  while (log_tail(hi) > log_tau) {
    lo = hi;
    hi = 2.0 * hi;
    if (hi > L_cap) {
      if (lo >= L_cap || log_tail(L_cap) > log_tau)
        throw ConvergenceError("tan_p: bracket diverged");
      hi = L_cap;
    }
  }
  auto gd = [&](double L) {
    const double t = arctan_p_tail(pe, std::exp(L)).value;
    // x / (1 + x^p) divided by the tail, written to avoid x^p overflow.
    const double d = std::exp((1.0 - p) * L - std::log1p(std::exp(-p * L))) / t;
    return std::pair{log_tau - std::log(t), d};
  };
  double L0 = -(log_tau + std::log(p - 1.0)) / (p - 1.0);
  if (!(L0 > lo && L0 < hi)) L0 = 0.5 * (lo + hi);
  Solve s = newton_bisect(gd, lo, hi, L0, 1.0);
  s.residual *= tau;  // back to units of y
  const double x = std::exp(s.v);
  return finish(x, s, std::exp(s.hi) - std::exp(s.lo), y);
}

InversionResult sinh_p(PExponent pe, double y) {
  require_y(y, "sinh_p");
  if (y > kSinhCutoff) throw DomainError("sinh_p: y must be <= 700");
  if (y == 0.0) return {0.0, 0, 0.0, true, 0.0};
  const double c = constants(pe).c_p;
  if (y <= c) {
    auto gd = [&](double x) {
      return std::pair{arsinh_p(pe, x).value - y,
                       inverse_derivative(PFunctionKind::arsinh_p, pe, x)};
    };
    Solve s = newton_bisect(gd, 0.0, 1.0, std::min(y, 1.0), y);
    return finish(s.v, s, s.hi - s.lo, y);
  }
  // Past x = 1 arsinh_p grows like log x; iterate in L = log x. The bracket
  // may reach the largest double since sinh_p(700) is near 1e304 for all p.
  auto f = [&](double L) { return arsinh_p(pe, std::exp(L)).value; };
  const double L_cap = std::log(std::numeric_limits<double>::max());
  double lo = 0.0, hi = 1.0;
  while (f(hi) < y) {
    lo = hi;
    hi = std::max(2.0 * hi, 1.0);
    if (hi > L_cap) {
      if (lo >= L_cap || f(L_cap) < y)
        throw OverflowError("sinh_p: result overflows double precision");
      hi = L_cap;
    }
  }
  auto gd = [&](double L) {
    const double x = std::exp(L);
    return std::pair{f(L) - y, inverse_derivative(PFunctionKind::arsinh_p, pe, x) * x};
  };
  double L0 = y - c;
  if (!(L0 > lo && L0 < hi)) L0 = 0.5 * (lo + hi);
  Solve s = newton_bisect(gd, lo, hi, L0, y);
  const double x = std::exp(s.v);
  return finish(x, s, std::exp(s.hi) - std::exp(s.lo), y);
}

InversionResult tanh_p(PExponent pe, double y) {
  require_y(y, "tanh_p");
  if (std::isinf(y)) throw DomainError("tanh_p: y must be finite");
  if (y == 0.0) return {0.0, 0, 0.0, true, 0.0};
  const double x_max = std::nextafter(1.0, 0.0);
  const double top = artanh_p(pe, x_max).value;
  if (y >= top) return {x_max, 0, 0.0, true, 0.0};  // saturated in double precision
  // Iterate in L = -log(1 - x), where artanh_p is close to linear for large L.
  const double L_max = -std::log1p(-x_max);
  auto x_of = [](double L) { return -std::expm1(-L); };
  auto gd = [&](double L) {
    const double x = x_of(L);
    return std::pair{artanh_p(pe, x).value - y,
                     inverse_derivative(PFunctionKind::artanh_p, pe, x) * std::exp(-L)};
  };
  auto resolved = [&](double lo, double hi) {
    return std::nextafter(x_of(lo), 2.0) >= x_of(hi);
  };
  double L0 = std::min(y, 0.5 * L_max);
  Solve s = newton_bisect(gd, 0.0, L_max, L0, y, resolved);
  const double x = x_of(s.v);
  return finish(x, s, x_of(s.hi) - x_of(s.lo), y);
}

double forward(ForwardKind k, PExponent p, double y) {
  switch (k) {
    case ForwardKind::sin_p: return sin_p(p, y).value;
    case ForwardKind::cos_p: return cos_p(p, y);
    case ForwardKind::tan_p: return tan_p(p, y).value;
    case ForwardKind::sinh_p: return sinh_p(p, y).value;
    case ForwardKind::tanh_p: return tanh_p(p, y).value;
  }
  throw DomainError("forward: unknown kind");
}

}  // namespace ptrig
