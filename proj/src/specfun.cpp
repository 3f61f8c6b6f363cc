#include "ptrig/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ptrig/errors.hpp"
#include "ptrig/quadrature.hpp"

namespace ptrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double sin_pi(double x) {
  // Reduce to [-1, 1] so sin(pi r) keeps relative accuracy.
  const double r = x - 2.0 * std::round(0.5 * x);
  return std::sin(kPi * r);
}

void require_finite(const Hyper2F1Params& q) {
  if (!std::isfinite(q.a) || !std::isfinite(q.b) || !std::isfinite(q.c) ||
      !std::isfinite(q.z)) {
    throw DomainError("hyper2f1: parameters must be finite");
  }
  if (is_nonpositive_integer(q.c)) {
    throw DomainError("hyper2f1: c must not be zero or a negative integer");
  }
}

bool terminates(const Hyper2F1Params& q) {
  return is_nonpositive_integer(q.a) || is_nonpositive_integer(q.b);
}

EvalResult sum_series(const Hyper2F1Params& q, long cap) {
  const double a = q.a, b = q.b, c = q.c, z = q.z;
  const double regime = std::max({std::abs(a), std::abs(b), std::abs(c)}) + 1.0;
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  for (long n = 0; n < cap; ++n) {
    const double dn = static_cast<double>(n);
    const double ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    term *= ratio;
    sum += term;
    abs_sum += std::abs(term);
    if (term == 0.0) {
      return {sum, 4.0 * kEps * abs_sum, Method::direct_series};
    }
    if (dn + 1.0 > regime) {
      const double r = std::max(std::abs(ratio), std::abs(z));
      if (r < 1.0) {
        const double tail = std::abs(term) * r / (1.0 - r);
        if (tail <= 1e-16 * std::abs(sum)) {
          const double roundoff = 2.0 * kEps * abs_sum * std::sqrt(dn + 1.0);
          return {sum, tail + roundoff, Method::direct_series};
        }
      }
    }
  }
  std::ostringstream msg;
  msg << "hyper2f1: series did not converge within " << cap << " terms (a=" << a
      << ", b=" << b << ", c=" << c << ", z=" << z << ")";
  throw ConvergenceError(msg.str());
}

TransformedParams euler_unchecked(const Hyper2F1Params& q) {
  TransformedParams t;
  t.params = {q.c - q.a, q.c - q.b, q.c, q.z};
  t.prefactor = std::pow(1.0 - q.z, q.c - q.a - q.b);
  return t;
}

// z -> 1 - z connection formula, c - a - b not an integer.
EvalResult connection(const Hyper2F1Params& q) {
  const double s = q.c - q.a - q.b;
  const double y = 1.0 - q.z;
  const double gc = detail::gamma_signed(q.c);
  const double coef_a =
      gc * detail::gamma_signed(s) * detail::rgamma(q.c - q.a) * detail::rgamma(q.c - q.b);
  const double coef_b =
      gc * detail::gamma_signed(-s) * detail::rgamma(q.a) * detail::rgamma(q.b);
  if (!std::isfinite(coef_a) || !std::isfinite(coef_b)) {
    throw ConvergenceError("hyper2f1: connection coefficients overflow");
  }
  EvalResult first{0.0, 0.0, Method::direct_series};
  if (coef_a != 0.0) first = sum_series({q.a, q.b, 1.0 - s, y}, kSeriesTermCap);
  EvalResult second{0.0, 0.0, Method::direct_series};
  const double scale_b = coef_b * std::pow(y, s);
  if (scale_b != 0.0) {
    second = sum_series({q.c - q.a, q.c - q.b, 1.0 + s, y}, kSeriesTermCap);
  }
  const double part_a = coef_a * first.value;
  const double part_b = scale_b * second.value;
  EvalResult out;
  out.value = part_a + part_b;
  out.abs_error = std::abs(coef_a) * first.abs_error + std::abs(scale_b) * second.abs_error +
                  16.0 * kEps * (std::abs(part_a) + std::abs(part_b));
  out.method = Method::connection_formula;
  return out;
}

EvalResult near_one(const Hyper2F1Params& q) {
  const double s = q.c - q.a - q.b;
  if (s < 0.0) {
    const TransformedParams t = euler_unchecked(q);
    EvalResult r = near_one(t.params);
    r.value *= t.prefactor;
    r.abs_error = r.abs_error * t.prefactor + 2.0 * kEps * std::abs(r.value);
    r.method = Method::euler_transform;
    return r;
  }
  if (std::abs(s - std::round(s)) >= 1e-3) {
    try {
      return connection(q);
    } catch (const ConvergenceError&) {
      // fall through to the slower routes
    }
  }
  try {
    return sum_series(q, kSeriesTermCap);
  } catch (const ConvergenceError&) {
    if ((q.c > q.b && q.b > 0.0) || (q.c > q.a && q.a > 0.0)) {
      return hyper2f1_integral(q);
    }
    throw;
  }
}

EvalResult nonnegative_argument(const Hyper2F1Params& q) {
  if (q.z == 0.0) return {1.0, 0.0, Method::direct_series};
  if (q.z <= kSeriesSwitch || terminates(q)) return sum_series(q, kSeriesTermCap);
  return near_one(q);
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::direct_series: return "direct_series";
    case Method::pfaff_transform: return "pfaff_transform";
    case Method::euler_transform: return "euler_transform";
    case Method::connection_formula: return "connection_formula";
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

double gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw DomainError("gamma: argument must be a finite positive number");
  }
  const double g = std::tgamma(x);
  if (std::isinf(g)) throw OverflowError("gamma: result overflows for x > 171.6");
  return g;
}

double digamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw DomainError("digamma: argument must be a finite positive number");
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Bernoulli-number asymptotic series.
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return shift + std::log(x) - 0.5 / x - series;
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || std::isinf(x) || std::isinf(y)) {
    throw DomainError("beta: arguments must be finite positive numbers");
  }
  if (x + y < 170.0) return gamma(x) * gamma(y) / gamma(x + y);
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

namespace detail {

double gamma_signed(double x) {
  if (x > 0.0) return gamma(x);
  if (is_nonpositive_integer(x) || !std::isfinite(x)) {
    throw DomainError("gamma: pole at a non-positive integer");
  }
  return kPi / (sin_pi(x) * gamma(1.0 - x));
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return 0.0;
  return 1.0 / gamma_signed(x);
}

}  // namespace detail

EvalResult hyper2f1_series(const Hyper2F1Params& q) {
  require_finite(q);
  if (!(std::abs(q.z) < 1.0) && !terminates(q)) {
    throw DomainError("hyper2f1_series: requires |z| < 1");
  }
  return sum_series(q, kSeriesTermCap);
}

EvalResult hyper2f1_integral(const Hyper2F1Params& q) {
  require_finite(q);
  if (!(q.z < 1.0)) throw DomainError("hyper2f1_integral: requires z < 1");
  double a = q.a, b = q.b;
  if (!(q.c > b && b > 0.0)) std::swap(a, b);
  if (!(q.c > b && b > 0.0)) {
    throw DomainError("hyper2f1_integral: requires c > b > 0 or c > a > 0");
  }
  const double c = q.c, z = q.z;
  const double one_minus_z = 1.0 - z;
  auto integrand = [=](double, double t, double u) {
    // t = distance from 0, u = distance from 1
    const double base = one_minus_z + z * u;
    return std::pow(t, b - 1.0) * std::pow(u, c - b - 1.0) * std::pow(base, -a);
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-13;
  opts.abs_tol = 0.0;
  const QuadratureResult r = tanh_sinh(integrand, 0.0, 1.0, opts);
  const double norm = 1.0 / beta(b, c - b);
  return {norm * r.value, norm * r.abs_error + 8.0 * kEps * std::abs(norm * r.value),
          Method::quadrature};
}

TransformedParams pfaff_transform(const Hyper2F1Params& q) {
  require_finite(q);
  if (!(q.z < 1.0)) throw DomainError("pfaff_transform: requires z < 1");
  TransformedParams t;
  const double one_minus_z = 1.0 - q.z;
  t.params = {q.b, q.c - q.a, q.c, -q.z / one_minus_z};
  t.prefactor = std::pow(one_minus_z, -q.b);
  return t;
}

TransformedParams euler_transform(const Hyper2F1Params& q) {
  require_finite(q);
  if (!(q.a > 0.0 && q.b > 0.0 && q.c > 0.0)) {
    throw DomainError("euler_transform: requires a, b, c > 0");
  }
  if (!(q.c < q.a + q.b)) throw DomainError("euler_transform: requires c < a + b");
  if (!(q.z >= 0.0 && q.z < 1.0)) throw DomainError("euler_transform: requires 0 <= x < 1");
  return euler_unchecked(q);
}

EvalResult hyper2f1(const Hyper2F1Params& q) {
  require_finite(q);
  if (q.z > 1.0) throw DomainError("hyper2f1: real argument must satisfy z <= 1");
  if (q.z == 1.0) {
    if (terminates(q)) return sum_series(q, kSeriesTermCap);
    const double s = q.c - q.a - q.b;
    if (!(s > 0.0)) {
      throw DomainError("hyper2f1: z = 1 requires c - a - b > 0");
    }
    const double v = detail::gamma_signed(q.c) * detail::gamma_signed(s) *
                     detail::rgamma(q.c - q.a) * detail::rgamma(q.c - q.b);
    return {v, 32.0 * kEps * std::abs(v), Method::closed_form};
  }
  if (q.z >= 0.0) return nonnegative_argument(q);
  if (terminates(q) && q.z >= -1.0) return sum_series(q, kSeriesTermCap);

  const TransformedParams t = pfaff_transform(q);
  EvalResult r = nonnegative_argument(t.params);
  r.value *= t.prefactor;
  r.abs_error = r.abs_error * t.prefactor + 2.0 * kEps * std::abs(r.value);
  r.method = Method::pfaff_transform;
  return r;
}

}  // namespace ptrig
