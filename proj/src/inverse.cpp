#include "ptrig/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ptrig/errors.hpp"
#include "ptrig/quadrature.hpp"

namespace ptrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) throw DomainError(std::string(fn) + ": x must be finite");
}

void require_unit_closed(double x, const char* fn) {
  require_finite(x, fn);
  if (x < 0.0) throw DomainError(std::string(fn) + ": x must be >= 0");
  if (x > 1.0) throw DomainError(std::string(fn) + ": x must be <= 1");
}

void require_nonnegative(double x, const char* fn) {
  if (std::isnan(x)) throw DomainError(std::string(fn) + ": x must not be NaN");
  if (x < 0.0) throw DomainError(std::string(fn) + ": x must be >= 0");
}

// 1 - t^p for t in [0,1], given u = 1 - t as accurately as the caller knows it.
double one_minus_pow(double t, double u, double p) {
  if (t < 0.5) return 1.0 - std::pow(t, p);
  return -std::expm1(p * std::log1p(-u));
}

QuadratureOptions production_quad() {
  QuadratureOptions o;
  o.abs_tol = 1e-17;
  o.rel_tol = 2e-15;
  return o;
}

// int_0^w (1 - (1-u)^p)^{-1/p} du, i.e. the arcsin_p integral over [1-w, 1].
QuadratureResult arcsin_tail(double p, double w) {
  const double r = 1.0 / p;
  auto f = [p, r](double, double u, double) {
    return std::exp(-r * std::log(-std::expm1(p * std::log1p(-u))));
  };
  return tanh_sinh(f, 0.0, w, production_quad());
}

// arcsin_p(y) with y^p and 1 - y supplied separately so that callers who
// know them more accurately than y itself (arccos_p) keep that accuracy.
EvalResult arcsin_impl(PExponent pe, double y, double yp, double omy) {
  const double p = pe.value();
  const double r = pe.reciprocal();
  if (y == 0.0) return {0.0, 0.0, Method::closed_form};
  if (omy == 0.0) return {constants(pe).a_p, 0.0, Method::closed_form};
  if (yp <= kArcsinTailSwitch) {
    EvalResult f = hyper2f1({r, r, 1.0 + r, yp});
    return {y * f.value, y * f.abs_error, Method::direct_series};
  }
  const double a = constants(pe).a_p;
  QuadratureResult tail = arcsin_tail(p, omy);
  return {a - tail.value, tail.abs_error + kEps * a, Method::quadrature};
}

}  // namespace

std::string_view to_string(PFunctionKind k) {
  switch (k) {
    case PFunctionKind::arcsin_p: return "arcsin_p";
    case PFunctionKind::arccos_p: return "arccos_p";
    case PFunctionKind::arctan_p: return "arctan_p";
    case PFunctionKind::arsinh_p: return "arsinh_p";
    case PFunctionKind::artanh_p: return "artanh_p";
  }
  return "?";
}

std::optional<PFunctionKind> parse_inverse_kind(std::string_view name) {
  for (PFunctionKind k : kInverseKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

InverseDomain domain_of(PFunctionKind k) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (k) {
    case PFunctionKind::arcsin_p:
    case PFunctionKind::arccos_p: return {0.0, 1.0, true};
    case PFunctionKind::artanh_p: return {0.0, 1.0, false};
    case PFunctionKind::arctan_p:
    case PFunctionKind::arsinh_p: return {0.0, inf, false};
  }
  return {};
}

EvalResult arcsin_p(PExponent p, double x) {
  require_unit_closed(x, "arcsin_p");
  return arcsin_impl(p, x, std::pow(x, p.value()), 1.0 - x);
}

EvalResult arccos_p(PExponent p, double x) {
  require_unit_closed(x, "arccos_p");
  if (x == 0.0) return {constants(p).a_p, 0.0, Method::closed_form};
  if (x == 1.0) return {0.0, 0.0, Method::closed_form};
  const double pv = p.value();
  const double xp = std::pow(x, pv);
  // y = (1 - x^p)^{1/p}. log1p keeps 1 - y accurate when x^p is tiny; near
  // x = 1 the difference 1 - x^p is taken from log x instead of from x^p.
  const double yp = x > 0.5 ? -std::expm1(pv * std::log(x)) : 1.0 - xp;
  const double l = (x > 0.5 ? std::log(yp) : std::log1p(-xp)) / pv;
  const double y = std::exp(l);
  const double omy = -std::expm1(l);
  return arcsin_impl(p, y, yp, omy);
}

EvalResult arctan_p(PExponent pe, double x) {
  require_nonnegative(x, "arctan_p");
  const double p = pe.value();
  const double r = pe.reciprocal();
  if (x == 0.0) return {0.0, 0.0, Method::closed_form};
  if (std::isinf(x)) return {constants(pe).a_p, 0.0, Method::closed_form};
  double w, pref;
  if (x <= 1.0) {
    const double xp = std::pow(x, p);
    w = xp / (1.0 + xp);
    pref = x * std::exp(-r * std::log1p(xp));
  } else {
    const double xmp = std::exp(-p * std::log(x));
    w = 1.0 / (1.0 + xmp);
    pref = std::exp(-r * std::log1p(xmp));
    if (w > kSeriesSwitch) {
      // pi_p/2 minus int_x^inf dt/(1+t^p).
      const EvalResult t = arctan_p_tail(pe, x);
      const double a = constants(pe).a_p;
      return {a - t.value, t.abs_error + kEps * a, Method::connection_formula};
    }
  }
  EvalResult f = hyper2f1({r, r, 1.0 + r, w});
  return {pref * f.value, pref * f.abs_error, Method::pfaff_transform};
}

EvalResult arsinh_p(PExponent pe, double x) {
  require_nonnegative(x, "arsinh_p");
  const double p = pe.value();
  const double r = pe.reciprocal();
  if (x == 0.0) return {0.0, 0.0, Method::closed_form};
  if (std::isinf(x)) return {x, 0.0, Method::closed_form};
  double w, pref;
  if (x <= 1.0) {
    const double xp = std::pow(x, p);
    w = xp / (1.0 + xp);
    pref = x * std::exp(-r * std::log1p(xp));
  } else {
    const double xmp = std::exp(-p * std::log(x));
    w = 1.0 / (1.0 + xmp);
    pref = std::exp(-r * std::log1p(xmp));
  }
  if (w <= kArsinhQuadSwitch) {
    EvalResult f = hyper2f1({1.0, r, 1.0 + r, w});
    return {pref * f.value, pref * f.abs_error, Method::pfaff_transform};
  }
  // c_p + log x + int_{1/x}^1 ((1 + s^p)^{-1/p} - 1) / s ds
  auto g = [p, r](double s, double, double) {
    const double sp = std::exp(p * std::log(s));
    return std::expm1(-r * std::log1p(sp)) / s;
  };
  QuadratureResult q = tanh_sinh(g, 1.0 / x, 1.0, production_quad());
  const double c = constants(pe).c_p;
  const double v = c + std::log(x) + q.value;
  return {v, q.abs_error + 2.0 * kEps * std::abs(v), Method::quadrature};
}

EvalResult artanh_p(PExponent pe, double x) {
  require_finite(x, "artanh_p");
  if (x < 0.0) throw DomainError("artanh_p: x must be >= 0");
  if (x >= 1.0) throw DomainError("artanh_p: x must be < 1");
  const double p = pe.value();
  const double r = pe.reciprocal();
  if (x == 0.0) return {0.0, 0.0, Method::closed_form};
  const double xp = std::pow(x, p);
  if (xp <= kArtanhQuadSwitch) {
    EvalResult f = hyper2f1({1.0, r, 1.0 + r, xp});
    return {x * f.value, x * f.abs_error, Method::direct_series};
  }
  // Subtract the 1/(p(1-t)) singularity and add it back in closed form.
  const double omx = 1.0 - x;
  auto h = [p, omx](double t, double, double dr) {
    const double u = omx + dr;
    return 1.0 / one_minus_pow(t, u, p) - 1.0 / (p * u);
  };
  QuadratureResult q = tanh_sinh(h, 0.0, x, production_quad());
  const double v = q.value - std::log(omx) / p;
  return {v, q.abs_error + 2.0 * kEps * std::abs(v), Method::quadrature};
}

EvalResult arcsin_p_tail(PExponent p, double w) {
  require_unit_closed(w, "arcsin_p_tail");
  if (w == 0.0) return {0.0, 0.0, Method::closed_form};
  QuadratureResult q = arcsin_tail(p.value(), w);
  return {q.value, q.abs_error, Method::quadrature};
}

EvalResult arctan_p_tail(PExponent pe, double x) {
  require_nonnegative(x, "arctan_p_tail");
  if (x < 1.0) throw DomainError("arctan_p_tail: x must be >= 1");
  if (std::isinf(x)) return {0.0, 0.0, Method::closed_form};
  // x^{1-p}/(p-1) F(1, 1 - 1/p; 2 - 1/p; -x^{-p}).
  const double p = pe.value();
  const double s = 1.0 - pe.reciprocal();
  const double lx = std::log(x);
  const EvalResult f = hyper2f1({1.0, s, 1.0 + s, -std::exp(-p * lx)});
  const double scale = std::exp((1.0 - p) * lx) / (p - 1.0);
  return {scale * f.value, scale * f.abs_error, Method::connection_formula};
}

EvalResult inverse(PFunctionKind k, PExponent p, double x) {
  switch (k) {
    case PFunctionKind::arcsin_p: return arcsin_p(p, x);
    case PFunctionKind::arccos_p: return arccos_p(p, x);
    case PFunctionKind::arctan_p: return arctan_p(p, x);
    case PFunctionKind::arsinh_p: return arsinh_p(p, x);
    case PFunctionKind::artanh_p: return artanh_p(p, x);
  }
  throw DomainError("inverse: unknown kind");
}

double inverse_derivative(PFunctionKind k, PExponent pe, double x) {
  const double p = pe.value();
  const double r = pe.reciprocal();
  const std::string name(to_string(k));
  switch (k) {
    case PFunctionKind::arcsin_p:
      require_unit_closed(x, name.c_str());
      if (x == 1.0) throw DomainError(name + ": derivative is infinite at x = 1");
      return std::exp(-r * std::log(one_minus_pow(x, 1.0 - x, p)));
    case PFunctionKind::arccos_p: {
      require_unit_closed(x, name.c_str());
      if (x == 1.0) throw DomainError(name + ": derivative is infinite at x = 1");
      if (x == 0.0) {
        if (p < 2.0) throw DomainError(name + ": derivative is infinite at x = 0");
        return p == 2.0 ? -1.0 : -0.0;
      }
      const double d = one_minus_pow(x, 1.0 - x, p);
      return -std::pow(x, p - 2.0) * std::pow(d, r - 1.0);
    }
    case PFunctionKind::arctan_p:
      require_nonnegative(x, name.c_str());
      if (x > 1.0) {
        const double xmp = std::pow(x, -p);
        return xmp / (1.0 + xmp);
      }
      return 1.0 / (1.0 + std::pow(x, p));
    case PFunctionKind::arsinh_p:
      require_nonnegative(x, name.c_str());
      if (x > 1.0) return std::exp(-r * std::log1p(std::pow(x, -p))) / x;
      return std::exp(-r * std::log1p(std::pow(x, p)));
    case PFunctionKind::artanh_p:
      require_finite(x, name.c_str());
      if (x < 0.0) throw DomainError(name + ": x must be >= 0");
      if (x >= 1.0) throw DomainError(name + ": x must be < 1");
      return 1.0 / one_minus_pow(x, 1.0 - x, p);
  }
  throw DomainError("inverse_derivative: unknown kind");
}

EvalResult quadrature_oracle(PFunctionKind k, PExponent pe, double x) {
  const double p = pe.value();
  const double r = pe.reciprocal();
  switch (k) {
    case PFunctionKind::arcsin_p:
    case PFunctionKind::arccos_p:
      require_unit_closed(x, to_string(k).data());
      break;
    case PFunctionKind::artanh_p:
      require_finite(x, "artanh_p");
      if (x < 0.0) throw DomainError("artanh_p: x must be >= 0");
      if (x >= 1.0) throw DomainError("artanh_p: x must be < 1");
      break;
    default:
      require_nonnegative(x, to_string(k).data());
      if (std::isinf(x)) throw DomainError(std::string(to_string(k)) + ": x must be finite");
  }

  // Upper limit and its distance to 1, the only place the integrands can blow up.
  double hi = x;
  double om_hi = 1.0 - x;
  if (k == PFunctionKind::arccos_p) {
    const double l = std::log1p(-std::pow(x, p)) / p;
    hi = std::exp(l);
    om_hi = -std::expm1(l);
  }
  if (hi == 0.0) return {0.0, 0.0, Method::quadrature};

  QuadratureOptions o;
  o.abs_tol = 1e-12 * std::min(1.0, hi);
  o.rel_tol = 1e-13;

  EndpointIntegrand f;
  switch (k) {
    case PFunctionKind::arcsin_p:
    case PFunctionKind::arccos_p:
      f = [p, r, om_hi](double t, double, double dr) {
        return std::pow(one_minus_pow(t, om_hi + dr, p), -r);
      };
      break;
    case PFunctionKind::artanh_p:
      f = [p, om_hi](double t, double, double dr) {
        return 1.0 / one_minus_pow(t, om_hi + dr, p);
      };
      break;
    case PFunctionKind::arctan_p:
      f = [p](double t, double, double) { return 1.0 / (1.0 + std::pow(t, p)); };
      break;
    case PFunctionKind::arsinh_p:
      f = [p, r](double t, double, double) { return std::pow(1.0 + std::pow(t, p), -r); };
      break;
  }

  double lim = std::min(hi, 1.0);
  QuadratureResult q = tanh_sinh(f, 0.0, lim, o);
  double value = q.value;
  double err = q.abs_error;
  if (hi > 1.0) {
    // Remaining piece over [1, x] after t = 1/s.
    EndpointIntegrand g;
    if (k == PFunctionKind::arctan_p) {
      g = [p](double s, double, double) {
        return std::pow(s, p - 2.0) / (1.0 + std::pow(s, p));
      };
    } else {
      g = [p, r](double s, double, double) {
        return std::pow(1.0 + std::pow(s, p), -r) / s;
      };
    }
    QuadratureResult q2 = tanh_sinh(g, 1.0 / hi, 1.0, o);
    value += q2.value;
    err += q2.abs_error;
  }
  return {value, err, Method::quadrature};
}

}  // namespace ptrig
