#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "ptrig/constants.hpp"
#include "ptrig/forward.hpp"
#include "ptrig/ineq.hpp"
#include "ptrig/inverse.hpp"
#include "ptrig/specfun.hpp"

namespace ptrig {
namespace {

constexpr double kPi = std::numbers::pi;

double asn(double p, double x) { return arcsin_p(PExponent(p), x).value; }
double acs(double p, double x) { return arccos_p(PExponent(p), x).value; }
double atn(double p, double x) { return arctan_p(PExponent(p), x).value; }
double ash(double p, double x) { return arsinh_p(PExponent(p), x).value; }
double ath(double p, double x) { return artanh_p(PExponent(p), x).value; }
double sn(double p, double y) { return sin_p(PExponent(p), y).value; }
double tn(double p, double y) { return tan_p(PExponent(p), y).value; }
double snh(double p, double y) { return sinh_p(PExponent(p), y).value; }
double tnh(double p, double y) { return tanh_p(PExponent(p), y).value; }
double pip(double p) { return pi_p(PExponent(p)); }
double ap(double p) { return constants(PExponent(p)).a_p; }
double bp(double p) { return constants(PExponent(p)).b_p; }
double cp(double p) { return constants(PExponent(p)).c_p; }

// 1 - x^p without cancellation near x = 1.
double one_minus_pow(double x, double p) { return -std::expm1(p * std::log(x)); }

double f21(double a, double b, double c, double z) { return hyper2f1({a, b, c, z}).value; }

Variable p_var() {
  Variable v;
  v.name = "p";
  v.lo = 1.1;
  v.hi = 50.0;
  v.spacing = Spacing::list;
  v.values = {1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0, 50.0};
  v.log_random = true;
  return v;
}

Variable lin(std::string name, double lo, double hi, int count) {
  Variable v;
  v.name = std::move(name);
  v.lo = lo;
  v.hi = hi;
  v.count = count;
  return v;
}

Variable logv(std::string name, double lo, double hi, int count) {
  Variable v = lin(std::move(name), lo, hi, count);
  v.spacing = Spacing::log_chebyshev;
  v.log_random = true;
  return v;
}

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double r = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo * std::exp(r * i);
  return out;
}

// Parameter grids for monotonicity in k (or p) at a fixed sample.
const std::vector<double>& k_grid() {
  static const std::vector<double> g = geometric(1.0 / 16, 16.0, 25);
  return g;
}

const std::vector<double>& unit_k_grid() {
  static const std::vector<double> g = grid_points(lin("k", 0.0, 1.0, 24));
  return g;
}

template <class F>
std::vector<double> along(const std::vector<double>& ks, F f) {
  std::vector<double> out;
  out.reserve(ks.size());
  for (double k : ks) out.push_back(f(k));
  return out;
}

// r >= s ordering used by the two-point ratio checks.
std::pair<double, double> ordered(double a, double b) { return {std::max(a, b), std::min(a, b)}; }

InequalityCheck make(std::string id, std::string description, std::vector<Variable> vars,
                     Predicate pred, Expectation e = Expectation::holds) {
  return {std::move(id), std::move(description), std::move(vars), std::move(pred), e};
}

double zhu_bound(double x) {
  const double q = std::sqrt(1 + x * x);
  return 6 * std::sqrt(2.0) * std::sqrt(q - 1) / (4 + std::sqrt(2.0) * std::sqrt(q + 1));
}

double arsinh_lower(double p, double x) {
  const double xp = std::pow(x, p);
  const double z = std::pow(xp / (1 + xp), 1 / p);
  return z * (1 + std::log1p(xp) / (1 + p));
}

double h_curve(double y) {
  const double t = 0.5 * kPi * y;
  return 0.5 * kPi * (-y * std::log(y)) / std::tan(t) + std::log(std::sin(t));
}

double g_curve(double y) {
  const double t = 0.5 * kPi * y;
  return std::log(std::cosh(t)) - 0.5 * kPi * y * std::log(y) * std::tanh(t);
}

double asin_gap(double x) {
  const double a = std::asin(x);
  return x / std::sqrt(1 - x * x) * std::log(1 / x) - a * std::log(1 / a);
}

void add_inverse_bounds(std::vector<InequalityCheck>& out) {
  const auto px = [] { return std::vector<Variable>{p_var(), lin("x", 0, 1, 64)}; };

  out.push_back(make("thm1.1.1", "(1 + x^p/(p(1+p))) x < arcsin_p(x) < (pi_p/2) x, x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1], xp = std::pow(x, p);
                       return chain_le({(1 + xp / (p * (1 + p))) * x, asn(p, x), 0.5 * pip(p) * x});
                     }));
  out.push_back(make("thm1.1.2",
                     "(1 + (1-x^p)/(p(1+p))) y < arccos_p(x) < (pi_p/2) y, y = (1-x^p)^(1/p), x in (0,1)",
                     px(), [](const Sample& s) {
                       const double p = s[0], x = s[1], u = one_minus_pow(x, p);
                       const double y = std::pow(u, 1 / p);
                       return chain_le({(1 + u / (p * (1 + p))) * y, acs(p, x), 0.5 * pip(p) * y});
                     }));
  out.push_back(make("thm1.1.3",
                     "(p(1+p)(1+x^p) + x^p) x / (p(1+p)(1+x^p)^(1+1/p)) < arctan_p(x) < 2^(1/p) b_p (x^p/(1+x^p))^(1/p)",
                     px(), [](const Sample& s) {
                       const double p = s[0], x = s[1], xp = std::pow(x, p);
                       const double q = p * (1 + p);
                       const double lo = (q * (1 + xp) + xp) * x / (q * std::pow(1 + xp, 1 + 1 / p));
                       const double hi = std::pow(2.0, 1 / p) * bp(p) * std::pow(xp / (1 + xp), 1 / p);
                       return chain_le({lo, atn(p, x), hi});
                     }));
  out.push_back(make("control.thm1.1.1", "negative control: arcsin_p(x) <= (1 + x^p/(p(1+p))) x, x in (0,1)",
                     px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1], xp = std::pow(x, p);
                       return le(asn(p, x), (1 + xp / (p * (1 + p))) * x);
                     },
                     Expectation::refuted));
  out.push_back(make("thm1.2.3",
                     "z (1 + log(1+x^p)/(1+p)) < arsinh_p(x) < z (1 + log(1+x^p)/p), z = (x^p/(1+x^p))^(1/p), x in (0,1)",
                     px(), [](const Sample& s) {
                       const double p = s[0], x = s[1], xp = std::pow(x, p);
                       const double z = std::pow(xp / (1 + xp), 1 / p), l = std::log1p(xp);
                       return chain_le({z * (1 + l / (1 + p)), ash(p, x), z * (1 + l / p)});
                     }));
  out.push_back(make("thm1.2.4",
                     "x (1 - log(1-x^p)/(1+p)) < artanh_p(x) < x (1 - log(1-x^p)/p), x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1];
                       const double l = std::log(one_minus_pow(x, p));
                       return chain_le({x * (1 - l / (1 + p)), ath(p, x), x * (1 - l / p)});
                     }));

  static const std::vector<double> p_grid = geometric(1.0 / 16, 16.0, 33);
  const auto decreasing_in_p = [](auto f) {
    return [f](const Sample& s) {
      const double x = s[0];
      return nonincreasing(along(p_grid, [&](double p) { return std::pow(f(p, x), 1 / p); }));
    };
  };
  out.push_back(make("thm1.5.1", "p -> arsinh((pi/2) x^p)^(1/p) is decreasing on (0,inf), x > 0",
                     {logv("x", 0.01, 10, 64)},
                     decreasing_in_p([](double p, double x) { return std::asinh(0.5 * kPi * std::pow(x, p)); })));
  out.push_back(make("thm1.5.2", "p -> arcosh((pi/2) x^p)^(1/p) is decreasing on (0,inf), x > 1",
                     {logv("x", 1, 10, 64)},
                     decreasing_in_p([](double p, double x) { return std::acosh(0.5 * kPi * std::pow(x, p)); })));
  out.push_back(make("thm1.5.3", "p -> artanh(x^p)^(1/p) is decreasing on (0,inf), x in (0,1)",
                     {lin("x", 0, 1, 64)},
                     decreasing_in_p([](double p, double x) { return std::atanh(std::pow(x, p)); })));
  out.push_back(make("erratum.thm1.5.1", "literal reading: p -> arsinh(z^p)^(1/p) decreasing, z = pi x/2",
                     {logv("x", 0.01, 10, 64)},
                     decreasing_in_p([](double p, double x) { return std::asinh(std::pow(0.5 * kPi * x, p)); }),
                     Expectation::refuted));
}

void add_convexity(std::vector<InequalityCheck>& out) {
  out.push_back(make("lem2.3.1", "F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x), c = t(a+b) < a+b, |x| < 1",
                     {lin("a", 0, 3, 6), lin("b", 0, 3, 6), lin("t", 0, 1, 6), lin("x", -0.9, 0.9, 8)},
                     [](const Sample& s) {
                       const double a = s[0], b = s[1], c = s[2] * (a + b), x = s[3];
                       const double lhs = f21(a, b, c, x);
                       const double rhs = std::pow(1 - x, c - a - b) * f21(c - a, c - b, c, x);
                       return identity(lhs, rhs, kIdentityTolerance * std::max(1.0, std::abs(rhs)));
                     }));
  const auto abcx = [] {
    return std::vector<Variable>{lin("a", 0, 1, 8), logv("b", 0.05, 10, 8), logv("c", 0.05, 10, 8),
                                 lin("x", 0, 1, 8)};
  };
  out.push_back(make("lem2.3.2", "F(-a,b;c;x) < 1 - (ab/c) x, a, x in (0,1), b, c > 0", abcx(),
                     [](const Sample& s) {
                       const double a = s[0], b = s[1], c = s[2], x = s[3];
                       return le(f21(-a, b, c, x), 1 - a * b / c * x);
                     }));
  out.push_back(make("lem2.3.3", "F(a,b;c;x) + F(-a,b;c;x) > 2, a, x in (0,1), b, c > 0", abcx(),
                     [](const Sample& s) {
                       const double a = s[0], b = s[1], c = s[2], x = s[3];
                       return ge(f21(a, b, c, x) + f21(-a, b, c, x), 2.0);
                     }));
  out.push_back(make("lem2.3.4", "F(a,b;c;x) <= G(c)G(c-a-b)/(G(c-a)G(c-b)), c = a+b+d, x in [0,1]",
                     {logv("a", 0.05, 5, 8), logv("b", 0.05, 5, 8), logv("d", 0.05, 5, 8), lin("x", 0, 1, 8)},
                     [](const Sample& s) {
                       const double a = s[0], b = s[1], c = a + b + s[2], x = s[3];
                       const double bound =
                           std::exp(std::lgamma(c) + std::lgamma(c - a - b) - std::lgamma(c - a) - std::lgamma(c - b));
                       return le(f21(a, b, c, x), bound);
                     }));
  out.push_back(make("lem2.3.5",
                     "(F(a,b;a+b;x) - 1)/log(1/(1-x)) increases from ab/(a+b) to 1/B(a,b) on (0,1)",
                     {logv("a", 0.05, 5, 8), logv("b", 0.05, 5, 8)}, [](const Sample& s) {
                       static const std::vector<double> xs = grid_points(lin("x", 0, 1, 32));
                       const double a = s[0], b = s[1];
                       const auto f = along(xs, [&](double x) {
                         return (f21(a, b, a + b, x) - 1) / -std::log1p(-x);
                       });
                       return worst_of({nondecreasing(f), ge(f.front(), a * b / (a + b)),
                                        le(f.back(), 1 / beta(a, b))});
                     }));

  const auto px = [] { return std::vector<Variable>{p_var(), lin("x", 0, 1, 64)}; };
  const auto in_k = [](auto f, bool increasing) {
    return [f, increasing](const Sample& s) {
      const double p = s[0], x = s[1];
      const auto v = along(k_grid(), [&](double k) { return std::pow(f(p, std::pow(x, k)), 1 / k); });
      return increasing ? nondecreasing(v) : nonincreasing(v);
    };
  };
  out.push_back(make("lem2.4.1", "k -> arcsin_p(x^k)^(1/k) is decreasing on (0,inf), x in (0,1)", px(),
                     in_k(asn, false)));
  out.push_back(make("lem2.4.2", "k -> artanh_p(x^k)^(1/k) is decreasing on (0,inf), x in (0,1)", px(),
                     in_k(ath, false)));
  out.push_back(make("lem2.4.3", "k -> arctan_p(x^k)^(1/k) is increasing on (0,inf), x in (0,1)", px(),
                     in_k(atn, true)));
  out.push_back(make("lem2.4.4", "k -> arsinh_p(x^k)^(1/k) is increasing on (0,inf), x in (0,1)", px(),
                     in_k(ash, true)));

  const auto prs = [] { return std::vector<Variable>{p_var(), lin("r", 0, 1, 12), lin("s", 0, 1, 12)}; };
  out.push_back(make("thm2.5.1",
                     "arcsin_p(rs) <= sqrt(arcsin_p(r^2) arcsin_p(s^2)) <= arcsin_p(r) arcsin_p(s), r, s in (0,1)",
                     prs(), [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return chain_le({asn(p, r * s), std::sqrt(asn(p, r * r) * asn(p, s * s)),
                                        asn(p, r) * asn(p, s)});
                     }));
  out.push_back(make("thm2.5.2",
                     "artanh_p(rs) <= sqrt(artanh_p(r^2) artanh_p(s^2)) <= artanh_p(r) artanh_p(s), r, s in (0,1)",
                     prs(), [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return chain_le({ath(p, r * s), std::sqrt(ath(p, r * r) * ath(p, s * s)),
                                        ath(p, r) * ath(p, s)});
                     }));
  out.push_back(make("thm2.5.3",
                     "arsinh_p(r) arsinh_p(s) <= sqrt(arsinh_p(r^2) arsinh_p(s^2)) <= arsinh_p(rs), r, s in (0,1)",
                     prs(), [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return chain_le({ash(p, r) * ash(p, s), std::sqrt(ash(p, r * r) * ash(p, s * s)),
                                        ash(p, r * s)});
                     }));
  out.push_back(make("thm2.5.4",
                     "arctan_p(r) arctan_p(s) <= sqrt(arctan_p(r^2) arctan_p(s^2)) <= arctan_p(rs), r, s in (0,1)",
                     prs(), [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return chain_le({atn(p, r) * atn(p, s), std::sqrt(atn(p, r * r) * atn(p, s * s)),
                                        atn(p, r * s)});
                     }));
  out.push_back(make("erratum.thm2.5.4",
                     "as stated: artanh_p(r) artanh_p(s) <= sqrt(artanh_p(r^2) artanh_p(s^2)) <= artanh_p(rs)",
                     prs(),
                     [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return chain_le({ath(p, r) * ath(p, s), std::sqrt(ath(p, r * r) * ath(p, s * s)),
                                        ath(p, r * s)});
                     },
                     Expectation::refuted));

  const auto prsk = [](double klo, double khi) {
    return std::vector<Variable>{p_var(), lin("r", 0, 1, 8), lin("s", 0, 1, 8), logv("k", klo, khi, 5)};
  };
  out.push_back(make("lem2.6.1", "(arcsin_p(s)/arcsin_p(r))^k <= arcsin_p(s^k)/arcsin_p(r^k), r >= s in (0,1), k > 1",
                     prsk(1, 10), [](const Sample& v) {
                       const double p = v[0], k = v[3];
                       const auto [r, s] = ordered(v[1], v[2]);
                       return le(std::pow(asn(p, s) / asn(p, r), k), asn(p, std::pow(s, k)) / asn(p, std::pow(r, k)));
                     }));
  out.push_back(make("lem2.6.2", "(artanh_p(s)/artanh_p(r))^k <= artanh_p(s^k)/artanh_p(r^k), r >= s in (0,1), k > 1",
                     prsk(1, 10), [](const Sample& v) {
                       const double p = v[0], k = v[3];
                       const auto [r, s] = ordered(v[1], v[2]);
                       return le(std::pow(ath(p, s) / ath(p, r), k), ath(p, std::pow(s, k)) / ath(p, std::pow(r, k)));
                     }));
  out.push_back(make("lem2.6.3", "arsinh_p(s^k)/arsinh_p(r^k) <= (arsinh_p(s)/arsinh_p(r))^k, r >= s in (0,1), k > 1",
                     prsk(1, 10), [](const Sample& v) {
                       const double p = v[0], k = v[3];
                       const auto [r, s] = ordered(v[1], v[2]);
                       return le(ash(p, std::pow(s, k)) / ash(p, std::pow(r, k)), std::pow(ash(p, s) / ash(p, r), k));
                     }));

  // k > 1 gives the stated direction, k < 1 the reverse.
  const auto ratio_power = [](auto f, bool le_for_k_gt_1) {
    return [f, le_for_k_gt_1](const Sample& v) {
      const double p = v[0], k = v[3];
      const auto [r, s] = ordered(v[1], v[2]);
      const double lhs = std::pow(f(p, r) / f(p, s), k);
      const double rhs = f(p, std::pow(r, k)) / f(p, std::pow(s, k));
      return (k > 1) == le_for_k_gt_1 ? le(lhs, rhs) : ge(lhs, rhs);
    };
  };
  const auto prsk8 = [](double lo, double hi, bool log_scale) {
    Variable r = log_scale ? logv("r", lo, hi, 6) : lin("r", lo, hi, 6);
    Variable s = r;
    s.name = "s";
    return std::vector<Variable>{p_var(), r, s, logv("k", 0.1, 10, 6)};
  };
  out.push_back(make("lem2.8.1",
                     "(sin_p(r)/sin_p(s))^k <= sin_p(r^k)/sin_p(s^k), r >= s in (0,1), k > 1; reversed for k < 1",
                     prsk8(0, 1, false), ratio_power(sn, true)));
  out.push_back(make("lem2.8.2",
                     "(tanh_p(r)/tanh_p(s))^k <= tanh_p(r^k)/tanh_p(s^k), r >= s in (0,1), k > 1; reversed for k < 1",
                     prsk8(0, 1, false), ratio_power(tnh, true)));
  out.push_back(make("lem2.8.3",
                     "(sinh_p(r)/sinh_p(s))^k >= sinh_p(r^k)/sinh_p(s^k), r >= s in (0,1), k > 1; reversed for k < 1",
                     prsk8(0, 1, false), ratio_power(snh, false)));
  out.push_back(make("erratum.lem2.8.2", "tanh_p ratio inequality extended to r, s in (0,inf)",
                     prsk8(0.05, 8, true), ratio_power(tnh, true), Expectation::refuted));

  const auto unit_pair = [](const char* r, const char* s, int n) {
    return std::vector<Variable>{p_var(), lin(r, 0, 1, n), lin(s, 0, 1, n)};
  };
  const auto pos_pair = [](double hi) {
    return std::vector<Variable>{p_var(), logv("r", 0.02, hi, 12), logv("s", 0.02, hi, 12)};
  };
  out.push_back(make("lem2.9.1", "sqrt(sin_p(r^2) sin_p(s^2)) <= sin_p(rs), r, s in (0, sqrt(a_p))",
                     unit_pair("r/sqrt(a_p)", "s/sqrt(a_p)", 12), [](const Sample& v) {
                       const double p = v[0], m = std::sqrt(ap(p)), r = m * v[1], s = m * v[2];
                       return le(std::sqrt(sn(p, r * r) * sn(p, s * s)), sn(p, r * s));
                     }));
  out.push_back(make("lem2.9.2", "sqrt(tanh_p(r^2) tanh_p(s^2)) <= tanh_p(rs), r, s in (0,inf)", pos_pair(8),
                     [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return le(std::sqrt(tnh(p, r * r) * tnh(p, s * s)), tnh(p, r * s));
                     }));
  out.push_back(make("lem2.9.3", "sinh_p(rs) <= sqrt(sinh_p(r^2) sinh_p(s^2)), r, s in (0,inf)", pos_pair(8),
                     [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return le(snh(p, r * s), std::sqrt(snh(p, r * r) * snh(p, s * s)));
                     }));
  out.push_back(make("lem2.10.1", "sqrt(sin_p(r) sin_p(s)) <= sin_p((r+s)/2), r, s in (0, a_p)",
                     unit_pair("r/a_p", "s/a_p", 12), [](const Sample& v) {
                       const double p = v[0], a = ap(p), r = a * v[1], s = a * v[2];
                       return le(std::sqrt(sn(p, r) * sn(p, s)), sn(p, 0.5 * (r + s)));
                     }));
  out.push_back(make("lem2.10.2", "sqrt(sinh_p(r) sinh_p(s)) <= sinh_p((r+s)/2), r, s in (0,inf)", pos_pair(30),
                     [](const Sample& v) {
                       const double p = v[0], r = v[1], s = v[2];
                       return le(std::sqrt(snh(p, r) * snh(p, s)), snh(p, 0.5 * (r + s)));
                     }));
  out.push_back(make("lem2.11.1", "sin_p(r+s) <= sin_p(r) + sin_p(s), r, s in (0, pi_p/4)",
                     unit_pair("r/(pi_p/4)", "s/(pi_p/4)", 12), [](const Sample& v) {
                       const double p = v[0], m = 0.25 * pip(p), r = m * v[1], s = m * v[2];
                       return le(sn(p, r + s), sn(p, r) + sn(p, s));
                     }));
  out.push_back(make("lem2.11.2", "tanh_p(r+s) <= tanh_p(r) + tanh_p(s), r, s in (0, b_p/2)",
                     unit_pair("r/(b_p/2)", "s/(b_p/2)", 12), [](const Sample& v) {
                       const double p = v[0], m = 0.5 * bp(p), r = m * v[1], s = m * v[2];
                       return le(tnh(p, r + s), tnh(p, r) + tnh(p, s));
                     }));
  out.push_back(make("lem2.11.3", "tan_p(r+s) >= tan_p(r) + tan_p(s), r, s in (0, b_p/2)",
                     unit_pair("r/(b_p/2)", "s/(b_p/2)", 12), [](const Sample& v) {
                       const double p = v[0], m = 0.5 * bp(p), r = m * v[1], s = m * v[2];
                       return ge(tn(p, r + s), tn(p, r) + tn(p, s));
                     }));
  out.push_back(make("lem2.11.4", "sinh_p(r+s) >= sinh_p(r) + sinh_p(s), r, s in (0, c_p/2)",
                     unit_pair("r/(c_p/2)", "s/(c_p/2)", 12), [](const Sample& v) {
                       const double p = v[0], m = 0.5 * cp(p), r = m * v[1], s = m * v[2];
                       return ge(snh(p, r + s), snh(p, r) + snh(p, s));
                     }));
}

void add_constants_identities(std::vector<InequalityCheck>& out) {
  out.push_back(make("rem3.3",
                     "at p = 2 both lower bounds stay below arsinh(x) and differ by at most 0.02 on (0,1)",
                     {lin("x", 0, 1, 64)}, [](const Sample& s) {
                       const double x = s[0], v = std::asinh(x);
                       const double ours = arsinh_lower(2, x), zhu = zhu_bound(x);
                       return worst_of({le(ours, v), le(zhu, v), le(std::abs(ours - zhu), 0.02)});
                     }));

  const auto px = [] { return std::vector<Variable>{p_var(), lin("x", 0, 1, 64)}; };
  out.push_back(make("lem3.4.1", "arctan_p(x) < arsinh_p(x) < arcsin_p(x) < artanh_p(x), x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1];
                       return chain_le({atn(p, x), ash(p, x), asn(p, x), ath(p, x)});
                     }));
  out.push_back(make("lem3.4.2", "tanh_p(z) < sin_p(z) < sinh_p(z), z in (0, a_p)",
                     {p_var(), lin("z/a_p", 0, 1, 64)}, [](const Sample& s) {
                       const double p = s[0], z = ap(p) * s[1];
                       return chain_le({tnh(p, z), sn(p, z), snh(p, z)});
                     }));
  out.push_back(make("lem3.4.3", "sinh_p(z) < tan_p(z), z in (0, b_p)", {p_var(), lin("z/b_p", 0, 1, 64)},
                     [](const Sample& s) {
                       const double p = s[0], z = bp(p) * s[1];
                       return le(snh(p, z), tn(p, z));
                     }));

  const double p_star = kPi / std::sqrt(6.0);
  out.push_back(make("lem3.5",
                     "6p^2/(3p^2-2) <= pi_p on (1,100], and pi_p <= 12p^2/(6p^2-pi^2) for p > pi/sqrt(6)",
                     {logv("p", 1, 100, 512)}, [p_star](const Sample& s) {
                       const double p = s[0], v = pip(p), p2 = p * p;
                       const Verdict lower = le(6 * p2 / (3 * p2 - 2), v);
                       if (p <= p_star) return lower;
                       return worst_of({lower, le(v, 12 * p2 / (6 * p2 - kPi * kPi))});
                     }));
  out.push_back(make("erratum.lem3.5", "upper bound pi_p <= 12p^2/(6p^2-pi^2) for p in (1, pi/sqrt(6))",
                     {logv("p", 1, p_star, 64)},
                     [](const Sample& s) {
                       const double p = s[0], p2 = p * p;
                       return le(pip(p), 12 * p2 / (6 * p2 - kPi * kPi));
                     },
                     Expectation::refuted));

  out.push_back(make("lem3.6.1", "pi_{rs} <= sqrt(pi_{r^2} pi_{s^2}) <= sqrt(pi_r pi_s), r, s > 1",
                     {logv("r", 1, 20, 24), logv("s", 1, 20, 24)}, [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return chain_le({pip(r * s), std::sqrt(pip(r * r) * pip(s * s)), std::sqrt(pip(r) * pip(s))});
                     }));
  out.push_back(make("lem3.6.2", "pi_{r^a s^(1-a)} <= a pi_r + (1-a) pi_s, a in (0,1), r, s > 1",
                     {lin("a", 0, 1, 8), logv("r", 1, 20, 12), logv("s", 1, 20, 12)}, [](const Sample& v) {
                       const double a = v[0], r = v[1], s = v[2];
                       return le(pip(std::pow(r, a) * std::pow(s, 1 - a)), a * pip(r) + (1 - a) * pip(s));
                     }));
  out.push_back(make("lem3.6.3", "(pi_s/pi_r)^k <= pi_{s^k}/pi_{r^k}, 1 < r <= s, k > 1",
                     {logv("k", 1, 10, 6), logv("r", 1, 20, 12), logv("s", 1, 20, 12)}, [](const Sample& v) {
                       const double k = v[0];
                       const auto [s, r] = ordered(v[1], v[2]);
                       return le(std::pow(pip(s) / pip(r), k), pip(std::pow(s, k)) / pip(std::pow(r, k)));
                     }));

  out.push_back(make("lem3.7.1", "arcsin_p(x/(1+x^p)^(1/p)) = arctan_p(x), x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1];
                       return identity(asn(p, x / std::pow(1 + std::pow(x, p), 1 / p)), atn(p, x));
                     }));
  out.push_back(make("lem3.7.2", "arcsin_p(x) = arctan_p(x/(1-x^p)^(1/p)), x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1];
                       return identity(asn(p, x), atn(p, x / std::pow(one_minus_pow(x, p), 1 / p)));
                     }));
  out.push_back(make("lem3.7.3", "arccos_p(x) = arctan_p((1-x^p)^(1/p)/x), x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1];
                       return identity(acs(p, x), atn(p, std::pow(one_minus_pow(x, p), 1 / p) / x));
                     }));
  out.push_back(make("lem3.7.4", "arccos_p(1/(1+x^p)^(1/p)) = arctan_p(x), x in (0,1)", px(),
                     [](const Sample& s) {
                       const double p = s[0], x = s[1];
                       return identity(acs(p, std::pow(1 + std::pow(x, p), -1 / p)), atn(p, x));
                     }));
}

void add_elementary(std::vector<InequalityCheck>& out) {
  const auto unit = [] { return std::vector<Variable>{lin("x", 0, 1, 64)}; };
  const auto mono_k = [](auto f, bool increasing, const std::vector<double>& ks) {
    return [f, increasing, &ks](const Sample& s) {
      const auto v = along(ks, [&](double k) { return f(k, s[0]); });
      return increasing ? nondecreasing(v) : nonincreasing(v);
    };
  };
  const auto& kg = k_grid();

  out.push_back(make("lem4.1.1", "k -> sin(x^k)^(1/k) is increasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::sin(std::pow(x, k)), 1 / k); }, true, kg)));
  out.push_back(make("lem4.1.2", "k -> cos(x^k)^(1/k) is increasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::cos(std::pow(x, k)), 1 / k); }, true, kg)));
  out.push_back(make("lem4.1.3", "k -> tanh(z^k)^(1/k) is increasing on (0,inf), z > 0",
                     {logv("z", 0.01, 20, 64)},
                     mono_k([](double k, double z) { return std::pow(std::tanh(std::pow(z, k)), 1 / k); }, true, kg)));

  const auto rs = [](double lo, double hi, bool log_scale) {
    if (log_scale) return std::vector<Variable>{logv("r", lo, hi, 32), logv("s", lo, hi, 32)};
    return std::vector<Variable>{lin("r", lo, hi, 32), lin("s", lo, hi, 32)};
  };
  out.push_back(make("lem4.2.1", "sqrt(arccos(r^2) arccos(s^2)) < arccos(rs), r, s in (0,1)", rs(0, 1, false),
                     [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return le(std::sqrt(std::acos(r * r) * std::acos(s * s)), std::acos(r * s));
                     }));
  out.push_back(make("lem4.2.2",
                     "arctan(r) arctan(s) < sqrt(arctan(r^2) arctan(s^2)) < arctan(rs), r, s in (0,1)",
                     rs(0, 1, false), [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return chain_le({std::atan(r) * std::atan(s), std::sqrt(std::atan(r * r) * std::atan(s * s)),
                                        std::atan(r * s)});
                     }));
  out.push_back(make("lem4.2.3", "sqrt(arcosh(r^2) arcosh(s^2)) < arcosh(rs), r, s > 1", rs(1, 20, true),
                     [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return le(std::sqrt(std::acosh(r * r) * std::acosh(s * s)), std::acosh(r * s));
                     }));
  out.push_back(make("lem4.3.1a", "cosh(rs) < sqrt(cosh(r^2) cosh(s^2)), r, s > 0", rs(0.01, 8, true),
                     [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return le(std::cosh(r * s), std::sqrt(std::cosh(r * r) * std::cosh(s * s)));
                     }));
  out.push_back(make("lem4.3.1b", "sqrt(cosh(r^2) cosh(s^2)) < cosh(r) cosh(s), r, s in (0,1)", rs(0, 1, false),
                     [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return le(std::sqrt(std::cosh(r * r) * std::cosh(s * s)), std::cosh(r) * std::cosh(s));
                     }));
  out.push_back(make("lem4.3.2",
                     "tanh(r) tanh(s) < sqrt(tanh(r^2) tanh(s^2)) < sqrt(tanh(r^2 s^2)), r, s > 0",
                     rs(0.01, 8, true), [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return chain_le({std::tanh(r) * std::tanh(s), std::sqrt(std::tanh(r * r) * std::tanh(s * s)),
                                        std::sqrt(std::tanh(r * r * s * s))});
                     }));

  out.push_back(make("lem4.4.5", "(pi/2) y cot(pi y/2) log y <= log sin(pi y/2), y in (0,1)",
                     {lin("y", 0, 1, 64)}, [](const Sample& s) {
                       const double y = s[0], t = 0.5 * kPi * y;
                       return le(t / std::tan(t) * std::log(y), std::log(std::sin(t)));
                     }));
  out.push_back(make("lem4.4.6", "y coth(y) log y <= log sinh(y), y in (0,1)", {lin("y", 0, 1, 64)},
                     [](const Sample& s) {
                       const double y = s[0];
                       return le(y / std::tanh(y) * std::log(y), std::log(std::sinh(y)));
                     }));
  out.push_back(make("lem4.4.7", "log tan(pi y/2) >= (pi/2) y log(y) csc(pi y/2) sec(pi y/2), y in (0,1)",
                     {lin("y", 0, 1, 64)}, [](const Sample& s) {
                       const double y = s[0], t = 0.5 * kPi * y;
                       return ge(std::log(std::tan(t)), t * std::log(y) / (std::sin(t) * std::cos(t)));
                     }));

  const double log_half_pi = std::log(0.5 * kPi);
  out.push_back(make("lem4.8.1",
                     "H(y) = (pi/2) log(y^-y) cot(pi y/2) - log csc(pi y/2) decreases from log(pi/2) to 0 on (0,1)",
                     rs(0, 1, false), [log_half_pi](const Sample& v) {
                       const auto [b, a] = ordered(v[0], v[1]);
                       const double ha = h_curve(a), hb = h_curve(b);
                       return worst_of({ge(ha, hb), ge(hb, 0.0), le(ha, log_half_pi),
                                        near(h_curve(1e-9), log_half_pi, 1e-3), near(h_curve(1 - 1e-9), 0.0, 1e-3)});
                     }));
  const double g_stated = 0.5 * kPi * std::log(std::cosh(0.5 * kPi));
  out.push_back(make("lem4.8.2",
                     "G(y) = log cosh(pi y/2) - (pi/2) y log(y) tanh(pi y/2) increases on (0,1) inside (0, pi log cosh(pi/2)/2)",
                     rs(0, 1, false), [g_stated](const Sample& v) {
                       const auto [b, a] = ordered(v[0], v[1]);
                       const double ga = g_curve(a), gb = g_curve(b);
                       return worst_of({le(ga, gb), ge(ga, 0.0), le(gb, g_stated), near(g_curve(1e-9), 0.0, 1e-3)});
                     }));
  out.push_back(make("erratum.lem4.8.2", "G(1-) reaches the stated endpoint pi log cosh(pi/2)/2",
                     {lin("y", 0, 1, 64)},
                     [g_stated](const Sample&) { return near(g_curve(1 - 1e-9), g_stated, 1e-3); },
                     Expectation::refuted));

  const double g_top = 0.5 * kPi * log_half_pi;
  out.push_back(make("lem4.9",
                     "g(x) = x/sqrt(1-x^2) log(1/x) - arcsin(x) log(1/arcsin(x)) increases from 0 to (pi/2) log(pi/2) on (0,1); x^(x/sqrt(1-x^2)) < arcsin(x)^arcsin(x) < (pi/2)^(pi/2) x^(x/sqrt(1-x^2))",
                     rs(0, 1, false), [g_top](const Sample& v) {
                       const auto [b, a] = ordered(v[0], v[1]);
                       const auto bounds = [](double x) {
                         const double e = x / std::sqrt(1 - x * x) * std::log(x);
                         const double as = std::asin(x), mid = as * std::log(as);
                         return worst_of({le(e, mid), le(mid, 0.5 * kPi * std::log(0.5 * kPi) + e)});
                       };
                       return worst_of({le(asin_gap(a), asin_gap(b)), ge(asin_gap(a), 0.0), le(asin_gap(b), g_top),
                                        near(asin_gap(1e-9), 0.0, 1e-3), near(asin_gap(1 - 1e-8), g_top, 1e-3),
                                        bounds(a), bounds(b)});
                     }));
  out.push_back(make("erratum.lem4.9", "g(1-) tends to zero", {lin("x", 0, 1, 64)},
                     [](const Sample&) { return near(asin_gap(1 - 1e-8), 0.0, 1e-3); }, Expectation::refuted));

  out.push_back(make("lem4.10.1", "k -> sin((pi/2) x^k)^(1/k) is decreasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::sin(0.5 * kPi * std::pow(x, k)), 1 / k); },
                            false, kg)));
  out.push_back(make("lem4.10.2", "k -> tan((pi/2) x^k)^(1/k) is decreasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::tan(0.5 * kPi * std::pow(x, k)), 1 / k); },
                            false, kg)));
  out.push_back(make("lem4.10.3", "k -> sinh(x^k)^(1/k) is decreasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::sinh(std::pow(x, k)), 1 / k); }, false, kg)));
  out.push_back(make("lem4.11.1", "k -> cos((pi/2) x^(1/k))^k is decreasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::cos(0.5 * kPi * std::pow(x, 1 / k)), k); },
                            false, kg)));
  out.push_back(make("lem4.11.2", "k -> cosh(x^k)^(1/k) is decreasing on (0,inf), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::cosh(std::pow(x, k)), 1 / k); }, false, kg)));
  out.push_back(make("lem4.11.3", "k -> arcosh((pi/2) x^k)^(1/k) is decreasing on (0,inf), x > 1",
                     {logv("x", 1, 10, 64)},
                     mono_k([](double k, double x) { return std::pow(std::acosh(0.5 * kPi * std::pow(x, k)), 1 / k); },
                            false, kg)));

  out.push_back(make("lem4.12.1", "sin(r) sin(s) < sqrt(sin(r^2) sin(s^2)), r, s in (0,1)", rs(0, 1, false),
                     [](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return le(std::sin(r) * std::sin(s), std::sqrt(std::sin(r * r) * std::sin(s * s)));
                     }));
  const auto cos_chain = [](const Sample& v) {
    const double r = v[0], s = v[1];
    return le(std::cos(r) * std::cos(s), std::sqrt(std::cos(r * r) * std::cos(s * s)));
  };
  const auto tan_chain = [](const Sample& v) {
    const double r = v[0], s = v[1];
    return ge(std::tan(r) * std::tan(s), std::sqrt(std::tan(r * r) * std::tan(s * s)));
  };
  out.push_back(make("lem4.12.2", "cos(r) cos(s) < sqrt(cos(r^2) cos(s^2)) < cos(rs), r, s in (0,1)",
                     rs(0, 1, false), [cos_chain](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return worst_of({cos_chain(v),
                                        le(std::sqrt(std::cos(r * r) * std::cos(s * s)), std::cos(r * s))});
                     }));
  out.push_back(make("erratum.lem4.12.2", "cos(r) cos(s) < sqrt(cos(r^2) cos(s^2)) on r, s in (0, sqrt(pi/2))",
                     rs(0, std::sqrt(0.5 * kPi), false), cos_chain, Expectation::refuted));
  out.push_back(make("lem4.12.3", "tan(r) tan(s) > sqrt(tan(r^2) tan(s^2)) > tan(rs), r, s in (0,1)",
                     rs(0, 1, false), [tan_chain](const Sample& v) {
                       const double r = v[0], s = v[1];
                       return worst_of({tan_chain(v),
                                        ge(std::sqrt(std::tan(r * r) * std::tan(s * s)), std::tan(r * s))});
                     }));
  out.push_back(make("erratum.lem4.12.3", "tan(r) tan(s) > sqrt(tan(r^2) tan(s^2)) on r, s in (0, sqrt(pi/2))",
                     rs(0, std::sqrt(0.5 * kPi), false), tan_chain, Expectation::refuted));

  out.push_back(make("lem4.13", "k -> (cos kx + sin kx)^(1/k) is decreasing on (0,1), x in (0,1)", unit(),
                     mono_k([](double k, double x) { return std::pow(std::cos(k * x) + std::sin(k * x), 1 / k); },
                            false, unit_k_grid())));
}

}  // namespace

std::vector<InequalityCheck> register_checks() {
  std::vector<InequalityCheck> out;
  add_inverse_bounds(out);
  add_convexity(out);
  add_constants_identities(out);
  add_elementary(out);
  return out;
}

}  // namespace ptrig
