#include "ptrig/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <random>

#include "ptrig/errors.hpp"

namespace ptrig {

namespace {

constexpr double kPi = 3.14159265358979323846;

double strict_slack(double a, double b) {
  return kStrictSlack * (1.0 + std::abs(a) + std::abs(b));
}

// Mixes the user seed with the check id so each check gets its own stream
// and adding a check does not perturb the others.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

// Uniform in [0, 1) from the top 53 bits; fixed across standard libraries.
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double draw(const Variable& v, std::mt19937_64& g) {
  const double u = unit(g);
  if (v.log_random) {
    const double a = std::log(v.lo), b = std::log(v.hi);
    const double x = std::exp(a + (b - a) * u);
    return x <= v.lo ? std::nextafter(v.lo, v.hi) : x;
  }
  // Keep draws inside the open range.
  double x = v.lo + (v.hi - v.lo) * u;
  if (x <= v.lo) x = v.lo + 0.5 * (v.hi - v.lo) * 0x1.0p-53;
  return x;
}

std::string format_point(const InequalityCheck& c, const Sample& s) {
  std::string out = "(";
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%s=%.17g", i ? ", " : "", c.variables[i].name.c_str(), s[i]);
    out += buf;
  }
  return out + ")";
}

}  // namespace

Verdict le(double lhs, double rhs) { return {rhs - lhs, strict_slack(lhs, rhs)}; }
Verdict ge(double lhs, double rhs) { return {lhs - rhs, strict_slack(lhs, rhs)}; }

Verdict worst_of(std::initializer_list<Verdict> v) {
  Verdict w{std::numeric_limits<double>::infinity(), 0.0};
  for (const Verdict& x : v) {
    if (std::isnan(x.margin)) return x;
    if (x.margin + x.slack < w.margin + w.slack) w = x;
  }
  return w;
}

Verdict chain_le(std::initializer_list<double> v) {
  Verdict w{std::numeric_limits<double>::infinity(), 0.0};
  const double* p = v.begin();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w = worst_of({w, le(p[i], p[i + 1])});
  return w;
}

Verdict chain_ge(std::initializer_list<double> v) {
  Verdict w{std::numeric_limits<double>::infinity(), 0.0};
  const double* p = v.begin();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w = worst_of({w, ge(p[i], p[i + 1])});
  return w;
}

Verdict identity(double a, double b, double tol) { return {-std::abs(a - b), tol}; }

Verdict near(double value, double target, double tol) { return {-std::abs(value - target), tol}; }

Verdict nonincreasing(const std::vector<double>& v) {
  Verdict w{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w = worst_of({w, ge(v[i], v[i + 1])});
  return w;
}

Verdict nondecreasing(const std::vector<double>& v) {
  Verdict w{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w = worst_of({w, le(v[i], v[i + 1])});
  return w;
}

std::string_view to_string(Expectation e) {
  return e == Expectation::holds ? "holds" : "refuted";
}

std::vector<double> grid_points(const Variable& v) {
  if (v.spacing == Spacing::list) return v.values;
  if (v.count < 1) throw DomainError("variable " + v.name + ": grid count must be >= 1");
  std::vector<double> out(v.count);
  // Chebyshev nodes of the first kind: interior, clustered at both ends.
  for (int i = 0; i < v.count; ++i) {
    const double c = std::cos((2.0 * (v.count - 1 - i) + 1.0) * kPi / (2.0 * v.count));
    const double t = 0.5 * (1.0 + c);
    if (v.spacing == Spacing::log_chebyshev) {
      const double a = std::log(v.lo), b = std::log(v.hi);
      out[i] = std::exp(a + (b - a) * t);
    } else {
      out[i] = v.lo + (v.hi - v.lo) * t;
    }
  }
  return out;
}

CheckReport run_check(const InequalityCheck& check, std::uint64_t seed) {
  CheckReport rep;
  rep.id = check.id;
  rep.description = check.description;
  rep.expectation = check.expectation;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  const std::size_t nv = check.variables.size();
  std::vector<std::vector<double>> grids;
  std::int64_t grid_size = 1;
  for (const Variable& v : check.variables) {
    grids.push_back(grid_points(v));
    grid_size *= static_cast<std::int64_t>(grids.back().size());
  }

  Sample s(nv);
  double worst_headroom = std::numeric_limits<double>::infinity();
  auto evaluate = [&]() {
    ++rep.samples;
    Verdict v;
    try {
      v = check.predicate(s);
    } catch (const std::exception& e) {
      ++rep.errors;
      ++rep.violations;
      if (rep.diagnostic.empty())
        rep.diagnostic = "error at " + format_point(check, s) + ": " + e.what();
      return;
    }
    if (std::isnan(v.margin)) {
      ++rep.errors;
      ++rep.violations;
      if (rep.diagnostic.empty()) rep.diagnostic = "NaN margin at " + format_point(check, s);
      return;
    }
    // Worst = least headroom above the violation threshold.
    if (v.margin + v.slack < worst_headroom) {
      worst_headroom = v.margin + v.slack;
      rep.worst_margin = v.margin;
      rep.worst_point.clear();
      for (std::size_t i = 0; i < nv; ++i) rep.worst_point.emplace_back(check.variables[i].name, s[i]);
    }
    if (v.violated()) {
      ++rep.violations;
      if (rep.diagnostic.empty()) {
        char buf[96];
        std::snprintf(buf, sizeof buf, ": margin %.6g below slack %.3g", v.margin, v.slack);
        rep.diagnostic = "violation at " + format_point(check, s) + buf;
      }
    }
  };

  // Grid product in mixed radix, last variable fastest.
  std::vector<std::size_t> idx(nv, 0);
  for (std::int64_t n = 0; n < grid_size; ++n) {
    for (std::size_t i = 0; i < nv; ++i) s[i] = grids[i][idx[i]];
    evaluate();
    for (std::size_t i = nv; i-- > 0;) {
      if (++idx[i] < grids[i].size()) break;
      idx[i] = 0;
    }
  }

  std::mt19937_64 gen(stream_seed(seed, check.id));
  const std::int64_t extra = kRandomFactor * grid_size;
  for (std::int64_t n = 0; n < extra; ++n) {
    for (std::size_t i = 0; i < nv; ++i) s[i] = draw(check.variables[i], gen);
    evaluate();
  }
  if (rep.worst_point.empty()) rep.worst_margin = 0.0;
  return rep;
}

const InequalityCheck* find_check(const std::string& id) {
  for (const InequalityCheck& c : all_checks())
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<InequalityCheck>& all_checks() {
  static const std::vector<InequalityCheck> registry = register_checks();
  return registry;
}

}  // namespace ptrig
