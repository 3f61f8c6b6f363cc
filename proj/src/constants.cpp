#include "ptrig/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "ptrig/errors.hpp"
#include "ptrig/specfun.hpp"

namespace ptrig {

PExponent::PExponent(double p) : p_(p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    std::ostringstream msg;
    msg << "p must be a finite number > 1 (got " << p << ")";
    throw DomainError(msg.str());
  }
}

namespace {

long double pi_p_long(PExponent p) {
  const long double v = p.value();
  const long double pi = std::numbers::pi_v<long double>;
  return 2.0L * pi / (v * std::sin(pi / v));
}

}  // namespace

double pi_p(PExponent p) { return static_cast<double>(pi_p_long(p)); }

double b_p_digamma(PExponent p) {
  const double v = p.value();
  return (digamma((1.0 + v) / (2.0 * v)) - digamma(1.0 / (2.0 * v))) / (2.0 * v);
}

double b_p_hypergeometric(PExponent p) {
  const double s = p.reciprocal();
  return std::exp2(-s) * hyper2f1({s, s, 1.0 + s, 0.5}).value;
}

double b_p(PExponent p) {
  const double series = b_p_hypergeometric(p);
  const double psi = b_p_digamma(p);
  if (std::abs(series - psi) > kBpRouteTolerance * std::max(1.0, std::abs(series))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "b_p routes disagree at p=" << p.value() << ": " << series << " vs " << psi;
    throw ConsistencyError(msg.str());
  }
  return series;
}

double c_p(PExponent p) {
  const double s = p.reciprocal();
  return std::exp2(-s) * hyper2f1({1.0, s, 1.0 + s, 0.5}).value;
}

double lambda_n(PExponent p, std::int64_t n) {
  if (n < 1) throw DomainError("lambda_n: n must be a positive integer");
  const double v = p.value();
  const double value = (v - 1.0) * std::pow(static_cast<double>(n) * pi_p(p), v);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "lambda_n overflows for p=" << v << ", n=" << n;
    throw OverflowError(msg.str());
  }
  return value;
}

PConstants constants(PExponent p) {
  static std::mutex mutex;
  static std::map<double, PConstants> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p.value());
  if (it != cache.end()) return it->second;
  // Random sampling visits many distinct p; keep the cache bounded.
  if (cache.size() >= 4096) cache.clear();
  PConstants k;
  const long double pl = pi_p_long(p);
  k.pi_p = static_cast<double>(pl);
  k.a_p = 0.5 * k.pi_p;
  k.a_p_lo = static_cast<double>(0.5L * pl - k.a_p);
  k.b_p = b_p(p);
  k.c_p = c_p(p);
  return cache.emplace(p.value(), k).first->second;
}

}  // namespace ptrig
