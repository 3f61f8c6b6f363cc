#pragma once

/**
 * @file ineq.hpp
 * @brief Inequality, monotonicity and identity claims as sampled predicates.
 *
 * A check declares its free variables with a deterministic grid and a range
 * for seeded random refinement. run_check() evaluates the predicate on the
 * full grid product plus ten times as many random points and reports the
 * worst margin. Checks marked Expectation::refuted are known-false readings
 * kept as regression evidence; they pass when a violation is found.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptrig {

enum class Spacing { chebyshev, log_chebyshev, list };

struct Variable {
  std::string name;
  double lo = 0.0;  // open range used for grid and random draws
  double hi = 1.0;
  int count = 0;    // grid points; ignored for list spacing
  Spacing spacing = Spacing::chebyshev;
  std::vector<double> values;  // grid for list spacing
  bool log_random = false;     // draw random points log-uniformly
};

// margin >= -slack means the claim holds at the sample.
struct Verdict {
  double margin = 0.0;
  double slack = 0.0;
  bool violated() const { return !(margin >= -slack); }
};

enum class Expectation { holds, refuted };

using Sample = std::vector<double>;
using Predicate = std::function<Verdict(const Sample&)>;

struct InequalityCheck {
  std::string id;
  std::string description;
  std::vector<Variable> variables;
  Predicate predicate;
  Expectation expectation = Expectation::holds;
};

struct CheckReport {
  std::string id;
  std::string description;
  Expectation expectation = Expectation::holds;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  std::int64_t errors = 0;  // predicate threw or returned NaN; also counted as violations
  double worst_margin = 0.0;  // margin at the sample with least headroom (margin + slack)
  std::vector<std::pair<std::string, double>> worst_point;
  std::string diagnostic;  // first error or first violation, empty if none

  // Outcome matches the expectation.
  bool passed() const {
    return expectation == Expectation::holds ? violations == 0 : violations > 0;
  }
};

inline constexpr double kStrictSlack = 1e-12;
inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr int kRandomFactor = 10;

// Verdict helpers. Inequalities get slack kStrictSlack * (1 + |lhs| + |rhs|).
Verdict le(double lhs, double rhs);
Verdict ge(double lhs, double rhs);
Verdict chain_le(std::initializer_list<double> v);
Verdict chain_ge(std::initializer_list<double> v);
Verdict identity(double a, double b, double tol = kIdentityTolerance);
Verdict worst_of(std::initializer_list<Verdict> v);
// Order statements along a sorted parameter grid.
Verdict nonincreasing(const std::vector<double>& v);
Verdict nondecreasing(const std::vector<double>& v);
// |value - target| <= tol, used for one-sided limit checks.
Verdict near(double value, double target, double tol);

std::vector<double> grid_points(const Variable& v);

CheckReport run_check(const InequalityCheck& check, std::uint64_t seed);

const std::vector<InequalityCheck>& all_checks();
std::vector<InequalityCheck> register_checks();
const InequalityCheck* find_check(const std::string& id);

std::string_view to_string(Expectation e);

// Largest |lower bound for arsinh at p = 2 - Zhu's bound| over x in (0, 1),
// sampled on n points.
struct GapMaximum {
  double gap = 0.0;
  double x = 0.0;
};
GapMaximum remark_gap_maximum(int n = 4001);

// Sign pattern of successive differences along the p grid for each of the
// four conjectured-monotone families at fixed x. Informational only.
struct ConjectureRow {
  std::string function;
  double x = 0.0;
  std::vector<double> values;
  std::string pattern;  // one of '+', '-', '0' per consecutive pair
  bool monotone = true;
  std::string error;    // set if an evaluation failed
};
std::vector<ConjectureRow> explore_conjecture(const std::vector<double>& p_grid,
                                              const std::vector<double>& x_grid);

}  // namespace ptrig
