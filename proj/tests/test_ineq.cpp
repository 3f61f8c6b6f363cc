#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <set>
#include <stdexcept>

#include "ptrig/errors.hpp"
#include "ptrig/ineq.hpp"

using namespace ptrig;

namespace {

Variable var(const std::string& name, double lo, double hi, int count, Spacing spacing = Spacing::chebyshev) {
  Variable v;
  v.name = name;
  v.lo = lo;
  v.hi = hi;
  v.count = count;
  v.spacing = spacing;
  return v;
}

}  // namespace

TEST(Verdicts, Helpers) {
  EXPECT_FALSE(le(1, 2).violated());
  EXPECT_TRUE(le(2, 1).violated());
  EXPECT_FALSE(le(1 + 1e-13, 1).violated());  // inside the relative slack
  EXPECT_FALSE(ge(2, 1).violated());
  EXPECT_FALSE(chain_le({1, 2, 2, 3}).violated());
  EXPECT_TRUE(chain_le({1, 3, 2}).violated());
  EXPECT_FALSE(chain_ge({3, 2, 1}).violated());
  EXPECT_FALSE(identity(1, 1 + 1e-11).violated());
  EXPECT_TRUE(identity(1, 1 + 1e-9).violated());
  EXPECT_TRUE(worst_of({le(1, 2), le(3, 2)}).violated());
  EXPECT_FALSE(nonincreasing({3, 2, 2, 1}).violated());
  EXPECT_TRUE(nonincreasing({3, 2, 2.5}).violated());
  EXPECT_FALSE(nondecreasing({1, 2, 3}).violated());
  EXPECT_FALSE(near(0.5, 0.5005, 1e-3).violated());
  EXPECT_TRUE(near(0.5, 0.6, 1e-3).violated());
  EXPECT_TRUE((Verdict{NAN, 0}.violated()));
}

TEST(Grids, ChebyshevAndList) {
  const Variable v = var("x", 0, 1, 64);
  const auto g = grid_points(v);
  ASSERT_EQ(g.size(), 64u);
  for (double x : g) {
    EXPECT_GT(x, 0);
    EXPECT_LT(x, 1);
  }
  Variable l = var("p", 1, 2, 0, Spacing::list);
  l.values = {1.1, 1.5};
  EXPECT_EQ(grid_points(l), (std::vector<double>{1.1, 1.5}));
  const Variable lg = var("r", 1e-3, 1e3, 16, Spacing::log_chebyshev);
  const auto gl = grid_points(lg);
  ASSERT_EQ(gl.size(), 16u);
  EXPECT_GT(gl.front(), 1e-3);
  EXPECT_LT(gl.back(), 1e3);
}

TEST(Runner, CountsSamplesAndViolations) {
  InequalityCheck c{"t.sq", "x^2 <= x on (0,1)", {var("x", 0, 1, 20)},
                    [](const Sample& s) { return le(s[0] * s[0], s[0]); }};
  const CheckReport r = run_check(c, 1);
  EXPECT_EQ(r.samples, 20 + kRandomFactor * 20);
  EXPECT_EQ(r.violations, 0);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.worst_point.size(), 1u);
  EXPECT_EQ(r.worst_point[0].first, "x");

  InequalityCheck bad = c;
  bad.predicate = [](const Sample& s) { return ge(s[0] * s[0], s[0]); };
  const CheckReport rb = run_check(bad, 1);
  EXPECT_EQ(rb.violations, rb.samples);
  EXPECT_FALSE(rb.passed());
  EXPECT_FALSE(rb.diagnostic.empty());
  EXPECT_LT(rb.worst_margin, 0);
}

TEST(Runner, RecordsErrorsAsViolations) {
  InequalityCheck c{"t.err", "throws above 0.5", {var("x", 0, 1, 10)}, [](const Sample& s) {
                      if (s[0] > 0.5) throw DomainError("boom");
                      return le(0, 1);
                    }};
  const CheckReport r = run_check(c, 3);
  EXPECT_GT(r.errors, 0);
  EXPECT_EQ(r.errors, r.violations);
  EXPECT_NE(r.diagnostic.find("boom"), std::string::npos);

  c.predicate = [](const Sample&) { return Verdict{NAN, 0}; };
  EXPECT_EQ(run_check(c, 3).errors, run_check(c, 3).samples);
}

TEST(Runner, DeterministicPerSeed) {
  const InequalityCheck* c = find_check("thm1.1.1");
  ASSERT_NE(c, nullptr);
  const CheckReport a = run_check(*c, 42), b = run_check(*c, 42), d = run_check(*c, 43);
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.worst_point, b.worst_point);
  EXPECT_EQ(a.samples, d.samples);
}

TEST(Registry, CensusAndIds) {
  const auto& all = all_checks();
  EXPECT_GE(all.size(), 28u);
  std::set<std::string> ids;
  for (const auto& c : all) {
    EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
    EXPECT_FALSE(c.description.empty()) << c.id;
    EXPECT_FALSE(c.variables.empty()) << c.id;
  }
  for (const char* id : {"thm1.1.1", "thm1.1.2", "thm1.1.3", "lem2.3.2", "lem3.5", "lem3.7.1", "lem4.13", "rem3.3",
                         "control.thm1.1.1"})
    EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_EQ(find_check("nosuch"), nullptr);
  EXPECT_EQ(register_checks().size(), all.size());
}

TEST(Registry, NegativeControlFindsViolation) {
  const InequalityCheck* c = find_check("control.thm1.1.1");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->expectation, Expectation::refuted);
  const CheckReport r = run_check(*c, 0);
  EXPECT_GE(r.violations, 1);
  EXPECT_TRUE(r.passed());
}

TEST(Registry, SelectedClaimsHold) {
  for (const char* id : {"thm1.1.1", "thm1.1.2", "thm1.1.3", "lem2.3.2", "lem3.4.1", "lem3.5", "lem3.7.1",
                         "lem4.1.1", "lem4.13"}) {
    const InequalityCheck* c = find_check(id);
    ASSERT_NE(c, nullptr) << id;
    const CheckReport r = run_check(*c, 7);
    EXPECT_EQ(r.violations, 0) << id << ": " << r.diagnostic;
    EXPECT_GE(r.samples, 640) << id;
  }
}

TEST(Registry, RefutedReadingsAreRefuted) {
  for (const auto& c : all_checks()) {
    if (c.expectation != Expectation::refuted) continue;
    const CheckReport r = run_check(c, 7);
    EXPECT_TRUE(r.passed()) << c.id << " found no counterexample";
  }
}

TEST(Registry, PiBoundsAtTwo) {
  const InequalityCheck* c = find_check("lem3.5");
  ASSERT_NE(c, nullptr);
  const Verdict v = c->predicate({2.0});
  EXPECT_FALSE(v.violated());
  EXPECT_NEAR(v.margin, std::min(3.141592653589793 - 2.4, 48 / (24 - 9.869604401089358) - 3.141592653589793), 1e-12);
}

TEST(Remark, GapMaximumIsAboutOneHundredth) {
  const GapMaximum g = remark_gap_maximum();
  EXPECT_GE(g.gap, 0.001);
  EXPECT_LE(g.gap, 0.02);
  EXPECT_GT(g.x, 0);
  EXPECT_LT(g.x, 1);
  EXPECT_THROW(remark_gap_maximum(1), DomainError);
}

TEST(Conjecture, TanhReport) {
  const auto rows = explore_conjecture({1.5, 2, 3, 5}, {0.5});
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.values.size(), 4u) << r.function;
    EXPECT_EQ(r.pattern.size(), 3u) << r.function;
    EXPECT_TRUE(r.error.empty()) << r.function;
  }
  const auto& tanh_row = rows.back();
  EXPECT_EQ(tanh_row.function, "tanh_p(x)");
  EXPECT_EQ(tanh_row.pattern, "+++");
  EXPECT_TRUE(tanh_row.monotone);
}

TEST(Conjecture, SinglePointGridHasEmptyPattern) {
  const auto rows = explore_conjecture({3}, {0.25, 0.75});
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pattern.empty());
    EXPECT_TRUE(r.monotone);
  }
}

TEST(Conjecture, Validation) {
  EXPECT_THROW(explore_conjecture({0.5}, {0.5}), DomainError);
  EXPECT_THROW(explore_conjecture({2}, {1.5}), DomainError);
}

TEST(Expectation, Names) {
  EXPECT_EQ(to_string(Expectation::holds), "holds");
  EXPECT_EQ(to_string(Expectation::refuted), "refuted");
}
