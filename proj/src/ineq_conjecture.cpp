#include <cmath>
#include <exception>
#include <functional>

#include "ptrig/constants.hpp"
#include "ptrig/errors.hpp"
#include "ptrig/forward.hpp"
#include "ptrig/ineq.hpp"

namespace ptrig {

GapMaximum remark_gap_maximum(int n) {
  if (n < 2) throw DomainError("remark_gap_maximum: n must be >= 2");
  GapMaximum best;
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / (n + 1);
    const double xp = x * x, q = std::sqrt(1 + xp);
    const double ours = std::sqrt(xp / (1 + xp)) * (1 + std::log1p(xp) / 3);
    const double zhu = 6 * std::sqrt(2.0) * std::sqrt(q - 1) / (4 + std::sqrt(2.0) * std::sqrt(q + 1));
    const double gap = std::abs(ours - zhu);
    if (gap > best.gap) best = {gap, x};
  }
  return best;
}

std::vector<ConjectureRow> explore_conjecture(const std::vector<double>& p_grid,
                                              const std::vector<double>& x_grid) {
  for (double p : p_grid)
    if (!(p > 1)) throw DomainError("explore_conjecture: p values must be > 1");
  for (double x : x_grid)
    if (!(x > 0 && x < 1)) throw DomainError("explore_conjecture: x values must lie in (0, 1)");

  using Family = std::function<double(PExponent, double)>;
  const std::pair<const char*, Family> families[] = {
      {"sin_p(pi_p x/2)", [](PExponent p, double x) { return sin_p(p, constants(p).a_p * x).value; }},
      {"tan_p(pi_p x/2)",
       [](PExponent p, double x) { return tan_p(p, constants(p).a_p * x).value; }},
      {"sinh_p(c_p x)", [](PExponent p, double x) { return sinh_p(p, constants(p).c_p * x).value; }},
      {"tanh_p(x)", [](PExponent p, double x) { return tanh_p(p, x).value; }},
  };

  std::vector<ConjectureRow> rows;
  for (const auto& [name, f] : families) {
    for (double x : x_grid) {
      ConjectureRow row;
      row.function = name;
      row.x = x;
      try {
        for (double p : p_grid) row.values.push_back(f(PExponent(p), x));
      } catch (const std::exception& e) {
        row.error = e.what();
        row.monotone = false;
        rows.push_back(std::move(row));
        continue;
      }
      bool up = false, down = false;
      for (std::size_t i = 1; i < row.values.size(); ++i) {
        const double d = row.values[i] - row.values[i - 1];
        const char c = d > 0 ? '+' : d < 0 ? '-' : '0';
        row.pattern.push_back(c);
        up |= c == '+';
        down |= c == '-';
      }
      row.monotone = !(up && down);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ptrig
