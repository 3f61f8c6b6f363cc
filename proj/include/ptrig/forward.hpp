#pragma once

/**
 * @file forward.hpp
 * @brief Forward p-functions by safeguarded inversion of the inverse maps.
 *
 * Each solve is a bracketed Newton iteration with bisection fallback. The
 * iteration variable is chosen per function so that the map being inverted
 * is close to linear: 1 - x near the top of sin_p, log x for large sinh_p,
 * -log(1 - x) for tanh_p.
 */

#include <array>
#include <optional>
#include <string_view>

#include "ptrig/constants.hpp"

namespace ptrig {

struct InversionResult {
  double value = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
  bool converged = false;
  double residual = 0.0;  // |inverse(value) - y|
};

enum class ForwardKind { sin_p, cos_p, tan_p, sinh_p, tanh_p };

inline constexpr std::array<ForwardKind, 5> kForwardKinds = {
    ForwardKind::sin_p, ForwardKind::cos_p, ForwardKind::tan_p, ForwardKind::sinh_p,
    ForwardKind::tanh_p};

std::string_view to_string(ForwardKind k);
std::optional<ForwardKind> parse_forward_kind(std::string_view name);

inline constexpr double kSnapTolerance = 1e-14;
inline constexpr double kSinhCutoff = 700.0;

InversionResult sin_p(PExponent p, double y);  // y in [0, a_p]
double cos_p(PExponent p, double y);           // y in [0, a_p]
InversionResult tan_p(PExponent p, double y);  // y in [0, pi_p / 2)
InversionResult sinh_p(PExponent p, double y); // y in [0, 700]
InversionResult tanh_p(PExponent p, double y); // y >= 0

// sin_p together with 1 - sin_p, which keeps full relative accuracy near a_p.
struct SinComplement {
  double sin = 0.0;
  double one_minus_sin = 1.0;
};
SinComplement sin_p_with_complement(PExponent p, double y);

double forward(ForwardKind k, PExponent p, double y);

}  // namespace ptrig
