#pragma once

// Exact non-crossing probabilities: Brownian motion below a line, and the
// Slepian process S(t) = B(t + 1) - B(t) below a constant or a line on [0, 1].

#include <string_view>

namespace slepian {

enum class ClosedFormBranch { generic, small_slope_series, tail_clamped };

std::string_view to_string(ClosedFormBranch branch);

struct ClosedFormResult {
  double p;
  ClosedFormBranch branch;
};

/// |b| below this switches linear_ncp to the series continuation around b = 0.
inline constexpr double kSmallSlopeSwitch = 1e-4;

/// Largest rounding excursion outside [0, 1] that is silently clamped.
inline constexpr double kClampTolerance = 1e-12;

/// P(B(t) <= a + b t for all t in [0, T]); zero when a <= 0.
double bachelier_levy(double a, double b, double T);

/// P(S(t) <= a on [0, 1]) = Phi(a)^2 - a phi(a) Phi(a) - phi(a)^2.
ClosedFormResult constant_ncp(double a);

/// P(S(t) <= a + b t on [0, 1]). For |b| >= kSmallSlopeSwitch
///   Phi(a+b) Phi(a) - phi(a) Phi(a+b) / b + sqrt(2 pi) phi(a) phi(b) Phi(a) e^{-ab} / b,
/// otherwise a series in b whose b = 0 value is constant_ncp(a).
ClosedFormResult linear_ncp(double a, double b);

/// 2 Phi(a) - a phi(a) - 1 = constant_ncp(a) - constant_ncp(-a), the bound on
/// P(sup |S| <= a). Requires a >= 0.
double abs_sup_bound(double a);

/// P(S hits zero on [0, 1]) = 1 - 2 (1/4 - 1/(2 pi)) = 1/2 + 1/pi.
double zero_hitting_prob();

}  // namespace slepian
