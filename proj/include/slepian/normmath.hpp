#pragma once

// Standard normal density, distribution function and the fused products the
// non-crossing formulas are built from. Everything is templated on the scalar
// type so the same expressions can be evaluated in long double for checks.

#include <cmath>
#include <limits>
#include <numbers>

namespace slepian {

template <typename Scalar>
inline constexpr Scalar inv_sqrt_2pi = Scalar(0.398942280401432677939946059934381868L);

template <typename Scalar>
inline constexpr Scalar inv_2pi = Scalar(0.159154943091895335768883763372514362L);

template <typename Scalar>
inline constexpr Scalar sqrt_2pi = Scalar(2.50662827463100050241576528481104525L);

/// Standard normal density (2pi)^{-1/2} exp(-x^2/2). Underflows to 0 for |x| > ~38.6.
template <typename Scalar>
Scalar normal_pdf(Scalar x) {
  using std::exp;
  return inv_sqrt_2pi<Scalar> * exp(-Scalar(0.5) * x * x);
}

/// Standard normal distribution function through erfc, so both tails keep
/// relative accuracy. Accepts +-infinity.
template <typename Scalar>
Scalar normal_cdf(Scalar x) {
  using std::erfc;
  if (std::isinf(x)) return x > 0 ? Scalar(1) : Scalar(0);
  return Scalar(0.5) * erfc(-x / std::numbers::sqrt2_v<Scalar>);
}

/// log Phi(x), finite for all finite x. Below the erfc underflow point the
/// Mills-ratio asymptotic series is used.
template <typename Scalar>
Scalar log_normal_cdf(Scalar x) {
  using std::log;
  using std::log1p;
  if (x > Scalar(0)) return log1p(-normal_cdf(-x));
  if (x > Scalar(-30)) return log(normal_cdf(x));
  // Phi(x) = phi(x)/|x| * (1 - 1/x^2 + 3/x^4 - 15/x^6 + 105/x^8 - ...)
  const Scalar z2 = Scalar(1) / (x * x);
  Scalar term = Scalar(1);
  Scalar series = Scalar(1);
  for (int k = 1; k <= 6; ++k) {
    term *= -Scalar(2 * k - 1) * z2;
    series += term;
  }
  return -Scalar(0.5) * x * x - log(-x) - log(sqrt_2pi<Scalar>) + log(series);
}

/// phi(a) * phi(b) * exp(-a b) evaluated as (2pi)^{-1} exp(-(a+b)^2 / 2),
/// one exponent instead of three multiplied factors. The sum and its square
/// are carried to double-double precision so that rounding of a large exponent
/// does not leak into the result.
template <typename Scalar>
Scalar fused_pdf_product(Scalar a, Scalar b) {
  using std::exp;
  using std::fma;
  const Scalar s = a + b;
  const Scalar b_part = s - a;
  const Scalar s_err = (a - (s - b_part)) + (b - b_part);
  const Scalar sq = s * s;
  const Scalar sq_err = fma(s, s, -sq);
  const Scalar hi = -Scalar(0.5) * sq;
  const Scalar lo = -(Scalar(0.5) * sq_err + s * s_err);
  return inv_2pi<Scalar> * exp(hi) * (Scalar(1) + lo);
}

/// exp(log_factor) * Phi(x) with the product formed in log space. Used where
/// e^{-2ab} may overflow while Phi(x) underflows.
template <typename Scalar>
Scalar exp_times_normal_cdf(Scalar log_factor, Scalar x) {
  using std::exp;
  if (std::isinf(x)) return x > 0 ? exp(log_factor) : Scalar(0);
  return exp(log_factor + log_normal_cdf(x));
}

}  // namespace slepian
