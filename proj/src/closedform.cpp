#include "slepian/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slepian/errors.hpp"
#include "slepian/normmath.hpp"

namespace slepian {

namespace {

ClosedFormResult clamp_probability(double raw, ClosedFormBranch branch, const char* where) {
  if (!std::isfinite(raw) || raw < -kClampTolerance || raw > 1.0 + kClampTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << where << " produced " << raw << ", outside [0, 1] beyond rounding";
    throw ConsistencyError(os.str());
  }
  if (raw < 0.0) return {0.0, ClosedFormBranch::tail_clamped};
  if (raw > 1.0) return {1.0, ClosedFormBranch::tail_clamped};
  return {raw, branch};
}

}  // namespace

std::string_view to_string(ClosedFormBranch branch) {
  switch (branch) {
    case ClosedFormBranch::generic:
      return "generic";
    case ClosedFormBranch::small_slope_series:
      return "small_slope_series";
    case ClosedFormBranch::tail_clamped:
      return "tail_clamped";
  }
  return "unknown";
}

double bachelier_levy(double a, double b, double T) {
  if (!(T > 0.0)) throw InvalidInput("Bachelier-Levy horizon must be positive");
  if (a <= 0.0) return 0.0;
  const double rt = std::sqrt(T);
  const double p = normal_cdf(b * rt + a / rt) - exp_times_normal_cdf(-2.0 * a * b, b * rt - a / rt);
  return std::clamp(p, 0.0, 1.0);
}

ClosedFormResult constant_ncp(double a) {
  if (!std::isfinite(a)) throw InvalidInput("constant boundary level must be finite");
  const double pdf = normal_pdf(a);
  const double cdf = normal_cdf(a);
  return clamp_probability(cdf * cdf - a * pdf * cdf - pdf * pdf, ClosedFormBranch::generic,
                           "constant_ncp");
}

ClosedFormResult linear_ncp(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidInput("linear boundary must be finite");
  const double pdf_a = normal_pdf(a);
  const double cdf_a = normal_cdf(a);
  const double cdf_ab = normal_cdf(a + b);

  if (std::abs(b) < kSmallSlopeSwitch) {
    // p = Phi(a+b)Phi(a) - g(b)/b with g(b) = phi(a)Phi(a+b) - phi(a+b)Phi(a), g(0) = 0.
    const double g1 = pdf_a * pdf_a + a * pdf_a * cdf_a;
    const double g2 = -a * pdf_a * pdf_a + pdf_a * cdf_a * (1.0 - a * a);
    const double g3 = pdf_a * ((a * a - 1.0) * pdf_a + cdf_a * (a * a * a - 3.0 * a));
    const double ratio = g1 + b * (g2 / 2.0 + b * g3 / 6.0);
    return clamp_probability(cdf_ab * cdf_a - ratio, ClosedFormBranch::small_slope_series,
                             "linear_ncp");
  }

  const double third = sqrt_2pi<double> * fused_pdf_product(a, b) * cdf_a;
  const double raw = cdf_ab * cdf_a - (pdf_a * cdf_ab - third) / b;
  return clamp_probability(raw, ClosedFormBranch::generic, "linear_ncp");
}

double abs_sup_bound(double a) {
  if (!(a >= 0.0)) throw InvalidInput("|sup| bound needs a >= 0");
  // 2 Phi(a) - 1 = erf(a / sqrt 2)
  return std::erf(a / std::numbers::sqrt2) - a * normal_pdf(a);
}

double zero_hitting_prob() { return 1.0 - 2.0 * constant_ncp(0.0).p; }

}  // namespace slepian
