#include "slepian/integrate.hpp"

namespace slepian {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::closed_form_constant:
      return "closed_form_constant";
    case Method::closed_form_linear:
      return "closed_form_linear";
    case Method::quadrature:
      return "quadrature";
    case Method::monte_carlo:
      return "monte_carlo";
    case Method::quasi_monte_carlo:
      return "quasi_monte_carlo";
    case Method::refinement:
      return "refinement";
  }
  return "unknown";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::exact:
      return "exact";
    case ErrorKind::abs_tol:
      return "abs_tol";
    case ErrorKind::std_error:
      return "std_error";
  }
  return "unknown";
}

std::string_view to_string(Sampler sampler) {
  return sampler == Sampler::pseudo ? "pseudo" : "low_discrepancy";
}

}  // namespace slepian
