#pragma once

// Command-line front end. Reports are JSON objects on `out` (or CSV rows with
// --csv); diagnostics go to `err`.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input (including
// DimensionTooLarge), 3 NonConvergence, 4 methods disagree in `compare`.
//
// Environment overrides, applied before flags: SLEPIAN_SEED, SLEPIAN_SAMPLES,
// SLEPIAN_PATHS, SLEPIAN_STEPS, SLEPIAN_TOL, SLEPIAN_THREADS.

#include <iosfwd>

namespace slepian::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitDisagreement = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slepian::cli
