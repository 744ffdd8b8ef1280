#pragma once

// JSON boundary files:
//   {"type": "constant", "a": A}
//   {"type": "linear", "a": A, "b": B}
//   {"type": "piecewise", "knots": [[t, c], ...]}
//   {"type": "sampled", "knots": [[t, f], ...]}   table of f, read as a SampledBoundary

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "slepian/boundary.hpp"

namespace slepian {

Boundary boundary_from_json(const nlohmann::json& j);
/// Parsed file contents; throws InvalidInput if unreadable or malformed.
nlohmann::json read_json_file(const std::string& path);

Boundary read_boundary_file(const std::string& path);

/// Echo of a boundary for reports. Sampled boundaries serialize their label only.
nlohmann::json boundary_to_json(const Boundary& boundary);

}  // namespace slepian
