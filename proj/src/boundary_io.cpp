#include "slepian/boundary_io.hpp"

#include <fstream>
#include <memory>

#include "slepian/errors.hpp"

namespace slepian {

namespace {

double number_field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) throw InvalidInput(std::string("boundary is missing field \"") + name + "\"");
  if (!j.at(name).is_number())
    throw InvalidInput(std::string("boundary field \"") + name + "\" must be a number");
  return j.at(name).get<double>();
}

std::vector<Knot> knot_list(const nlohmann::json& j) {
  if (!j.contains("knots") || !j.at("knots").is_array())
    throw InvalidInput("boundary is missing array field \"knots\"");
  std::vector<Knot> knots;
  for (const auto& item : j.at("knots")) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw InvalidInput("each knot must be a [t, c] pair of numbers");
    knots.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return knots;
}

}  // namespace

Boundary boundary_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("boundary must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string())
    throw InvalidInput("boundary is missing string field \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") return ConstantBoundary{number_field(j, "a")};
  if (type == "linear") return LinearBoundary{number_field(j, "a"), number_field(j, "b")};
  if (type == "piecewise") return PiecewiseLinearBoundary(knot_list(j));
  if (type == "sampled") {
    auto table = std::make_shared<const PiecewiseLinearBoundary>(knot_list(j));
    return SampledBoundary{[table](double t) { return (*table)(t); }, "sampled_table"};
  }
  throw InvalidInput("unknown boundary type \"" + type + "\"");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open boundary file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Boundary read_boundary_file(const std::string& path) { return boundary_from_json(read_json_file(path)); }

nlohmann::json boundary_to_json(const Boundary& boundary) {
  nlohmann::json j;
  j["type"] = kind(boundary);
  if (const auto* c = std::get_if<ConstantBoundary>(&boundary)) {
    j["a"] = c->a;
  } else if (const auto* l = std::get_if<LinearBoundary>(&boundary)) {
    j["a"] = l->a;
    j["b"] = l->b;
  } else if (const auto* pl = std::get_if<PiecewiseLinearBoundary>(&boundary)) {
    j["knots"] = nlohmann::json::array();
    for (const Knot& k : pl->knots()) j["knots"].push_back({k.t, k.c});
  } else {
    j["label"] = std::get<SampledBoundary>(boundary).label;
  }
  return j;
}

}  // namespace slepian
