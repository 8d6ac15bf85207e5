#include "surfint/definition.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace surfint {

namespace {

using nlohmann::json;

const json& require(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw DefinitionError(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw DefinitionError(path + "." + key, "missing required key");
  return *it;
}

std::string string_at(const json& value, const std::string& path) {
  if (!value.is_string()) throw DefinitionError(path, "expected a string");
  return value.get<std::string>();
}

bool bool_at(const json& value, const std::string& path) {
  if (!value.is_boolean()) throw DefinitionError(path, "expected a boolean");
  return value.get<bool>();
}

// Numbers, or constant expressions such as "2*pi".
double number_at(const json& value, const std::string& path) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return Expression::parse(value.get<std::string>(), {}).evaluate({});
    } catch (const ExpressionError& e) {
      throw DefinitionError(path, e.what());
    }
  }
  throw DefinitionError(path, "expected a number or a constant expression");
}

Expression expression_at(const json& value, const std::string& path, const std::vector<std::string>& vars) {
  try {
    return Expression::parse(string_at(value, path), vars);
  } catch (const ExpressionError& e) {
    throw DefinitionError(path, e.what());
  }
}

Domain domain_at(const json& value, const std::string& path) {
  const std::string type = string_at(require(value, "type", path), path + ".type");
  const json& bounds = require(value, "bounds", path);
  const std::string bpath = path + ".bounds";
  if (!bounds.is_array()) throw DefinitionError(bpath, "expected an array");
  std::vector<double> b;
  for (std::size_t i = 0; i < bounds.size(); ++i)
    b.push_back(number_at(bounds[i], bpath + "[" + std::to_string(i) + "]"));
  if (type == "rectangle") {
    if (b.size() != 4) throw DefinitionError(bpath, "rectangle bounds are [u_min, u_max, v_min, v_max]");
    return Rectangle{b[0], b[1], b[2], b[3]};
  }
  if (type == "disk") {
    if (b.size() != 3) throw DefinitionError(bpath, "disk bounds are [u0, v0, radius]");
    return Disk{Vec2(b[0], b[1]), b[2]};
  }
  throw DefinitionError(path + ".type", "domain type must be \"rectangle\" or \"disk\"");
}

Chart chart_at(const json& s, const std::string& path) {
  const std::vector<std::string> uv{"u", "v"};
  Expression x = expression_at(require(s, "x", path), path + ".x", uv);
  Expression y = expression_at(require(s, "y", path), path + ".y", uv);
  Expression z = expression_at(require(s, "z", path), path + ".z", uv);
  Domain domain = domain_at(require(s, "domain", path), path + ".domain");

  std::array<bool, 2> periodic{false, false};
  if (const auto it = s.find("periodic"); it != s.end()) {
    if (!it->is_array() || it->size() != 2) throw DefinitionError(path + ".periodic", "expected [bool, bool]");
    periodic = {bool_at((*it)[0], path + ".periodic[0]"), bool_at((*it)[1], path + ".periodic[1]")};
  }
  bool closed = false;
  if (const auto it = s.find("closed"); it != s.end()) closed = bool_at(*it, path + ".closed");
  const json& chi = require(s, "chi", path);
  if (!chi.is_number_integer()) throw DefinitionError(path + ".chi", "expected an integer");
  try {
    return Chart(std::move(x), std::move(y), std::move(z), domain, periodic, closed, chi.get<int>());
  } catch (const GeometryError& e) {
    throw DefinitionError(path, e.what());
  }
}

}  // namespace

const NamedField* SurfaceDefinition::find_field(std::string_view n) const {
  for (const auto& f : fields)
    if (f.name == n) return &f;
  return nullptr;
}

const NamedScalar* SurfaceDefinition::find_scalar(std::string_view n) const {
  for (const auto& s : scalars)
    if (s.name == n) return &s;
  return nullptr;
}

SurfaceDefinition parse_definition(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DefinitionError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DefinitionError("$", "expected an object");

  SurfaceDefinition def{std::move(name), chart_at(require(doc, "surface", "$"), "$.surface"), {}, {}, {}};
  const std::vector<std::string> xyz{"x", "y", "z"};

  if (const auto it = doc.find("fields"); it != doc.end()) {
    if (!it->is_array()) throw DefinitionError("$.fields", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "$.fields[" + std::to_string(i) + "]";
      const json& f = (*it)[i];
      std::string fname = string_at(require(f, "name", p), p + ".name");
      Expression vx = expression_at(require(f, "vx", p), p + ".vx", xyz);
      Expression vy = expression_at(require(f, "vy", p), p + ".vy", xyz);
      Expression vz = expression_at(require(f, "vz", p), p + ".vz", xyz);
      bool tangent = false;
      if (const auto t = f.find("tangent"); t != f.end()) tangent = bool_at(*t, p + ".tangent");
      def.fields.push_back({fname, AmbientField(std::move(vx), std::move(vy), std::move(vz), fname), tangent});
    }
  }

  if (const auto it = doc.find("scalars"); it != doc.end()) {
    if (!it->is_array()) throw DefinitionError("$.scalars", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "$.scalars[" + std::to_string(i) + "]";
      const json& s = (*it)[i];
      std::string sname = string_at(require(s, "name", p), p + ".name");
      def.scalars.push_back({sname, ScalarField(expression_at(require(s, "f", p), p + ".f", xyz), sname)});
    }
  }

  if (const auto it = doc.find("singularities"); it != doc.end()) {
    if (!it->is_array()) throw DefinitionError("$.singularities", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "$.singularities[" + std::to_string(i) + "]";
      const json& s = (*it)[i];
      const std::string field = string_at(require(s, "field", p), p + ".field");
      SingularitySpec spec;
      spec.uv = Vec2(number_at(require(s, "u", p), p + ".u"), number_at(require(s, "v", p), p + ".v"));
      if (const auto idx = s.find("index"); idx != s.end()) {
        if (!idx->is_number_integer()) throw DefinitionError(p + ".index", "expected an integer");
        spec.declared_index = idx->get<int>();
      }
      if (!def.chart.contains(spec.uv)) throw DefinitionError(p, "singularity lies outside the chart domain");
      def.singularities[field].push_back(spec);
    }
  }
  return def;
}

SurfaceDefinition load_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open definition file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_definition(text.str(), path.stem().string());
}

}  // namespace surfint
