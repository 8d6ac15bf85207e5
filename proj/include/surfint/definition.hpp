#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfint/fields.hpp"
#include "surfint/geometry.hpp"

namespace surfint {

/// Schema or expression error in a definition document; `path` is a JSON
/// path such as "$.surface.z".
class DefinitionError : public std::runtime_error {
 public:
  DefinitionError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct NamedField {
  std::string name;
  AmbientField field;
  bool tangent = false;
};

struct NamedScalar {
  std::string name;
  ScalarField field;
};

struct SurfaceDefinition {
  std::string name;
  Chart chart;
  std::vector<NamedField> fields;
  std::vector<NamedScalar> scalars;
  std::map<std::string, std::vector<SingularitySpec>> singularities;

  const NamedField* find_field(std::string_view name) const;
  const NamedScalar* find_scalar(std::string_view name) const;
};

/// Parses a definition document. Bounds may be numbers or constant
/// expressions such as "pi/3".
SurfaceDefinition parse_definition(std::string_view text, std::string name = "definition");

/// Throws std::runtime_error when the file cannot be read, DefinitionError otherwise.
SurfaceDefinition load_definition(const std::filesystem::path& path);

}  // namespace surfint
