#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfint/fields.hpp"
#include "surfint/geometry.hpp"

namespace surfint {

struct Expectation {
  double value = 0.0;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Chart chart;
  // Keys: "area", "total_K", "total_kappa_g", "chi", "K_origin".
  std::map<std::string, Expectation> expected;
  // Declared zeros of preset tangent fields, keyed by preset field name.
  std::map<std::string, std::vector<SingularitySpec>> singularities;

  std::optional<double> expectation(std::string_view quantity) const;
  std::vector<SingularitySpec> singularities_of(std::string_view field) const;
};

const std::vector<CatalogEntry>& catalog_list();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_lookup(std::string_view name);
bool in_catalog(std::string_view name);

std::vector<std::string> preset_field_names();
std::vector<std::string> preset_scalar_names();
/// Throws std::out_of_range for unknown names.
AmbientField preset_field(std::string_view name);
ScalarField preset_scalar(std::string_view name);

/// Spherical cap of polar angle theta0 about +z, as the graph of
/// sqrt(1 - u^2 - v^2) over the disk of radius sin(theta0).
Chart spherical_cap(double theta0);

/// Unit sphere in the polar chart (sin u cos v, sin u sin v, cos u) over
/// u in [u_min, u_max], v periodic in [0, 2 pi]. Degenerate where sin u = 0.
Chart polar_sphere_chart(double u_min, double u_max, bool closed, int chi);

}  // namespace surfint
