#include "surfint/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace surfint {

namespace {

constexpr double kPi = std::numbers::pi;

const char* kTrivial = "known constant or symmetry";

SingularitySpec zero_at(double u, double v, int index) { return {Vec2(u, v), index}; }

std::string cap_name(std::string_view suffix) { return "cap-" + std::string(suffix); }

CatalogEntry cap_entry(std::string_view suffix, double theta0) {
  const double c = std::cos(theta0);
  CatalogEntry e{cap_name(suffix),
                 "spherical cap of polar angle " + std::string(suffix) + " about +z (graph chart)",
                 spherical_cap(theta0),
                 {},
                 {}};
  e.expected["chi"] = {1.0, kTrivial};
  e.expected["area"] = {2.0 * kPi * (1.0 - c), "zone area 2 pi (1 - cos theta0)"};
  e.expected["total_K"] = {2.0 * kPi * (1.0 - c), "K = 1, so equal to the area"};
  e.expected["total_kappa_g"] = {2.0 * kPi * c,
                                 "latitude circle of radius sin theta0 with kappa_g = cot theta0"};
  e.singularities["rotation"] = {zero_at(0.0, 0.0, 1)};
  e.singularities["radial"] = {zero_at(0.0, 0.0, 1)};
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> list;

  {
    // Polar axis along x keeps both zeros of E3 x X away from the chart poles.
    CatalogEntry e{"unit-sphere", "unit sphere, closed, polar axis along x",
                   Chart::parse("cos(u)", "sin(u)*cos(v)", "sin(u)*sin(v)",
                                Rectangle{0.0, kPi, 0.0, 2.0 * kPi}, {false, true}, true, 2),
                   {},
                   {}};
    e.expected["chi"] = {2.0, kTrivial};
    e.expected["area"] = {4.0 * kPi, kTrivial};
    e.expected["total_K"] = {4.0 * kPi, "Gauss-Bonnet for the sphere"};
    e.expected["total_kappa_g"] = {0.0, "closed surface"};
    e.singularities["rotation"] = {zero_at(kPi / 2, kPi / 2, 1), zero_at(kPi / 2, 3 * kPi / 2, 1)};
    list.push_back(std::move(e));
  }
  {
    CatalogEntry e{"sphere-r2", "sphere of radius 2, closed, polar axis along x",
                   Chart::parse("2*cos(u)", "2*sin(u)*cos(v)", "2*sin(u)*sin(v)",
                                Rectangle{0.0, kPi, 0.0, 2.0 * kPi}, {false, true}, true, 2),
                   {},
                   {}};
    e.expected["chi"] = {2.0, kTrivial};
    e.expected["area"] = {16.0 * kPi, kTrivial};
    e.expected["total_K"] = {4.0 * kPi, "Gauss-Bonnet for the sphere"};
    e.expected["total_kappa_g"] = {0.0, "closed surface"};
    e.singularities["rotation"] = {zero_at(kPi / 2, kPi / 2, 1), zero_at(kPi / 2, 3 * kPi / 2, 1)};
    list.push_back(std::move(e));
  }
  {
    CatalogEntry e{"torus", "torus with R = 2, r = 1, closed",
                   Chart::parse("(2+cos(u))*cos(v)", "(2+cos(u))*sin(v)", "sin(u)",
                                Rectangle{0.0, 2.0 * kPi, 0.0, 2.0 * kPi}, {true, true}, true, 0),
                   {},
                   {}};
    e.expected["chi"] = {0.0, kTrivial};
    e.expected["area"] = {8.0 * kPi * kPi, "4 pi^2 R r"};
    e.expected["total_K"] = {0.0, "Gauss-Bonnet for the torus"};
    e.expected["total_kappa_g"] = {0.0, "closed surface"};
    e.singularities["rotation"] = {};
    e.singularities["torus-xu"] = {};
    list.push_back(std::move(e));
  }
  {
    CatalogEntry e{"torus-quarter", "patch [0, pi/2]^2 of the R = 2, r = 1 torus",
                   Chart::parse("(2+cos(u))*cos(v)", "(2+cos(u))*sin(v)", "sin(u)",
                                Rectangle{0.0, kPi / 2, 0.0, kPi / 2}, {false, false}, false, 1),
                   {},
                   {}};
    e.expected["chi"] = {1.0, kTrivial};
    e.expected["area"] = {kPi / 2 * (kPi + 1.0), "integral of (2 + cos u) du dv"};
    e.expected["total_K"] = {kPi / 2, "K dA = cos u du dv"};
    e.expected["total_kappa_g"] = {-kPi / 2, "Gauss-Bonnet with chi = 1 and four right-angle corners"};
    e.singularities["rotation"] = {};
    e.singularities["torus-xu"] = {};
    list.push_back(std::move(e));
  }
  list.push_back(cap_entry("pi6", kPi / 6));
  list.push_back(cap_entry("pi3", kPi / 3));
  list.push_back(cap_entry("2pi5", 2 * kPi / 5));
  {
    CatalogEntry e{"flat-disk", "flat unit disk (u, v, 0)",
                   Chart::parse("u", "v", "0", Disk{Vec2::Zero(), 1.0}, {false, false}, false, 1),
                   {},
                   {}};
    e.expected["chi"] = {1.0, kTrivial};
    e.expected["area"] = {kPi, kTrivial};
    e.expected["total_K"] = {0.0, "flat"};
    e.expected["total_kappa_g"] = {2.0 * kPi, "unit circle"};
    e.singularities["rotation"] = {zero_at(0.0, 0.0, 1)};
    e.singularities["radial"] = {zero_at(0.0, 0.0, 1)};
    e.singularities["conj-square"] = {zero_at(0.0, 0.0, -2)};
    list.push_back(std::move(e));
  }
  {
    CatalogEntry e{"band", "spherical band between polar angles pi/4 and pi/2 (annulus)",
                   polar_sphere_chart(kPi / 4, kPi / 2, false, 0),
                   {},
                   {}};
    e.expected["chi"] = {0.0, kTrivial};
    e.expected["area"] = {2.0 * kPi * std::cos(kPi / 4), "zone area 2 pi (cos pi/4 - cos pi/2)"};
    e.expected["total_K"] = {2.0 * kPi * std::cos(kPi / 4), "K = 1, so equal to the area"};
    e.expected["total_kappa_g"] = {-2.0 * kPi * std::cos(kPi / 4),
                                   "equator is a geodesic; the upper circle contributes -2 pi cos(pi/4)"};
    e.singularities["rotation"] = {};
    list.push_back(std::move(e));
  }
  {
    CatalogEntry e{"monkey-saddle", "monkey saddle z = u^3 - 3 u v^2 over the unit disk",
                   Chart::parse("u", "v", "u^3-3*u*v^2", Disk{Vec2::Zero(), 1.0}, {false, false}, false, 1),
                   {},
                   {}};
    e.expected["chi"] = {1.0, kTrivial};
    e.expected["K_origin"] = {0.0, "second derivatives of the height vanish at the origin"};
    e.singularities["rotation"] = {zero_at(0.0, 0.0, 1)};
    e.singularities["radial"] = {zero_at(0.0, 0.0, 1)};
    e.singularities["conj-square"] = {zero_at(0.0, 0.0, -2)};
    list.push_back(std::move(e));
  }
  return list;
}

struct Preset {
  const char* name;
  const char* x;
  const char* y;
  const char* z;
};

constexpr Preset kFields[] = {
    {"e1", "1", "0", "0"},
    {"e2", "0", "1", "0"},
    {"e3", "0", "0", "1"},
    {"position", "x", "y", "z"},
    {"rotation", "-y", "x", "0"},
    {"radial", "x", "y", "0"},
    {"conj-square", "x^2-y^2", "-2*x*y", "0"},
    {"yzx", "y", "z", "x"},
    // X_u of the R = 2, r = 1 torus written in ambient coordinates.
    {"torus-xu", "-z*x/sqrt(x^2+y^2)", "-z*y/sqrt(x^2+y^2)", "sqrt(x^2+y^2)-2"},
};

struct ScalarPreset {
  const char* name;
  const char* f;
};

constexpr ScalarPreset kScalars[] = {
    {"half-norm-sq", "(x^2+y^2+z^2)/2"},
    {"x1x2", "x*y"},
    {"x3sq", "z^2"},
    {"exp-x1", "exp(x)"},
};

}  // namespace

std::optional<double> CatalogEntry::expectation(std::string_view quantity) const {
  const auto it = expected.find(std::string(quantity));
  if (it == expected.end()) return std::nullopt;
  return it->second.value;
}

std::vector<SingularitySpec> CatalogEntry::singularities_of(std::string_view field) const {
  const auto it = singularities.find(std::string(field));
  return it == singularities.end() ? std::vector<SingularitySpec>{} : it->second;
}

Chart spherical_cap(double theta0) {
  if (!(theta0 > 0.0 && theta0 < kPi / 2))
    throw std::invalid_argument("graph cap needs 0 < theta0 < pi/2");
  return Chart::parse("u", "v", "sqrt(1-u^2-v^2)", Disk{Vec2::Zero(), std::sin(theta0)}, {false, false},
                      false, 1);
}

Chart polar_sphere_chart(double u_min, double u_max, bool closed, int chi) {
  return Chart::parse("sin(u)*cos(v)", "sin(u)*sin(v)", "cos(u)", Rectangle{u_min, u_max, 0.0, 2.0 * kPi},
                      {false, true}, closed, chi);
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> list = build_catalog();
  return list;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  for (const auto& e : catalog_list())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog surface '" + std::string(name) + "'");
}

bool in_catalog(std::string_view name) {
  for (const auto& e : catalog_list())
    if (e.name == name) return true;
  return false;
}

std::vector<std::string> preset_field_names() {
  std::vector<std::string> names;
  for (const auto& p : kFields) names.emplace_back(p.name);
  return names;
}

std::vector<std::string> preset_scalar_names() {
  std::vector<std::string> names;
  for (const auto& p : kScalars) names.emplace_back(p.name);
  return names;
}

AmbientField preset_field(std::string_view name) {
  for (const auto& p : kFields)
    if (name == p.name) return AmbientField::parse(p.x, p.y, p.z, p.name);
  throw std::out_of_range("unknown preset field '" + std::string(name) + "'");
}

ScalarField preset_scalar(std::string_view name) {
  for (const auto& p : kScalars)
    if (name == p.name) return ScalarField::parse(p.f, p.name);
  throw std::out_of_range("unknown preset scalar '" + std::string(name) + "'");
}

}  // namespace surfint
