#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "surfint/catalog.hpp"
#include "surfint/quadrature.hpp"
#include "test_support.hpp"

using namespace surfint;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(Catalog, Contents) {
  std::set<std::string> names;
  for (const auto& e : catalog_list()) {
    EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
    EXPECT_FALSE(e.description.empty());
    EXPECT_TRUE(in_catalog(e.name));
    EXPECT_EQ(&catalog_lookup(e.name), &e);
  }
  for (const char* required : {"unit-sphere", "sphere-r2", "torus", "torus-quarter", "cap-pi6", "cap-pi3",
                               "cap-2pi5", "flat-disk", "band", "monkey-saddle"})
    EXPECT_TRUE(names.count(required)) << required;
  EXPECT_THROW(catalog_lookup("klein-bottle"), std::out_of_range);
  EXPECT_FALSE(in_catalog("klein-bottle"));
}

TEST(Catalog, EulerCharacteristicMatchesExpectation) {
  for (const auto& e : catalog_list()) {
    const auto chi = e.expectation("chi");
    ASSERT_TRUE(chi) << e.name;
    EXPECT_EQ(*chi, e.chart.euler_characteristic()) << e.name;
  }
}

TEST(Catalog, ExpectationsMatchQuadrature) {
  for (const auto& e : catalog_list()) {
    if (const auto K = e.expectation("total_K")) {
      const double v = surface_integral<double>(e.chart, [](const FramedPoint& p) { return p.K; }).value;
      EXPECT_NEAR(v, *K, 1e-10 * (1 + std::abs(*K))) << e.name;
    }
    if (const auto kg = e.expectation("total_kappa_g")) {
      const double v = boundary_integral<double>(e.chart, [](const BoundaryPoint& b) { return b.kappa_g; }).value;
      EXPECT_NEAR(v, *kg, 1e-10 * (1 + std::abs(*kg))) << e.name;
    }
    for (const auto& [key, x] : e.expected) EXPECT_FALSE(x.provenance.empty()) << e.name << " " << key;
  }
}

TEST(Catalog, ClosedEntriesHaveNoBoundary) {
  for (const auto& e : catalog_list()) {
    if (!e.chart.closed()) continue;
    EXPECT_TRUE(e.chart.boundary().empty()) << e.name;
    EXPECT_EQ(boundary_integral<double>(e.chart, [](const BoundaryPoint&) { return 1.0; }).value, 0.0);
  }
}

TEST(Catalog, FrameInvariants) {
  std::mt19937_64 rng(99);
  for (const auto& e : catalog_list()) {
    for (int i = 0; i < 100; ++i) {
      const FramedPoint p = frame_at(e.chart, support::random_uv(e.chart, rng));
      EXPECT_LE(std::abs(p.P.norm() - 1), 1e-12) << e.name;
      EXPECT_LE(std::abs(p.Q.norm() - 1), 1e-12) << e.name;
      EXPECT_LE(std::abs(p.P.dot(p.Q)), 1e-12) << e.name;
      EXPECT_LE((p.P.cross(p.Q) - p.N).norm(), 1e-12) << e.name;
      EXPECT_LE(p.kappa1, p.kappa2 + 1e-12) << e.name;
      EXPECT_NEAR(p.H, 0.5 * (p.kappa1 + p.kappa2), 1e-12) << e.name;
      EXPECT_NEAR(p.K, p.kappa1 * p.kappa2, 1e-12) << e.name;
    }
  }
}

// Graph formula for z = u^3 - 3 u v^2: K = (f_uu f_vv - f_uv^2) / (1 + f_u^2 + f_v^2)^2.
double monkey_saddle_K(double u, double v) {
  const double fu = 3 * u * u - 3 * v * v, fv = -6 * u * v;
  const double fuu = 6 * u, fvv = -6 * u, fuv = -6 * v;
  const double w = 1 + fu * fu + fv * fv;
  return (fuu * fvv - fuv * fuv) / (w * w);
}

TEST(Catalog, MonkeySaddleCurvature) {
  const auto& e = catalog_lookup("monkey-saddle");
  EXPECT_EQ(frame_at(e.chart, Vec2::Zero()).K, *e.expectation("K_origin"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Vec2 uv = support::random_uv(e.chart, rng);
    const double K = frame_at(e.chart, uv).K;
    EXPECT_NEAR(K, monkey_saddle_K(uv.x(), uv.y()), 1e-10);
    if (uv.norm() > 1e-3) EXPECT_LT(K, 0.0);
  }
}

TEST(Catalog, SingularitiesLieInsideTheirCharts) {
  for (const auto& e : catalog_list())
    for (const auto& [field, list] : e.singularities) {
      EXPECT_NO_THROW(preset_field(field)) << field;
      for (const auto& s : list) EXPECT_TRUE(e.chart.contains(s.uv)) << e.name << " " << field;
    }
  EXPECT_TRUE(catalog_lookup("torus").singularities_of("rotation").empty());
}

TEST(Presets, Parse) {
  for (const auto& name : preset_field_names()) EXPECT_NO_THROW(preset_field(name)) << name;
  for (const auto& name : preset_scalar_names()) EXPECT_NO_THROW(preset_scalar(name)) << name;
  EXPECT_THROW(preset_field("nope"), std::out_of_range);
  EXPECT_THROW(preset_scalar("nope"), std::out_of_range);
  EXPECT_EQ(preset_field("rotation").value(Vec3(1, 2, 3)), Vec3(-2, 1, 0));
  EXPECT_EQ(preset_scalar("half-norm-sq").evaluate(Vec3(1, 2, 2)).value, 4.5);
}

TEST(Presets, SphericalCapGeometry) {
  for (double theta : {kPi / 6, kPi / 3, 2 * kPi / 5}) {
    const Chart cap = spherical_cap(theta);
    const auto seg = cap.boundary();
    ASSERT_EQ(seg.size(), 1u);
    const BoundaryPoint b = boundary_point(cap, seg[0], 0.37);
    EXPECT_NEAR(b.X.z(), std::cos(theta), 1e-14);
    EXPECT_NEAR(b.X.norm(), 1.0, 1e-14);
    EXPECT_NEAR(b.kappa_g, 1 / std::tan(theta), 1e-10);
  }
}

}  // namespace
