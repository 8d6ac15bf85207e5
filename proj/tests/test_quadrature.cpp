#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "surfint/catalog.hpp"
#include "surfint/quadrature.hpp"
#include "test_support.hpp"

using namespace surfint;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(GaussLegendre, RuleShape) {
  for (int n = 1; n <= 32; ++n) {
    const auto& r = gauss_legendre(n);
    ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += r.weights[i];
      EXPECT_GT(r.weights[i], 0.0);
      EXPECT_LT(std::abs(r.nodes[i]), 1.0);
      EXPECT_EQ(r.nodes[i], -r.nodes[n - 1 - i]);
      if (i > 0) EXPECT_GT(r.nodes[i], r.nodes[i - 1]);
    }
    EXPECT_NEAR(sum, 2.0, 1e-14);
  }
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
  EXPECT_THROW(gauss_legendre(kMaxGaussNodes + 1), std::invalid_argument);
}

// Property: one panel of n nodes is exact for degree <= 2n - 1.
TEST(GaussLegendre, PolynomialExactness) {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 8; ++n) {
    const int degree = 2 * n - 1;
    std::vector<double> c(degree + 1);
    for (auto& x : c) x = support::uniform(rng, -1, 1);
    auto p = [&](double x) {
      double s = 0.0;
      for (int k = degree; k >= 0; --k) s = s * x + c[k];
      return s;
    };
    const double a = -0.3, b = 1.7;
    double exact = 0.0;
    for (int k = 0; k <= degree; ++k) exact += c[k] * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
    EXPECT_NEAR(integrate_1d(p, a, b, 1, n), exact, 1e-14 * (1 + std::abs(exact))) << "n = " << n;
  }
}

TEST(GaussLegendre, DegreeTwoNIsNotExact) {
  auto p = [](double x) { return std::pow(x, 4); };
  EXPECT_GT(std::abs(integrate_1d(p, -1, 1, 1, 2) - 0.4), 1e-3);
}

TEST(QuadratureSpec, Validation) {
  QuadratureSpec s;
  EXPECT_NO_THROW(s.validate());
  EXPECT_EQ(s.surface_node_count(), 8u * 8u * 12u * 12u);
  s.nodes_per_panel = 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.nodes_per_panel = 33;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = QuadratureSpec{};
  s.panels_u = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  const QuadratureSpec r = QuadratureSpec{}.refined();
  EXPECT_EQ(r.panels_u, 16);
  EXPECT_EQ(r.boundary_panels, 64);
  EXPECT_EQ(r.nodes_per_panel, 12);
}

TEST(SurfaceIntegral, SphereArea) {
  QuadratureSpec s;
  s.nodes_per_panel = 16;
  const auto r = surface_integral<double>(catalog_lookup("unit-sphere").chart, [](const FramedPoint&) { return 1.0; }, s);
  EXPECT_NEAR(r.value, 4 * kPi, 1e-12);
  EXPECT_LE(r.est_error, 1e-10);
  EXPECT_GE(r.est_error, 0.0);
}

TEST(SurfaceIntegral, TotalCurvature) {
  auto K = [](const FramedPoint& p) { return p.K; };
  EXPECT_NEAR(surface_integral<double>(catalog_lookup("torus").chart, K).value, 0.0, 1e-10);
  EXPECT_NEAR(surface_integral<double>(catalog_lookup("cap-pi3").chart, K).value, kPi, 1e-12);
  EXPECT_NEAR(surface_integral<double>(catalog_lookup("torus-quarter").chart, K).value, kPi / 2, 1e-12);
}

TEST(SurfaceIntegral, CatalogAreas) {
  for (const auto& e : catalog_list()) {
    const auto area = e.expectation("area");
    if (!area) continue;
    const auto r = surface_integral<double>(e.chart, [](const FramedPoint&) { return 1.0; });
    EXPECT_NEAR(r.value, *area, 1e-10 * (1 + *area)) << e.name;
  }
}

TEST(BoundaryIntegral, Basics) {
  const Chart& disk = catalog_lookup("flat-disk").chart;
  EXPECT_NEAR(boundary_integral<double>(disk, [](const BoundaryPoint&) { return 1.0; }).value, 2 * kPi, 1e-13);
  EXPECT_NEAR(boundary_integral<double>(disk, [](const BoundaryPoint& b) { return b.kappa_g; }).value, 2 * kPi,
              1e-13);
  for (double theta : {kPi / 6, kPi / 3, 2 * kPi / 5}) {
    const auto r = boundary_integral<double>(
        spherical_cap(theta), [](const BoundaryPoint& b) { return Vec3::UnitZ().cross(b.N).dot(b.X_s); });
    const double s = std::sin(theta);
    EXPECT_NEAR(r.value, 2 * kPi * s * s, 1e-12);
  }
}

TEST(BoundaryIntegral, ClosedChartIsExactlyZero) {
  const auto r = boundary_integral<double>(catalog_lookup("torus").chart, [](const BoundaryPoint&) { return 1.0; });
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.refined_value, 0.0);
  EXPECT_EQ(r.est_error, 0.0);
}

// Property: est_error shrinks as the node count doubles from 4 to 16.
TEST(QuadratureProperty, Convergence) {
  auto integrand = [](const FramedPoint& p) { return std::exp(p.X.x()) * (1 + p.K); };
  for (const char* name : {"cap-pi3", "torus", "monkey-saddle", "band"}) {
    const Chart& c = catalog_lookup(name).chart;
    double previous = INFINITY;
    for (int n : {4, 8, 16}) {
      QuadratureSpec s;
      s.nodes_per_panel = n;
      const double e = surface_integral<double>(c, integrand, s).est_error;
      EXPECT_LE(e, 2 * previous + 1e-15) << name << " n = " << n;
      previous = e;
    }
    EXPECT_LE(previous, 1e-11) << name;
  }
}

// Property: a vector integral equals its componentwise scalar integrals.
TEST(QuadratureProperty, VectorIsComponentwise) {
  const Chart& c = catalog_lookup("torus-quarter").chart;
  auto v = [](const FramedPoint& p) -> Vec3 { return p.K * p.N + p.H * p.X; };
  const Vec3 whole = surface_sum<Vec3>(c, v, QuadratureSpec{});
  for (int i = 0; i < 3; ++i) {
    const double part = surface_sum<double>(c, [&](const FramedPoint& p) { return v(p)[i]; }, QuadratureSpec{});
    EXPECT_EQ(whole[i], part);
  }
  auto b = [](const BoundaryPoint& p) -> Vec3 { return p.N.cross(p.X_s); };
  const Vec3 bwhole = boundary_sum<Vec3>(c, b, QuadratureSpec{});
  for (int i = 0; i < 3; ++i)
    EXPECT_EQ(bwhole[i], boundary_sum<double>(c, [&](const BoundaryPoint& p) { return b(p)[i]; }, QuadratureSpec{}));
}

// Property: the parallel path reproduces the serial reference bit for bit.
TEST(QuadratureProperty, ParallelMatchesSerial) {
  QuadratureSpec serial, parallel;
  serial.execution = Execution::serial;
  parallel.execution = Execution::parallel;
  auto f = [](const FramedPoint& p) { return std::sin(p.X.x() * p.X.y()) + p.H * p.K; };
  auto g = [](const BoundaryPoint& b) { return b.kappa_g * b.X.z() + b.N_s.x(); };
  for (const auto& e : catalog_list()) {
    EXPECT_EQ(surface_sum<double>(e.chart, f, serial), surface_sum<double>(e.chart, f, parallel)) << e.name;
    EXPECT_EQ(boundary_sum<double>(e.chart, g, serial), boundary_sum<double>(e.chart, g, parallel)) << e.name;
  }
}

TEST(QuadratureErrors, IntegrandFailureCarriesNode) {
  const Chart& c = catalog_lookup("flat-disk").chart;
  auto bad = [](const FramedPoint& p) -> double {
    if (p.X.x() > 0.5) throw std::runtime_error("boom");
    return 1.0;
  };
  for (Execution ex : {Execution::serial, Execution::parallel}) {
    QuadratureSpec s;
    s.execution = ex;
    try {
      surface_sum<double>(c, bad, s);
      FAIL() << "expected a quadrature error";
    } catch (const QuadratureError& e) {
      EXPECT_GT(e.uv().x(), 0.5);
      EXPECT_TRUE(c.contains(e.uv()));
      try {
        std::rethrow_if_nested(e);
        FAIL() << "expected a nested cause";
      } catch (const std::runtime_error& inner) {
        EXPECT_STREQ(inner.what(), "boom");
      }
    }
  }
}

TEST(QuadratureErrors, DegenerateNodeIsReported) {
  // Polar chart over a domain reaching the pole: the pole is an edge, never a
  // Gauss node, so the integral still succeeds.
  const Chart sphere = polar_sphere_chart(0.0, kPi, true, 2);
  EXPECT_NEAR(surface_integral<double>(sphere, [](const FramedPoint& p) { return p.K; }).value, 4 * kPi, 1e-10);
  // A chart that degenerates along an interior line fails with a located error.
  const Chart pinched = Chart::parse("u", "v^3", "0", Rectangle{-1, 1, -1, 1});
  QuadratureSpec s;
  s.panels_v = 1;
  s.nodes_per_panel = 3;  // odd rule puts a node on v = 0
  EXPECT_THROW(surface_sum<double>(pinched, [](const FramedPoint&) { return 1.0; }, s), QuadratureError);
}

}  // namespace
