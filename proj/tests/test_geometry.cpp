#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "surfint/catalog.hpp"
#include "surfint/geometry.hpp"
#include "surfint/quadrature.hpp"
#include "test_support.hpp"

using namespace surfint;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec_near(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_LE((a - b).norm(), tol) << "got (" << a.transpose() << ") expected (" << b.transpose() << ")";
}

// Gaussian curvature from the fundamental forms, with every chart derivative
// taken by central differences of the position map.
double fd_gaussian_curvature(const Chart& c, const Vec2& uv, double h) {
  auto X = [&](double du, double dv) { return c.position(uv + Vec2(du, dv)); };
  const Vec3 Xu = (X(h, 0) - X(-h, 0)) / (2 * h);
  const Vec3 Xv = (X(0, h) - X(0, -h)) / (2 * h);
  const Vec3 Xuu = (X(h, 0) - 2 * X(0, 0) + X(-h, 0)) / (h * h);
  const Vec3 Xvv = (X(0, h) - 2 * X(0, 0) + X(0, -h)) / (h * h);
  const Vec3 Xuv = (X(h, h) - X(h, -h) - X(-h, h) + X(-h, -h)) / (4 * h * h);
  const Vec3 N = Xu.cross(Xv).normalized();
  const double E = Xu.dot(Xu), F = Xu.dot(Xv), G = Xv.dot(Xv);
  const double L = Xuu.dot(N), M = Xuv.dot(N), Nn = Xvv.dot(N);
  return (L * Nn - M * M) / (E * G - F * F);
}

TEST(FrameAt, SphereEquatorPoint) {
  const Chart sphere = polar_sphere_chart(0.0, kPi, true, 2);
  const FramedPoint p = frame_at(sphere, Vec2(kPi / 2, 0.0));
  expect_vec_near(p.X, Vec3(1, 0, 0), 1e-15);
  expect_vec_near(p.N, Vec3(1, 0, 0), 1e-15);
  EXPECT_NEAR(p.kappa1, -1.0, 1e-12);
  EXPECT_NEAR(p.kappa2, -1.0, 1e-12);
  EXPECT_NEAR(p.K, 1.0, 1e-12);
  EXPECT_NEAR(p.H, -1.0, 1e-12);
  EXPECT_TRUE(p.umbilic);
}

TEST(FrameAt, Plane) {
  const Chart plane = Chart::parse("u", "v", "0", Rectangle{-1, 1, -1, 1});
  const FramedPoint p = frame_at(plane, Vec2(0.3, -0.2));
  expect_vec_near(p.N, Vec3(0, 0, 1), 0.0);
  EXPECT_EQ(p.kappa1, 0.0);
  EXPECT_EQ(p.kappa2, 0.0);
  EXPECT_EQ(p.K, 0.0);
  EXPECT_EQ(p.H, 0.0);
}

TEST(FrameAt, TorusCurvatureMatchesClosedFormAndFiniteDifferences) {
  const Chart& torus = catalog_lookup("torus").chart;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Vec2 uv = support::random_uv(torus, rng);
    const FramedPoint p = frame_at(torus, uv);
    const double closed_form = std::cos(uv.x()) / (2 + std::cos(uv.x()));
    EXPECT_NEAR(p.K, closed_form, 1e-12);
    EXPECT_NEAR(p.K, fd_gaussian_curvature(torus, uv, 1e-4), 1e-6);
    EXPECT_EQ(p.K, p.kappa1 * p.kappa2);
    EXPECT_EQ(p.H, 0.5 * (p.kappa1 + p.kappa2));
  }
}

TEST(FrameAt, UmbilicFallbackUsesProjectedXu) {
  const Chart& saddle = catalog_lookup("monkey-saddle").chart;
  const FramedPoint p = frame_at(saddle, Vec2(0, 0));
  EXPECT_TRUE(p.umbilic);
  EXPECT_EQ(p.kappa1, 0.0);
  EXPECT_EQ(p.kappa2, 0.0);
  expect_vec_near(p.P, Vec3(1, 0, 0), 1e-15);
  expect_vec_near(p.Q, Vec3(0, 1, 0), 1e-15);
  // Negative curvature just off the flat point.
  EXPECT_LT(frame_at(saddle, Vec2(0.1, 0.05)).K, 0.0);
}

TEST(FrameAt, DegenerateChartIsReported) {
  const Chart sphere = polar_sphere_chart(0.0, kPi, true, 2);
  EXPECT_THROW(frame_at(sphere, Vec2(0.0, 1.0)), DegenerateChartError);
}

// Property: frame invariants at 200 random points on every catalog surface.
TEST(FrameProperty, InvariantsOnCatalog) {
  std::mt19937_64 rng(2024);
  for (const auto& entry : catalog_list()) {
    SCOPED_TRACE(entry.name);
    for (int i = 0; i < 200; ++i) {
      const Vec2 uv = support::random_uv(entry.chart, rng);
      const FramedPoint p = frame_at(entry.chart, uv);
      EXPECT_NEAR(p.N.norm(), 1.0, 1e-12);
      EXPECT_NEAR(p.P.norm(), 1.0, 1e-12);
      EXPECT_NEAR(p.Q.norm(), 1.0, 1e-12);
      EXPECT_LE(std::abs(p.P.dot(p.Q)), 1e-10);
      EXPECT_LE(std::abs(p.P.dot(p.N)), 1e-10);
      EXPECT_LE(std::abs(p.Q.dot(p.N)), 1e-10);
      EXPECT_LE((p.P.cross(p.Q) - p.N).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LE(p.kappa1, p.kappa2);
      // Rodrigues: N_P = -kappa1 P, N_Q = -kappa2 Q.
      EXPECT_LE((p.normal_derivative(p.P) + p.kappa1 * p.P).norm(), 1e-8);
      EXPECT_LE((p.normal_derivative(p.Q) + p.kappa2 * p.Q).norm(), 1e-8);
      EXPECT_EQ(p.H, 0.5 * (p.kappa1 + p.kappa2));
      EXPECT_EQ(p.K, p.kappa1 * p.kappa2);
      const Mat2 S = shape_operator_matrix(p);
      EXPECT_LE(std::abs(S(0, 1) - S(1, 0)), 1e-8);
    }
  }
}

// The jet normal derivative agrees with differencing the normal itself.
TEST(FrameProperty, NormalDerivativeMatchesFiniteDifferences) {
  std::mt19937_64 rng(99);
  for (const char* name : {"torus", "cap-pi3", "monkey-saddle", "band"}) {
    const Chart& c = catalog_lookup(name).chart;
    for (int i = 0; i < 20; ++i) {
      const Vec2 uv = support::random_uv(c, rng, 0.01);
      const LocalGeometry g = local_geometry(c, uv);
      const double h = 1e-5;
      const Vec3 fd_u = (local_geometry(c, uv + Vec2(h, 0)).N - local_geometry(c, uv - Vec2(h, 0)).N) / (2 * h);
      const Vec3 fd_v = (local_geometry(c, uv + Vec2(0, h)).N - local_geometry(c, uv - Vec2(0, h)).N) / (2 * h);
      EXPECT_LE((g.Nu - fd_u).norm(), 1e-7) << name;
      EXPECT_LE((g.Nv - fd_v).norm(), 1e-7) << name;
    }
  }
}

// Property: swapping u and v flips N, negates and swaps the curvatures, keeps K.
TEST(FrameProperty, NormalFlipUnderParameterSwap) {
  std::mt19937_64 rng(5);
  for (const char* name : {"torus", "cap-pi3", "monkey-saddle", "torus-quarter"}) {
    const Chart& c = catalog_lookup(name).chart;
    const Chart swapped = c.with_swapped_parameters();
    for (int i = 0; i < 30; ++i) {
      const Vec2 uv = support::random_uv(c, rng);
      const FramedPoint a = frame_at(c, uv);
      const FramedPoint b = frame_at(swapped, Vec2(uv.y(), uv.x()));
      expect_vec_near(b.X, a.X, 1e-14);
      expect_vec_near(b.N, -a.N, 1e-12);
      EXPECT_NEAR(b.kappa1, -a.kappa2, 1e-8);
      EXPECT_NEAR(b.kappa2, -a.kappa1, 1e-8);
      EXPECT_NEAR(b.H, -a.H, 1e-8);
      EXPECT_NEAR(b.K, a.K, 1e-8);
    }
  }
}

TEST(BoundaryPoint, FlatDiskCircle) {
  const Chart& disk = catalog_lookup("flat-disk").chart;
  const auto segs = disk.boundary();
  ASSERT_EQ(segs.size(), 1u);
  for (double t : {0.0, 0.1, 0.37, 0.9}) {
    const BoundaryPoint b = boundary_point(disk, segs[0], t);
    EXPECT_NEAR(b.kappa_g, 1.0, 1e-13);
    EXPECT_NEAR(b.X_s.norm(), 1.0, 1e-14);
  }
  const auto total = boundary_integral<double>(disk, [](const BoundaryPoint& b) { return b.kappa_g; });
  EXPECT_NEAR(total.value, 2 * kPi, 1e-13);
  EXPECT_NEAR(arc_length(disk, segs[0], 0.0, 1.0), 2 * kPi, 1e-12);
}

TEST(BoundaryPoint, CapLatitudeCircle) {
  for (double theta : {kPi / 6, kPi / 3, 2 * kPi / 5}) {
    const Chart cap = spherical_cap(theta);
    const BoundaryPoint b = boundary_point(cap, cap.boundary()[0], 0.3);
    EXPECT_NEAR(b.kappa_g, std::cos(theta) / std::sin(theta), 1e-12);
    const auto total = boundary_integral<double>(cap, [](const BoundaryPoint& p) { return p.kappa_g; });
    EXPECT_NEAR(total.value, 2 * kPi * std::cos(theta), 1e-12);
  }
}

TEST(BoundaryPoint, StraightEdgeIsGeodesic) {
  const Chart plane = Chart::parse("u", "v", "0", Rectangle{0, 2, 0, 1});
  const auto segs = plane.boundary();
  ASSERT_EQ(segs.size(), 4u);
  for (const auto& s : segs) {
    const BoundaryPoint b = boundary_point(plane, s, 0.4);
    EXPECT_LE(b.X_ss.norm(), 1e-15);
    EXPECT_EQ(b.kappa_g, 0.0);
  }
}

TEST(BoundaryPoint, CounterclockwiseAndReversed) {
  const Chart plane = Chart::parse("u", "v", "0", Rectangle{0, 1, 0, 1});
  const auto pos = plane.boundary();
  const auto rev = plane.boundary(BoundaryOrientation::reversed);
  ASSERT_EQ(pos.size(), rev.size());
  // Bottom edge runs in +u; the reversed traversal ends with it backwards.
  expect_vec_near(boundary_point(plane, pos[0], 0.5).X_s, Vec3(1, 0, 0), 1e-15);
  expect_vec_near(boundary_point(plane, rev.back(), 0.5).X_s, Vec3(-1, 0, 0), 1e-15);
  // Signed enclosed area via the x dy form is positive counterclockwise.
  auto xdy = [](const BoundaryPoint& b) { return b.X.x() * b.X_s.y(); };
  EXPECT_NEAR(boundary_integral<double>(plane, xdy).value, 1.0, 1e-14);
}

TEST(BoundaryPoint, PeriodicEdgesAreDropped) {
  EXPECT_EQ(catalog_lookup("band").chart.boundary().size(), 2u);
  EXPECT_TRUE(catalog_lookup("torus").chart.boundary().empty());
  EXPECT_TRUE(catalog_lookup("unit-sphere").chart.boundary().empty());
}

// Property: boundary invariants and N_s against differenced normals.
TEST(BoundaryProperty, Invariants) {
  for (const char* name : {"flat-disk", "cap-pi6", "cap-pi3", "cap-2pi5", "band", "torus-quarter", "monkey-saddle"}) {
    const Chart& c = catalog_lookup(name).chart;
    for (const auto& seg : c.boundary()) {
      for (int k = 0; k < 25; ++k) {
        const double t = (k + 0.5) / 25;
        const BoundaryPoint b = boundary_point(c, seg, t);
        EXPECT_NEAR(b.X_s.norm(), 1.0, 1e-10) << name;
        EXPECT_LE(std::abs(b.X_s.dot(b.X_ss)), 1e-8) << name;
        EXPECT_NEAR(b.kappa_g, triple_product(b.X_s, b.X_ss, b.N), 1e-14) << name;
        EXPECT_LE(std::abs(b.N_s.dot(b.N)), 1e-8) << name;
        const double dt = 1e-6;
        const double ds = arc_length(c, seg, t - dt, t + dt);
        const Vec3 fd = (boundary_point(c, seg, t + dt).N - boundary_point(c, seg, t - dt).N) / ds;
        EXPECT_LE((fd - b.N_s).norm(), 1e-6) << name;
      }
    }
  }
}

TEST(ChartValidation, Errors) {
  EXPECT_THROW(Chart::parse("u", "v", "0", Rectangle{1, 0, 0, 1}), GeometryError);
  EXPECT_THROW(Chart::parse("u", "v", "0", Disk{Vec2::Zero(), -1.0}), GeometryError);
  EXPECT_THROW(Chart::parse("u", "v", "0", Disk{Vec2::Zero(), 1.0}, {true, false}), GeometryError);
  EXPECT_THROW(Chart::parse("u", "q", "0", Rectangle{}), ExpressionError);
}

TEST(ChartValidation, Contains) {
  const Chart& disk = catalog_lookup("flat-disk").chart;
  EXPECT_TRUE(disk.contains(Vec2(0.5, 0.5)));
  EXPECT_FALSE(disk.contains(Vec2(0.8, 0.8)));
}

}  // namespace
