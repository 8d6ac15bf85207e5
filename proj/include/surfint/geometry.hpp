#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surfint/expr.hpp"

namespace surfint {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Below this, ||X_u x X_v|| is treated as a degenerate (non-immersed) point.
inline constexpr double kImmersionThreshold = 1e-12;
/// Relative gap |k1 - k2| <= kUmbilicThreshold * (1 + |k1| + |k2|) marks an umbilic.
inline constexpr double kUmbilicThreshold = 1e-9;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateChartError : public GeometryError {
 public:
  DegenerateChartError(const std::string& what, Vec2 uv) : GeometryError(what), uv_(uv) {}
  const Vec2& uv() const { return uv_; }

 private:
  Vec2 uv_;
};

struct Rectangle {
  double u_min = 0.0;
  double u_max = 1.0;
  double v_min = 0.0;
  double v_max = 1.0;
};

struct Disk {
  Vec2 center = Vec2::Zero();
  double radius = 1.0;
};

using Domain = std::variant<Rectangle, Disk>;

/// Chart value with first and second parameter derivatives.
struct SurfaceJet {
  Vec2 uv;
  Vec3 X, Xu, Xv, Xuu, Xuv, Xvv;
};

/// First-order surface data at a parameter point, enough to differentiate
/// any field along a tangent direction (including the normal itself).
struct LocalGeometry {
  Vec2 uv;
  Vec3 X;
  Vec3 Xu, Xv;
  Vec3 N;
  Vec3 Nu, Nv;
  double area_density = 0.0;
  Mat2 metric_inverse;

  /// Components (a, b) with T = a X_u + b X_v for a tangent vector T.
  Vec2 parameter_components(const Vec3& T) const {
    return metric_inverse * Vec2(T.dot(Xu), T.dot(Xv));
  }

  /// Derivative of the unit normal along the tangent vector T.
  Vec3 normal_derivative(const Vec3& T) const {
    const Vec2 c = parameter_components(T);
    return c.x() * Nu + c.y() * Nv;
  }
};

/// Principal frame: N_P = -kappa1 P, N_Q = -kappa2 Q, P x Q = N, kappa1 <= kappa2.
struct FramedPoint : LocalGeometry {
  Vec3 P, Q;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double H = 0.0;
  double K = 0.0;
  bool umbilic = false;
};

/// Arc-length data along the boundary curve.
struct BoundaryPoint : LocalGeometry {
  std::size_t segment = 0;
  double t = 0.0;
  double speed = 0.0;  // ds/dt
  Vec3 X_s, X_ss, N_s;
  double kappa_g = 0.0;
};

/// Parameter-space point on a boundary curve with its t-derivatives.
struct CurvePoint {
  Vec2 uv, d1, d2;
};

/// One smooth piece of the parameter-domain boundary, parametrized by t in [0, 1].
struct BoundarySegment {
  enum class Kind { Line, Arc };

  static BoundarySegment line(Vec2 from, Vec2 to);
  static BoundarySegment arc(Vec2 center, double radius, double angle_from, double angle_to);

  CurvePoint at(double t) const;
  BoundarySegment reversed() const;
  /// True when the segment closes on itself (a full circle).
  bool is_loop() const;

  Kind kind = Kind::Line;
  Vec2 from = Vec2::Zero();
  Vec2 to = Vec2::Zero();
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
  double angle_from = 0.0;
  double angle_to = 0.0;
};

enum class BoundaryOrientation { positive, reversed };

/// Parametric patch (u, v) -> R^3. Orientation is N = X_u x X_v / ||X_u x X_v||.
/// Boundary edges along a periodic parameter are identified and dropped.
class Chart {
 public:
  Chart(Expression x, Expression y, Expression z, Domain domain,
        std::array<bool, 2> periodic = {false, false}, bool closed = false,
        int euler_characteristic = 1);

  static Chart parse(std::string_view x, std::string_view y, std::string_view z, Domain domain,
                     std::array<bool, 2> periodic = {false, false}, bool closed = false,
                     int euler_characteristic = 1);

  const Expression& x() const { return coords_[0]; }
  const Expression& y() const { return coords_[1]; }
  const Expression& z() const { return coords_[2]; }
  const Domain& domain() const { return domain_; }
  const std::array<bool, 2>& periodic() const { return periodic_; }
  bool closed() const { return closed_; }
  int euler_characteristic() const { return chi_; }

  Vec3 position(const Vec2& uv) const;
  SurfaceJet jet(const Vec2& uv) const;
  bool contains(const Vec2& uv) const;

  /// Positively oriented (counterclockwise in parameter space) boundary pieces;
  /// empty for closed charts.
  std::vector<BoundarySegment> boundary(
      BoundaryOrientation orientation = BoundaryOrientation::positive) const;

  /// Same surface with u and v exchanged, which reverses the orientation.
  Chart with_swapped_parameters() const;

 private:
  std::array<Expression, 3> coords_;
  Domain domain_;
  std::array<bool, 2> periodic_;
  bool closed_;
  int chi_;
};

LocalGeometry local_geometry(const SurfaceJet& jet);
LocalGeometry local_geometry(const Chart& chart, const Vec2& uv);

/// Matrix of the shape operator T -> -dN(T) in the orthonormal tangent basis
/// {e1 = X_u / ||X_u||, e2 = N x e1}. Not symmetrized.
Mat2 shape_operator_matrix(const LocalGeometry& g);

FramedPoint frame_at(const LocalGeometry& g);
FramedPoint frame_at(const Chart& chart, const Vec2& uv);

BoundaryPoint boundary_point(const Chart& chart, const BoundarySegment& segment, double t,
                             std::size_t segment_index = 0);

/// Arc length of the image of segment between parameters t0 and t1.
double arc_length(const Chart& chart, const BoundarySegment& segment, double t0, double t1);

inline double triple_product(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.dot(b.cross(c));
}

}  // namespace surfint
