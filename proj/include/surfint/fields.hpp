#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "surfint/expr.hpp"
#include "surfint/geometry.hpp"

namespace surfint {

/// A field restricted to the surface, linearized at a point: its derivative
/// along a tangent T is d_position * T + d_normal * dN(T).
struct FieldLinearization {
  Vec3 value = Vec3::Zero();
  Mat3 d_position = Mat3::Zero();
  Mat3 d_normal = Mat3::Zero();

  Vec3 along(const Vec3& T, const Vec3& dN_T) const { return d_position * T + d_normal * dN_T; }
  Vec3 along(const LocalGeometry& g, const Vec3& T) const { return along(T, g.normal_derivative(T)); }
};

/// V : R^3 -> R^3 given by three expressions in (x, y, z).
class AmbientField {
 public:
  struct Sample {
    Vec3 value;
    Mat3 jacobian;  // jacobian(i, j) = d V_i / d x_j
  };

  AmbientField(Expression x, Expression y, Expression z, std::string name = {});
  static AmbientField parse(std::string_view x, std::string_view y, std::string_view z,
                            std::string name = {});

  const std::string& name() const { return name_; }
  const std::array<Expression, 3>& components() const { return components_; }

  Sample evaluate(const Vec3& p) const;
  Vec3 value(const Vec3& p) const;
  FieldLinearization linearize(const LocalGeometry& g) const;

 private:
  std::array<Expression, 3> components_;
  std::string name_;
};

/// F : R^3 -> R with gradient and Hessian.
class ScalarField {
 public:
  struct Sample {
    double value;
    Vec3 gradient;
    Mat3 hessian;
  };

  explicit ScalarField(Expression f, std::string name = {});
  static ScalarField parse(std::string_view f, std::string name = {});

  const std::string& name() const { return name_; }
  const Expression& expression() const { return f_; }
  Sample evaluate(const Vec3& p) const;

 private:
  Expression f_;
  std::string name_;
};

enum class Projection { raw, projected };

/// Vector field on M built from an ambient field. Projected mode removes the
/// normal component: V - (V.N) N.
class TangentField {
 public:
  explicit TangentField(AmbientField field, Projection projection = Projection::projected)
      : field_(std::move(field)), projection_(projection) {}

  const AmbientField& ambient() const { return field_; }
  Projection projection() const { return projection_; }
  const std::string& name() const { return field_.name(); }

  Vec3 value(const LocalGeometry& g) const;
  FieldLinearization linearize(const LocalGeometry& g) const;

 private:
  AmbientField field_;
  Projection projection_;
};

/// Anything the identities differentiate along the surface.
class SurfaceField {
 public:
  static SurfaceField ambient(AmbientField field);
  static SurfaceField tangent(TangentField field);
  static SurfaceField position();
  static SurfaceField normal();
  /// grad F evaluated at the surface point X.
  static SurfaceField gradient_at_position(ScalarField f);
  /// grad F evaluated at the unit normal N.
  static SurfaceField gradient_at_normal(ScalarField f);

  FieldLinearization linearize(const LocalGeometry& g) const;

 private:
  struct Position {};
  struct Normal {};
  struct GradientAtPosition {
    ScalarField f;
  };
  struct GradientAtNormal {
    ScalarField f;
  };
  using Variant = std::variant<AmbientField, TangentField, Position, Normal, GradientAtPosition,
                               GradientAtNormal>;

  explicit SurfaceField(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Derivative of field along a unit tangent direction at chart point uv.
Vec3 directional_derivative(const Chart& chart, const Vec2& uv, const SurfaceField& field,
                            const Vec3& direction);

struct SingularitySpec {
  Vec2 uv = Vec2::Zero();
  std::optional<int> declared_index;
};

class FieldIndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultIndexRadius = 0.05;
inline constexpr int kDefaultIndexSamples = 720;
inline constexpr double kIndexSnapTolerance = 0.05;

/// Winding number of (V.e1, V.e2) around the positively oriented parameter
/// circle of the given radius, with e1 = normalized tangential X_u, e2 = N x e1.
double winding_number(const Chart& chart, const TangentField& field, const SingularitySpec& sing,
                      double radius = kDefaultIndexRadius, int samples = kDefaultIndexSamples);

/// Index of an isolated zero: the winding number snapped to the nearest
/// integer. Throws FieldIndexError when the field vanishes on the circle or the
/// winding is not within kIndexSnapTolerance of an integer.
int field_index(const Chart& chart, const TangentField& field, const SingularitySpec& sing,
                double radius = kDefaultIndexRadius, int samples = kDefaultIndexSamples);

}  // namespace surfint
