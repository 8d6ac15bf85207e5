#include "surfint/fields.hpp"

#include <cmath>
#include <numbers>

namespace surfint {

namespace {

const std::vector<std::string>& xyz_names() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

void require_xyz(const Expression& e) {
  if (e.variables() != xyz_names())
    throw ExpressionError("field expression '" + e.source() + "' must be in variables (x, y, z)");
}

double wrap_angle(double a) {
  // Into (-pi, pi].
  a = std::remainder(a, 2.0 * std::numbers::pi);
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

}  // namespace

AmbientField::AmbientField(Expression x, Expression y, Expression z, std::string name)
    : components_{std::move(x), std::move(y), std::move(z)}, name_(std::move(name)) {
  for (const auto& e : components_) require_xyz(e);
}

AmbientField AmbientField::parse(std::string_view x, std::string_view y, std::string_view z,
                                 std::string name) {
  return AmbientField(Expression::parse(x, xyz_names()), Expression::parse(y, xyz_names()),
                      Expression::parse(z, xyz_names()), std::move(name));
}

AmbientField::Sample AmbientField::evaluate(const Vec3& p) const {
  const std::array<double, 3> at{p.x(), p.y(), p.z()};
  Sample s;
  for (int i = 0; i < 3; ++i) {
    const Jet2 j = components_[i].eval_jet2(at);
    s.value[i] = j.value();
    for (int k = 0; k < 3; ++k) s.jacobian(i, k) = j.grad(k);
  }
  return s;
}

Vec3 AmbientField::value(const Vec3& p) const {
  const std::array<double, 3> at{p.x(), p.y(), p.z()};
  return {components_[0].evaluate(at), components_[1].evaluate(at), components_[2].evaluate(at)};
}

FieldLinearization AmbientField::linearize(const LocalGeometry& g) const {
  const Sample s = evaluate(g.X);
  FieldLinearization lin;
  lin.value = s.value;
  lin.d_position = s.jacobian;
  return lin;
}

ScalarField::ScalarField(Expression f, std::string name) : f_(std::move(f)), name_(std::move(name)) {
  require_xyz(f_);
}

ScalarField ScalarField::parse(std::string_view f, std::string name) {
  return ScalarField(Expression::parse(f, xyz_names()), std::move(name));
}

ScalarField::Sample ScalarField::evaluate(const Vec3& p) const {
  const std::array<double, 3> at{p.x(), p.y(), p.z()};
  const Jet2 j = f_.eval_jet2(at);
  Sample s;
  s.value = j.value();
  for (int i = 0; i < 3; ++i) {
    s.gradient[i] = j.grad(i);
    for (int k = 0; k < 3; ++k) s.hessian(i, k) = j.hess(i, k);
  }
  return s;
}

Vec3 TangentField::value(const LocalGeometry& g) const {
  const Vec3 V = field_.value(g.X);
  if (projection_ == Projection::raw) return V;
  return V - V.dot(g.N) * g.N;
}

FieldLinearization TangentField::linearize(const LocalGeometry& g) const {
  FieldLinearization lin = field_.linearize(g);
  if (projection_ == Projection::raw) return lin;
  // d[V - (V.N) N] = (I - N N^T) J dX - (N V^T + (V.N) I) dN
  const Vec3 V = lin.value;
  const Vec3& N = g.N;
  const double vn = V.dot(N);
  lin.value = V - vn * N;
  lin.d_position = (Mat3::Identity() - N * N.transpose()) * lin.d_position;
  lin.d_normal = -(N * V.transpose()) - vn * Mat3::Identity();
  return lin;
}

SurfaceField SurfaceField::ambient(AmbientField field) { return SurfaceField(Variant(std::move(field))); }
SurfaceField SurfaceField::tangent(TangentField field) { return SurfaceField(Variant(std::move(field))); }
SurfaceField SurfaceField::position() { return SurfaceField(Variant(Position{})); }
SurfaceField SurfaceField::normal() { return SurfaceField(Variant(Normal{})); }
SurfaceField SurfaceField::gradient_at_position(ScalarField f) {
  return SurfaceField(Variant(GradientAtPosition{std::move(f)}));
}
SurfaceField SurfaceField::gradient_at_normal(ScalarField f) {
  return SurfaceField(Variant(GradientAtNormal{std::move(f)}));
}

FieldLinearization SurfaceField::linearize(const LocalGeometry& g) const {
  struct Visitor {
    const LocalGeometry& g;
    FieldLinearization operator()(const AmbientField& f) const { return f.linearize(g); }
    FieldLinearization operator()(const TangentField& f) const { return f.linearize(g); }
    FieldLinearization operator()(const Position&) const {
      FieldLinearization lin;
      lin.value = g.X;
      lin.d_position = Mat3::Identity();
      return lin;
    }
    FieldLinearization operator()(const Normal&) const {
      FieldLinearization lin;
      lin.value = g.N;
      lin.d_normal = Mat3::Identity();
      return lin;
    }
    FieldLinearization operator()(const GradientAtPosition& f) const {
      const auto s = f.f.evaluate(g.X);
      FieldLinearization lin;
      lin.value = s.gradient;
      lin.d_position = s.hessian;
      return lin;
    }
    FieldLinearization operator()(const GradientAtNormal& f) const {
      const auto s = f.f.evaluate(g.N);
      FieldLinearization lin;
      lin.value = s.gradient;
      lin.d_normal = s.hessian;
      return lin;
    }
  };
  return std::visit(Visitor{g}, v_);
}

Vec3 directional_derivative(const Chart& chart, const Vec2& uv, const SurfaceField& field,
                            const Vec3& direction) {
  const LocalGeometry g = local_geometry(chart, uv);
  return field.linearize(g).along(g, direction);
}

namespace {

void require_interior(const Chart& chart, const SingularitySpec& sing, double radius) {
  if (const auto* r = std::get_if<Rectangle>(&chart.domain())) {
    const bool u_ok = chart.periodic()[0] ||
                      (sing.uv.x() - radius > r->u_min && sing.uv.x() + radius < r->u_max);
    const bool v_ok = chart.periodic()[1] ||
                      (sing.uv.y() - radius > r->v_min && sing.uv.y() + radius < r->v_max);
    if (!u_ok || !v_ok)
      throw FieldIndexError("singularity circle is not strictly inside the chart domain");
  } else {
    const auto& d = std::get<Disk>(chart.domain());
    if ((sing.uv - d.center).norm() + radius >= d.radius)
      throw FieldIndexError("singularity circle is not strictly inside the chart domain");
  }
}

}  // namespace

double winding_number(const Chart& chart, const TangentField& field, const SingularitySpec& sing,
                      double radius, int samples) {
  if (!(radius > 0.0) || samples < 3) throw FieldIndexError("index needs radius > 0 and at least 3 samples");
  require_interior(chart, sing, radius);
  double first = 0.0, previous = 0.0, total = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * std::numbers::pi * k / samples;
    const Vec2 uv = sing.uv + radius * Vec2(std::cos(a), std::sin(a));
    const LocalGeometry g = local_geometry(chart, uv);
    const Vec3 e1 = (g.Xu - g.Xu.dot(g.N) * g.N).normalized();
    const Vec3 e2 = g.N.cross(e1);
    const Vec3 V = field.value(g);
    const double c1 = V.dot(e1), c2 = V.dot(e2);
    if (std::hypot(c1, c2) <= kImmersionThreshold)
      throw FieldIndexError("field vanishes on the index circle");
    const double angle = std::atan2(c2, c1);
    if (k == 0)
      first = angle;
    else
      total += wrap_angle(angle - previous);
    previous = angle;
  }
  total += wrap_angle(first - previous);
  return total / (2.0 * std::numbers::pi);
}

int field_index(const Chart& chart, const TangentField& field, const SingularitySpec& sing,
                double radius, int samples) {
  const double w = winding_number(chart, field, sing, radius, samples);
  const double snapped = std::round(w);
  if (std::abs(w - snapped) > kIndexSnapTolerance)
    throw FieldIndexError("winding number " + std::to_string(w) +
                          " is not close to an integer; refine samples or shrink the radius");
  return static_cast<int>(snapped);
}

}  // namespace surfint
