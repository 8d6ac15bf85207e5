#include "surfint/geometry.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "surfint/quadrature.hpp"

namespace surfint {

namespace {

const std::vector<std::string>& uv_names() {
  static const std::vector<std::string> names{"u", "v"};
  return names;
}

}  // namespace

BoundarySegment BoundarySegment::line(Vec2 from, Vec2 to) {
  BoundarySegment s;
  s.kind = Kind::Line;
  s.from = from;
  s.to = to;
  return s;
}

BoundarySegment BoundarySegment::arc(Vec2 center, double radius, double angle_from,
                                     double angle_to) {
  BoundarySegment s;
  s.kind = Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.angle_from = angle_from;
  s.angle_to = angle_to;
  return s;
}

CurvePoint BoundarySegment::at(double t) const {
  if (kind == Kind::Line) {
    const Vec2 d = to - from;
    return {from + t * d, d, Vec2::Zero()};
  }
  const double sweep = angle_to - angle_from;
  const double a = angle_from + t * sweep;
  const Vec2 radial(std::cos(a), std::sin(a));
  const Vec2 tangential(-std::sin(a), std::cos(a));
  return {center + radius * radial, radius * sweep * tangential, -radius * sweep * sweep * radial};
}

BoundarySegment BoundarySegment::reversed() const {
  BoundarySegment s = *this;
  std::swap(s.from, s.to);
  std::swap(s.angle_from, s.angle_to);
  return s;
}

bool BoundarySegment::is_loop() const {
  return kind == Kind::Arc &&
         std::abs(std::abs(angle_to - angle_from) - 2.0 * std::numbers::pi) < 1e-14;
}

Chart::Chart(Expression x, Expression y, Expression z, Domain domain,
             std::array<bool, 2> periodic, bool closed, int euler_characteristic)
    : coords_{std::move(x), std::move(y), std::move(z)},
      domain_(domain),
      periodic_(periodic),
      closed_(closed),
      chi_(euler_characteristic) {
  for (const auto& e : coords_)
    if (e.variables().size() != 2)
      throw GeometryError("chart coordinate '" + e.source() + "' must be a function of two parameters");
  if (const auto* r = std::get_if<Rectangle>(&domain_)) {
    if (!(r->u_min < r->u_max) || !(r->v_min < r->v_max))
      throw GeometryError("rectangle domain must have u_min < u_max and v_min < v_max");
  } else {
    const auto& d = std::get<Disk>(domain_);
    if (!(d.radius > 0.0)) throw GeometryError("disk domain radius must be positive");
    if (periodic_[0] || periodic_[1]) throw GeometryError("disk domains cannot be periodic");
  }
}

Chart Chart::parse(std::string_view x, std::string_view y, std::string_view z, Domain domain,
                   std::array<bool, 2> periodic, bool closed, int euler_characteristic) {
  return Chart(Expression::parse(x, uv_names()), Expression::parse(y, uv_names()),
               Expression::parse(z, uv_names()), domain, periodic, closed, euler_characteristic);
}

Vec3 Chart::position(const Vec2& uv) const {
  const std::array<double, 2> p{uv.x(), uv.y()};
  return {coords_[0].evaluate(p), coords_[1].evaluate(p), coords_[2].evaluate(p)};
}

SurfaceJet Chart::jet(const Vec2& uv) const {
  const std::array<double, 2> p{uv.x(), uv.y()};
  SurfaceJet j;
  j.uv = uv;
  for (int k = 0; k < 3; ++k) {
    const Jet2 c = coords_[k].eval_jet2(p);
    j.X[k] = c.value();
    j.Xu[k] = c.grad(0);
    j.Xv[k] = c.grad(1);
    j.Xuu[k] = c.hess(0, 0);
    j.Xuv[k] = c.hess(0, 1);
    j.Xvv[k] = c.hess(1, 1);
  }
  return j;
}

bool Chart::contains(const Vec2& uv) const {
  if (const auto* r = std::get_if<Rectangle>(&domain_))
    return uv.x() >= r->u_min && uv.x() <= r->u_max && uv.y() >= r->v_min && uv.y() <= r->v_max;
  const auto& d = std::get<Disk>(domain_);
  return (uv - d.center).norm() <= d.radius;
}

std::vector<BoundarySegment> Chart::boundary(BoundaryOrientation orientation) const {
  std::vector<BoundarySegment> segments;
  if (closed_) return segments;
  if (const auto* r = std::get_if<Rectangle>(&domain_)) {
    const Vec2 a(r->u_min, r->v_min), b(r->u_max, r->v_min), c(r->u_max, r->v_max),
        d(r->u_min, r->v_max);
    // Edges of constant v are identified when v is periodic, and likewise for u.
    if (!periodic_[1]) segments.push_back(BoundarySegment::line(a, b));
    if (!periodic_[0]) segments.push_back(BoundarySegment::line(b, c));
    if (!periodic_[1]) segments.push_back(BoundarySegment::line(c, d));
    if (!periodic_[0]) segments.push_back(BoundarySegment::line(d, a));
  } else {
    const auto& disk = std::get<Disk>(domain_);
    segments.push_back(BoundarySegment::arc(disk.center, disk.radius, 0.0, 2.0 * std::numbers::pi));
  }
  if (orientation == BoundaryOrientation::reversed) {
    std::vector<BoundarySegment> rev;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) rev.push_back(it->reversed());
    segments = std::move(rev);
  }
  return segments;
}

Chart Chart::with_swapped_parameters() const {
  const std::vector<std::string> vu{"v", "u"};
  Domain swapped = domain_;
  if (auto* r = std::get_if<Rectangle>(&swapped)) {
    *r = Rectangle{r->v_min, r->v_max, r->u_min, r->u_max};
  } else {
    auto& d = std::get<Disk>(swapped);
    d.center = Vec2(d.center.y(), d.center.x());
  }
  return Chart(Expression::parse(coords_[0].source(), vu), Expression::parse(coords_[1].source(), vu),
               Expression::parse(coords_[2].source(), vu), swapped, {periodic_[1], periodic_[0]},
               closed_, chi_);
}

LocalGeometry local_geometry(const SurfaceJet& j) {
  LocalGeometry g;
  g.uv = j.uv;
  g.X = j.X;
  g.Xu = j.Xu;
  g.Xv = j.Xv;
  const Vec3 n = j.Xu.cross(j.Xv);
  g.area_density = n.norm();
  if (!(g.area_density > kImmersionThreshold))
    throw DegenerateChartError("degenerate chart: ||X_u x X_v|| = " + std::to_string(g.area_density) +
                                   " at (u, v) = (" + std::to_string(j.uv.x()) + ", " +
                                   std::to_string(j.uv.y()) + ")",
                               j.uv);
  g.N = n / g.area_density;
  const Vec3 nu = j.Xuu.cross(j.Xv) + j.Xu.cross(j.Xuv);
  const Vec3 nv = j.Xuv.cross(j.Xv) + j.Xu.cross(j.Xvv);
  g.Nu = (nu - g.N.dot(nu) * g.N) / g.area_density;
  g.Nv = (nv - g.N.dot(nv) * g.N) / g.area_density;
  const double E = j.Xu.squaredNorm(), F = j.Xu.dot(j.Xv), G = j.Xv.squaredNorm();
  const double det = E * G - F * F;
  g.metric_inverse << G / det, -F / det, -F / det, E / det;
  return g;
}

LocalGeometry local_geometry(const Chart& chart, const Vec2& uv) {
  return local_geometry(chart.jet(uv));
}

namespace {

// e1 = normalized tangential X_u (X_v when X_u degenerates), e2 = N x e1.
std::pair<Vec3, Vec3> tangent_basis(const LocalGeometry& g) {
  Vec3 e1 = g.Xu - g.Xu.dot(g.N) * g.N;
  if (e1.norm() <= kImmersionThreshold) e1 = g.Xv - g.Xv.dot(g.N) * g.N;
  if (e1.norm() <= kImmersionThreshold)
    throw DegenerateChartError("no tangential parameter direction", g.uv);
  e1.normalize();
  return {e1, g.N.cross(e1)};
}

}  // namespace

Mat2 shape_operator_matrix(const LocalGeometry& g) {
  const auto [e1, e2] = tangent_basis(g);
  const Vec3 dN1 = g.normal_derivative(e1);
  const Vec3 dN2 = g.normal_derivative(e2);
  Mat2 S;
  S << -e1.dot(dN1), -e1.dot(dN2), -e2.dot(dN1), -e2.dot(dN2);
  return S;
}

FramedPoint frame_at(const LocalGeometry& g) {
  FramedPoint f;
  static_cast<LocalGeometry&>(f) = g;
  const auto [e1, e2] = tangent_basis(g);
  const Vec3 dN1 = g.normal_derivative(e1);
  const Vec3 dN2 = g.normal_derivative(e2);
  const double a = -e1.dot(dN1);
  const double d = -e2.dot(dN2);
  const double b = -0.5 * (e1.dot(dN2) + e2.dot(dN1));

  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), b);
  f.kappa1 = mean - radius;
  f.kappa2 = mean + radius;
  f.umbilic = f.kappa2 - f.kappa1 <= kUmbilicThreshold * (1.0 + std::abs(f.kappa1) + std::abs(f.kappa2));
  if (f.umbilic) {
    f.P = e1;
    f.Q = e2;
  } else {
    // (cos phi, sin phi) spans the kappa2 eigenspace; P = (sin phi, -cos phi)
    // keeps P x Q = e1 x e2 = N.
    const double phi = 0.5 * std::atan2(2.0 * b, a - d);
    const double c = std::cos(phi), s = std::sin(phi);
    f.Q = c * e1 + s * e2;
    f.P = s * e1 - c * e2;
  }
  f.H = 0.5 * (f.kappa1 + f.kappa2);
  f.K = f.kappa1 * f.kappa2;
  return f;
}

FramedPoint frame_at(const Chart& chart, const Vec2& uv) {
  return frame_at(local_geometry(chart, uv));
}

BoundaryPoint boundary_point(const Chart& chart, const BoundarySegment& segment, double t,
                             std::size_t segment_index) {
  const CurvePoint c = segment.at(t);
  const SurfaceJet j = chart.jet(c.uv);
  BoundaryPoint b;
  static_cast<LocalGeometry&>(b) = local_geometry(j);
  b.segment = segment_index;
  b.t = t;
  const double du = c.d1.x(), dv = c.d1.y();
  const Vec3 Xt = j.Xu * du + j.Xv * dv;
  const Vec3 Xtt = j.Xuu * (du * du) + 2.0 * j.Xuv * (du * dv) + j.Xvv * (dv * dv) +
                   j.Xu * c.d2.x() + j.Xv * c.d2.y();
  b.speed = Xt.norm();
  if (!(b.speed > kImmersionThreshold))
    throw DegenerateChartError("zero-speed boundary parametrization", c.uv);
  b.X_s = Xt / b.speed;
  b.X_ss = (Xtt - b.X_s.dot(Xtt) * b.X_s) / (b.speed * b.speed);
  b.N_s = (b.Nu * du + b.Nv * dv) / b.speed;
  b.kappa_g = triple_product(b.X_s, b.X_ss, b.N);
  return b;
}

double arc_length(const Chart& chart, const BoundarySegment& segment, double t0, double t1) {
  const auto& rule = gauss_legendre(16);
  const double half = 0.5 * (t1 - t0), mid = 0.5 * (t1 + t0);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const CurvePoint c = segment.at(mid + half * rule.nodes[i]);
    const SurfaceJet j = chart.jet(c.uv);
    sum += rule.weights[i] * (j.Xu * c.d1.x() + j.Xv * c.d1.y()).norm();
  }
  return half * sum;
}

}  // namespace surfint
