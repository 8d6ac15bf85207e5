#include "surfint/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace surfint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Fields smaller than this at a node count as vanishing.
constexpr double kVanishingField = 1e-10;

double distance(const Quantity& a, const Quantity& b) {
  if (std::holds_alternative<double>(a)) return std::abs(std::get<double>(a) - std::get<double>(b));
  return (std::get<Vec3>(a) - std::get<Vec3>(b)).norm();
}

template <class T>
IntegralResult<T> operator+(const IntegralResult<T>& a, const IntegralResult<T>& b) {
  return {a.value + b.value, a.refined_value + b.refined_value, a.est_error + b.est_error};
}

template <class T>
IntegralResult<T> scaled(const IntegralResult<T>& a, double s) {
  return {s * a.value, s * a.refined_value, std::abs(s) * a.est_error};
}

template <class T>
IntegralResult<T> exact(const T& v) {
  return {v, v, 0.0};
}

double tolerance_for(std::string_view id, const CheckOptions& options) {
  return options.tolerance.value_or(default_tolerance(id));
}

template <class T>
IdentityReport compare(std::string id, const IntegralResult<T>& lhs, const IntegralResult<T>& rhs,
                       const CheckOptions& options) {
  IdentityReport r;
  r.tolerance = tolerance_for(id, options);
  r.id = std::move(id);
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.residual = distance(r.lhs, r.rhs);
  r.refined_residual = distance(Quantity(lhs.refined_value), Quantity(rhs.refined_value));
  r.est_error = lhs.est_error + rhs.est_error;
  r.spec = options.quadrature;
  r.status = within_tolerance(r.residual, r.lhs, r.rhs, r.tolerance) ? Status::pass : Status::fail;
  return r;
}

IdentityReport violated(std::string id, const CheckOptions& options, std::string note) {
  IdentityReport r;
  r.tolerance = tolerance_for(id, options);
  r.id = std::move(id);
  r.spec = options.quadrature;
  r.status = Status::hypothesis_violated;
  r.note = std::move(note);
  return r;
}

// True when e, or an exception nested inside it, is a HypothesisViolation;
// `message` receives the innermost such message.
bool caused_by_hypothesis(const std::exception& e, std::string& message) {
  if (const auto* h = dynamic_cast<const HypothesisViolation*>(&e)) {
    message = h->what();
    return true;
  }
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    return caused_by_hypothesis(inner, message);
  } catch (...) {
  }
  return false;
}

template <class T>
IntegralResult<T> boundary_of(const Chart& chart, const BoundaryIntegrand<T>& f, const CheckOptions& o) {
  return boundary_integral<T>(chart, f, o.quadrature, o.orientation);
}

template <class T>
IntegralResult<T> surface_of(const Chart& chart, const SurfaceIntegrand<T>& f, const CheckOptions& o) {
  return surface_integral<T>(chart, f, o.quadrature);
}

IntegralResult<double> total_curvature(const Chart& chart, const CheckOptions& o) {
  return surface_of<double>(chart, [](const FramedPoint& p) { return p.K; }, o);
}

IntegralResult<double> total_geodesic_curvature(const Chart& chart, const CheckOptions& o) {
  return boundary_of<double>(chart, [](const BoundaryPoint& b) { return b.kappa_g; }, o);
}

Vec2 random_parameter(const Chart& chart, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (const auto* r = std::get_if<Rectangle>(&chart.domain())) {
    // Stay a small margin away from non-periodic edges (pole-type degeneracies).
    const double mu = chart.periodic()[0] ? 0.0 : 1e-3;
    const double mv = chart.periodic()[1] ? 0.0 : 1e-3;
    return {r->u_min + mu + (r->u_max - r->u_min - 2 * mu) * unit(rng),
            r->v_min + mv + (r->v_max - r->v_min - 2 * mv) * unit(rng)};
  }
  const auto& d = std::get<Disk>(chart.domain());
  const double rho = d.radius * std::sqrt(unit(rng));
  const double a = kTwoPi * unit(rng);
  return d.center + rho * Vec2(std::cos(a), std::sin(a));
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::hypothesis_violated:
      return "hypothesis-violated";
  }
  return "fail";
}

double magnitude(const Quantity& q) {
  if (std::holds_alternative<double>(q)) return std::abs(std::get<double>(q));
  return std::get<Vec3>(q).norm();
}

bool within_tolerance(double residual, const Quantity& lhs, const Quantity& rhs, double tolerance) {
  return residual <= tolerance * (1.0 + magnitude(lhs) + magnitude(rhs));
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{
      "stokes-scalar", "eq1",          "eq3",          "eq4",          "moment1",
      "moment2",       "moment3",      "moment4",      "minkowski1",   "minkowski2",
      "liouville",     "gb-integrand", "gauss-bonnet", "unit-tangent", "index",
      "poincare-hopf", "hessian1",     "hessian2"};
  return ids;
}

bool is_identity_id(std::string_view id) {
  const auto& ids = identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

double default_tolerance(std::string_view id) {
  if (id == "liouville" || id == "index" || id == "poincare-hopf") return kSweepTolerance;
  return kDefaultTolerance;
}

namespace integrand {

double stokes_scalar_surface(const FramedPoint& p, const ScalarField& f, const ScalarField& g) {
  const Vec3 df = f.evaluate(p.X).gradient;
  const Vec3 dg = g.evaluate(p.X).gradient;
  return df.dot(p.P) * dg.dot(p.Q) - df.dot(p.Q) * dg.dot(p.P);
}

double stokes_scalar_boundary(const BoundaryPoint& b, const ScalarField& f, const ScalarField& g) {
  return f.evaluate(b.X).value * g.evaluate(b.X).gradient.dot(b.X_s);
}

double stokes_vector_surface(const FramedPoint& p, const FieldLinearization& V,
                             const FieldLinearization& W) {
  const Vec3 Vp = V.along(p, p.P), Vq = V.along(p, p.Q);
  const Vec3 Wp = W.along(p, p.P), Wq = W.along(p, p.Q);
  return Vp.dot(Wq) - Vq.dot(Wp);
}

double stokes_vector_boundary(const BoundaryPoint& b, const FieldLinearization& V,
                              const FieldLinearization& W) {
  return V.value.dot(W.along(b.X_s, b.N_s));
}

double divergence_surface(const FramedPoint& p, const FieldLinearization& V) {
  const Vec3 Vp = V.along(p, p.P), Vq = V.along(p, p.Q);
  return -(Vp.dot(p.P) + Vq.dot(p.Q) + 2.0 * p.H * V.value.dot(p.N));
}

double divergence_boundary(const BoundaryPoint& b, const FieldLinearization& V) {
  return V.value.cross(b.N).dot(b.X_s);
}

double curvature_surface(const FramedPoint& p, const FieldLinearization& V) {
  const Vec3 Vp = V.along(p, p.P), Vq = V.along(p, p.Q);
  return p.kappa2 * Vp.dot(p.P) + p.kappa1 * Vq.dot(p.Q) + 2.0 * p.K * V.value.dot(p.N);
}

double curvature_boundary(const BoundaryPoint& b, const FieldLinearization& V) {
  return V.value.cross(b.N).dot(b.N_s);
}

double winding_boundary(const BoundaryPoint& b, const FieldLinearization& V) {
  const Vec3& W = V.value;
  const double m2 = W.squaredNorm();
  if (!(std::sqrt(m2) > kVanishingField)) throw HypothesisViolation("field vanishes on the boundary");
  return W.cross(b.N).dot(V.along(b.X_s, b.N_s)) / m2;
}

}  // namespace integrand

IdentityReport check_stokes_scalar(const Chart& chart, const ScalarField& f, const ScalarField& g,
                                   const CheckOptions& options) {
  const auto lhs = boundary_of<double>(
      chart, [&](const BoundaryPoint& b) { return integrand::stokes_scalar_boundary(b, f, g); }, options);
  const auto rhs = surface_of<double>(
      chart, [&](const FramedPoint& p) { return integrand::stokes_scalar_surface(p, f, g); }, options);
  return compare("stokes-scalar", lhs, rhs, options);
}

IdentityReport check_stokes_vector(const Chart& chart, const SurfaceField& V, const SurfaceField& W,
                                   const CheckOptions& options) {
  const auto lhs = boundary_of<double>(
      chart,
      [&](const BoundaryPoint& b) {
        return integrand::stokes_vector_boundary(b, V.linearize(b), W.linearize(b));
      },
      options);
  const auto rhs = surface_of<double>(
      chart,
      [&](const FramedPoint& p) {
        return integrand::stokes_vector_surface(p, V.linearize(p), W.linearize(p));
      },
      options);
  return compare("eq1", lhs, rhs, options);
}

IdentityReport check_divergence_identity(const Chart& chart, const SurfaceField& V,
                                         const CheckOptions& options) {
  const auto lhs = boundary_of<double>(
      chart, [&](const BoundaryPoint& b) { return integrand::divergence_boundary(b, V.linearize(b)); },
      options);
  const auto rhs = surface_of<double>(
      chart, [&](const FramedPoint& p) { return integrand::divergence_surface(p, V.linearize(p)); },
      options);
  return compare("eq3", lhs, rhs, options);
}

IdentityReport check_curvature_identity(const Chart& chart, const SurfaceField& V,
                                        const CheckOptions& options) {
  const auto lhs = boundary_of<double>(
      chart, [&](const BoundaryPoint& b) { return integrand::curvature_boundary(b, V.linearize(b)); },
      options);
  const auto rhs = surface_of<double>(
      chart, [&](const FramedPoint& p) { return integrand::curvature_surface(p, V.linearize(p)); },
      options);
  return compare("eq4", lhs, rhs, options);
}

std::array<IdentityReport, 4> check_moment_identities(const Chart& chart, const CheckOptions& options) {
  auto b1 = boundary_of<Vec3>(chart, [](const BoundaryPoint& b) -> Vec3 { return b.N.cross(b.X_s); }, options);
  auto s1 = surface_of<Vec3>(chart, [](const FramedPoint& p) -> Vec3 { return -2.0 * p.H * p.N; }, options);
  auto b2 = boundary_of<Vec3>(chart, [](const BoundaryPoint& b) -> Vec3 { return b.N.cross(b.N_s); }, options);
  auto s2 = surface_of<Vec3>(chart, [](const FramedPoint& p) -> Vec3 { return 2.0 * p.K * p.N; }, options);
  auto b3 = boundary_of<Vec3>(
      chart, [](const BoundaryPoint& b) -> Vec3 { return b.X.cross(b.N.cross(b.X_s)); }, options);
  auto s3 = surface_of<Vec3>(
      chart, [](const FramedPoint& p) -> Vec3 { return -2.0 * p.H * p.X.cross(p.N); }, options);
  auto b4 = boundary_of<Vec3>(
      chart, [](const BoundaryPoint& b) -> Vec3 { return b.X.cross(b.N.cross(b.N_s)); }, options);
  auto s4 = surface_of<Vec3>(
      chart, [](const FramedPoint& p) -> Vec3 { return 2.0 * p.K * p.X.cross(p.N); }, options);
  return {compare("moment1", b1, s1, options), compare("moment2", b2, s2, options),
          compare("moment3", b3, s3, options), compare("moment4", b4, s4, options)};
}

std::array<IdentityReport, 2> check_minkowski(const Chart& chart, const CheckOptions& options) {
  auto b1 = boundary_of<double>(
      chart, [](const BoundaryPoint& b) { return b.X.cross(b.N).dot(b.X_s); }, options);
  auto s1 = surface_of<double>(
      chart, [](const FramedPoint& p) { return -2.0 * (1.0 + p.H * p.X.dot(p.N)); }, options);
  auto b2 = boundary_of<double>(
      chart, [](const BoundaryPoint& b) { return b.X.cross(b.N).dot(b.N_s); }, options);
  auto s2 = surface_of<double>(
      chart, [](const FramedPoint& p) { return 2.0 * (p.H + p.K * p.X.dot(p.N)); }, options);
  return {compare("minkowski1", b1, s1, options), compare("minkowski2", b2, s2, options)};
}

double liouville_angle(const BoundaryPoint& b, const Vec3& C) {
  const Vec3 cn = C.cross(b.N);
  const double m = cn.norm();
  if (!(m > 0.0)) throw HypothesisViolation("C is parallel to N");
  const Vec3 a = cn / m;
  const Vec3 c = b.N.cross(a);
  return std::atan2(b.X_s.dot(c), b.X_s.dot(a));
}

namespace {

void require_liouville_hypothesis(const BoundaryPoint& b, const Vec3& C) {
  const double cn = std::abs(C.dot(b.N));
  if (cn > 1.0 - kLiouvilleMargin)
    throw HypothesisViolation("|C.N| = " + std::to_string(cn) + " on the boundary");
}

}  // namespace

LiouvilleSample liouville_residual(const Chart& chart, const Vec3& C, const BoundarySegment& segment,
                                   double t, double step) {
  if (std::abs(C.norm() - 1.0) > 1e-12) throw std::invalid_argument("C must be a unit vector");
  const BoundaryPoint b = boundary_point(chart, segment, t);
  require_liouville_hypothesis(b, C);
  double dt = step / b.speed;
  if (!segment.is_loop()) dt = std::min(dt, 0.5 * std::min(t, 1.0 - t));
  const BoundaryPoint plus = boundary_point(chart, segment, t + dt);
  const BoundaryPoint minus = boundary_point(chart, segment, t - dt);
  require_liouville_hypothesis(plus, C);
  require_liouville_hypothesis(minus, C);
  const double ds = arc_length(chart, segment, t - dt, t + dt);
  const double dtheta = std::remainder(liouville_angle(plus, C) - liouville_angle(minus, C), kTwoPi);

  LiouvilleSample s;
  s.theta_s = dtheta / ds;
  const double c = C.dot(b.N);
  s.predicted = b.kappa_g - c / (1.0 - c * c) * C.cross(b.N).dot(b.N_s);
  s.residual = std::abs(s.theta_s - s.predicted);
  return s;
}

IdentityReport check_liouville(const Chart& chart, const Vec3& C, int samples, const CheckOptions& options) {
  const std::vector<BoundarySegment> segments = chart.boundary(options.orientation);
  if (segments.empty()) {
    IdentityReport r = compare("liouville", exact(0.0), exact(0.0), options);
    r.note = "closed surface: no boundary";
    return r;
  }
  const Vec3 unit_c = C.normalized();

  // Hypothesis scan: dense sampling, then a local maximization of |C.N|.
  constexpr int kScan = 2048;
  for (const auto& seg : segments) {
    auto cn = [&](double t) { return std::abs(unit_c.dot(local_geometry(chart, seg.at(t).uv).N)); };
    int best = 0;
    double best_value = -1.0;
    for (int k = 0; k <= kScan; ++k) {
      const double v = cn(static_cast<double>(k) / kScan);
      if (v > best_value) best_value = v, best = k;
    }
    double lo = std::max(0.0, (best - 1.0) / kScan), hi = std::min(1.0, (best + 1.0) / kScan);
    for (int it = 0; it < 80; ++it) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (cn(m1) < cn(m2))
        lo = m1;
      else
        hi = m2;
    }
    best_value = std::max(best_value, cn(0.5 * (lo + hi)));
    if (best_value > 1.0 - kLiouvilleMargin)
      return violated("liouville", options,
                      "|C.N| reaches " + std::to_string(best_value) + " on the boundary");
  }

  double length = 0.0;
  for (const auto& seg : segments)
    for (int k = 0; k < 16; ++k) length += arc_length(chart, seg, k / 16.0, (k + 1) / 16.0);
  const double step = 1e-4 * length;

  const int per_segment = (samples + static_cast<int>(segments.size()) - 1) / static_cast<int>(segments.size());
  LiouvilleSample worst;
  worst.residual = -1.0;
  try {
    for (const auto& seg : segments)
      for (int k = 0; k < per_segment; ++k) {
        const LiouvilleSample s = liouville_residual(chart, unit_c, seg, (k + 0.5) / per_segment, step);
        if (s.residual > worst.residual) worst = s;
      }
  } catch (const HypothesisViolation& e) {
    return violated("liouville", options, e.what());
  }
  IdentityReport r = compare("liouville", exact(worst.theta_s), exact(worst.predicted), options);
  r.note = "worst of " + std::to_string(per_segment * segments.size()) + " boundary samples";
  return r;
}

GaussBonnetIntegrand gauss_bonnet_integrand(const Chart& chart, const Vec3& C, const Vec2& uv) {
  const FramedPoint p = frame_at(chart, uv);
  const double c = C.dot(p.N);
  const double gap = 1.0 - c * c;
  if (gap < kSubstitutionMargin) throw HypothesisViolation("1 - (C.N)^2 is below the substitution margin");
  const double phi = c / gap;
  const double dphi = (1.0 + c * c) / (gap * gap);
  // V = phi(C.N) C depends on the surface only through N.
  FieldLinearization V;
  V.value = phi * C;
  V.d_normal = dphi * C * C.transpose();

  GaussBonnetIntegrand g;
  g.curvature_integrand = integrand::curvature_surface(p, V);
  const double cp = C.dot(p.P), cq = C.dot(p.Q);
  g.simplified = dphi * (cp * cp + cq * cq) * p.K - 2.0 * c * phi * p.K;
  g.K = p.K;
  return g;
}

double gauss_bonnet_integrand_identity(const Chart& chart, const Vec3& C, const Vec2& uv) {
  const GaussBonnetIntegrand g = gauss_bonnet_integrand(chart, C, uv);
  return std::abs(-g.curvature_integrand - g.K);
}

IdentityReport check_gauss_bonnet_integrand(const Chart& chart, int samples, std::uint64_t seed,
                                            const CheckOptions& options) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = -1.0, worst_lhs = 0.0, worst_rhs = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec2 uv = random_parameter(chart, rng);
    const Vec3 N = local_geometry(chart, uv).N;
    Vec3 C;
    do {
      C = Vec3(normal(rng), normal(rng), normal(rng)).normalized();
    } while (std::abs(C.dot(N)) >= 0.9);
    const GaussBonnetIntegrand g = gauss_bonnet_integrand(chart, C, uv);
    const double d = std::abs(-g.curvature_integrand - g.K);
    if (d > worst) worst = d, worst_lhs = -g.curvature_integrand, worst_rhs = g.K;
  }
  IdentityReport r = compare("gb-integrand", exact(worst_lhs), exact(worst_rhs), options);
  r.note = "worst of " + std::to_string(samples) + " random (point, C) pairs";
  return r;
}

double boundary_corner_angles(const Chart& chart, BoundaryOrientation orientation) {
  const std::vector<BoundarySegment> segments = chart.boundary(orientation);
  double total = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const BoundarySegment& a = segments[i];
    const BoundarySegment& b = segments[(i + 1) % segments.size()];
    if (a.is_loop() || (a.at(1.0).uv - b.at(0.0).uv).norm() > 1e-12) continue;
    const BoundaryPoint end = boundary_point(chart, a, 1.0);
    const BoundaryPoint start = boundary_point(chart, b, 0.0);
    total += std::atan2(end.N.dot(end.X_s.cross(start.X_s)), end.X_s.dot(start.X_s));
  }
  return total;
}

IdentityReport check_gauss_bonnet(const Chart& chart, const CheckOptions& options) {
  const double corners = boundary_corner_angles(chart, options.orientation);
  const auto lhs = total_geodesic_curvature(chart, options) + exact(corners) + total_curvature(chart, options);
  IdentityReport r = compare("gauss-bonnet", lhs, exact(kTwoPi * chart.euler_characteristic()), options);
  if (corners != 0.0) r.note = "includes corner turning angles " + std::to_string(corners);
  return r;
}

IdentityReport check_unit_tangent_identity(const Chart& chart, const TangentField& V,
                                           std::span<const SingularitySpec> singularities,
                                           const CheckOptions& options) {
  for (const auto& s : singularities)
    if (chart.contains(s.uv))
      return violated("unit-tangent", options, "field has a declared zero on the patch");
  try {
    surface_sum<double>(
        chart,
        [&](const FramedPoint& p) {
          if (!(V.value(p).norm() > kVanishingField)) throw HypothesisViolation("field vanishes at a node");
          return 0.0;
        },
        options.quadrature);
    const auto lhs = boundary_of<double>(
        chart,
        [&](const BoundaryPoint& b) {
          const FieldLinearization lin = V.linearize(b);
          const double m = lin.value.norm();
          if (!(m > kVanishingField)) throw HypothesisViolation("field vanishes on the boundary");
          // Differentiate the normalized field U = W / |W| directly.
          const Vec3 U = lin.value / m;
          const Vec3 Ws = lin.along(b.X_s, b.N_s);
          const Vec3 Us = (Ws - U.dot(Ws) * U) / m;
          return U.cross(b.N).dot(Us);
        },
        options);
    return compare("unit-tangent", lhs, total_curvature(chart, options), options);
  } catch (const std::exception& e) {
    std::string why;
    if (caused_by_hypothesis(e, why)) return violated("unit-tangent", options, why);
    throw;
  }
}

namespace {

struct IndexSum {
  int total = 0;
  std::string mismatch;
};

IndexSum sum_indices(const Chart& chart, const TangentField& V, std::span<const SingularitySpec> sings) {
  IndexSum s;
  for (const auto& sing : sings) {
    const int index = field_index(chart, V, sing);
    if (sing.declared_index && *sing.declared_index != index && s.mismatch.empty())
      s.mismatch = "declared index " + std::to_string(*sing.declared_index) + " but computed " +
                   std::to_string(index);
    s.total += index;
  }
  return s;
}

IntegralResult<double> winding_integral(const Chart& chart, const TangentField& V, const CheckOptions& o) {
  return boundary_of<double>(
      chart, [&](const BoundaryPoint& b) { return integrand::winding_boundary(b, V.linearize(b)); }, o);
}

}  // namespace

IdentityReport check_index_identity(const Chart& chart, const TangentField& V,
                                    std::span<const SingularitySpec> singularities,
                                    const CheckOptions& options) {
  try {
    const IndexSum indices = sum_indices(chart, V, singularities);
    const auto lhs = winding_integral(chart, V, options);
    const auto rhs = total_curvature(chart, options) + exact(-kTwoPi * indices.total);
    IdentityReport r = compare("index", lhs, rhs, options);
    r.note = "sum of indices " + std::to_string(indices.total);
    if (!indices.mismatch.empty()) {
      r.status = Status::fail;
      r.note = indices.mismatch;
    }
    return r;
  } catch (const std::exception& e) {
    std::string why;
    if (caused_by_hypothesis(e, why)) return violated("index", options, why);
    throw;
  }
}

IdentityReport check_poincare_hopf(const Chart& chart, const TangentField& V,
                                   std::span<const SingularitySpec> singularities,
                                   const CheckOptions& options) {
  try {
    const IndexSum indices = sum_indices(chart, V, singularities);
    const auto boundary = winding_integral(chart, V, options) + total_geodesic_curvature(chart, options) +
                          exact(boundary_corner_angles(chart, options.orientation));
    const auto lhs = exact(static_cast<double>(chart.euler_characteristic() - indices.total));
    IdentityReport r = compare("poincare-hopf", lhs, scaled(boundary, 1.0 / kTwoPi), options);
    r.note = "sum of indices " + std::to_string(indices.total);
    if (!indices.mismatch.empty()) {
      r.status = Status::fail;
      r.note = indices.mismatch;
    }
    return r;
  } catch (const std::exception& e) {
    std::string why;
    if (caused_by_hypothesis(e, why)) return violated("poincare-hopf", options, why);
    throw;
  }
}

std::array<IdentityReport, 2> check_hessian_identities(const Chart& chart, const ScalarField& F,
                                                       const CheckOptions& options) {
  // The (kappa2 - kappa1) factor vanishes at umbilics, where P and Q are arbitrary.
  auto b1 = boundary_of<double>(
      chart, [&](const BoundaryPoint& b) { return F.evaluate(b.X).gradient.dot(b.N_s); }, options);
  auto s1 = surface_of<double>(
      chart,
      [&](const FramedPoint& p) {
        if (p.umbilic) return 0.0;
        return -(p.kappa2 - p.kappa1) * (F.evaluate(p.X).hessian * p.P).dot(p.Q);
      },
      options);
  auto b2 = boundary_of<double>(
      chart, [&](const BoundaryPoint& b) { return F.evaluate(b.N).gradient.dot(b.X_s); }, options);
  auto s2 = surface_of<double>(
      chart,
      [&](const FramedPoint& p) {
        if (p.umbilic) return 0.0;
        return (p.kappa2 - p.kappa1) * (F.evaluate(p.N).hessian * p.P).dot(p.Q);
      },
      options);
  return {compare("hessian1", b1, s1, options), compare("hessian2", b2, s2, options)};
}

}  // namespace surfint
