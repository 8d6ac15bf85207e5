#include "surfint/quadrature.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <type_traits>

namespace surfint {

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_n(x) and its derivative.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

template <class T>
T zero() {
  if constexpr (std::is_same_v<T, double>)
    return 0.0;
  else
    return T::Zero();
}

double magnitude(double x) { return std::abs(x); }
double magnitude(const Vec3& v) { return v.norm(); }

std::string describe(const Vec2& uv) {
  std::ostringstream os;
  os.precision(17);
  os << "(u, v) = (" << uv.x() << ", " << uv.y() << ")";
  return os.str();
}

// Runs body(p) for p in [0, count) and returns the per-task results; the first
// failing task (lowest index) has its exception rethrown.
template <class T, class Body>
std::vector<T> run_tasks(std::size_t count, Execution execution, const Body& body) {
  std::vector<T> partial(count, zero<T>());
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long long p = 0; p < n; ++p) {
      try {
        partial[p] = body(static_cast<std::size_t>(p));
      } catch (...) {
        errors[p] = std::current_exception();
      }
    }
  } else {
    for (long long p = 0; p < n; ++p) {
      try {
        partial[p] = body(static_cast<std::size_t>(p));
      } catch (...) {
        errors[p] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return partial;
}

template <class T, class F, class Point>
T evaluate_at(const F& f, const Point& point) {
  try {
    return f(point);
  } catch (...) {
    std::throw_with_nested(QuadratureError("integrand evaluation failed at " + describe(point.uv), point.uv));
  }
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static const std::vector<GaussLegendreRule> rules = [] {
    std::vector<GaussLegendreRule> r(kMaxGaussNodes + 1);
    for (int k = 1; k <= kMaxGaussNodes; ++k) r[k] = build_rule(k);
    return r;
  }();
  if (n < 1 || n > kMaxGaussNodes)
    throw std::invalid_argument("Gauss-Legendre order must be in [1, " + std::to_string(kMaxGaussNodes) + "]");
  return rules[n];
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec r = *this;
  r.panels_u *= 2;
  r.panels_v *= 2;
  r.boundary_panels *= 2;
  return r;
}

void QuadratureSpec::validate() const {
  if (panels_u < 1 || panels_v < 1 || boundary_panels < 1)
    throw std::invalid_argument("panel counts must be positive");
  if (nodes_per_panel < 2 || nodes_per_panel > 32)
    throw std::invalid_argument("nodes_per_panel must be in [2, 32]");
}

std::size_t QuadratureSpec::surface_node_count() const {
  return static_cast<std::size_t>(panels_u) * panels_v * nodes_per_panel * nodes_per_panel;
}

template <class T>
T surface_sum(const Chart& chart, const SurfaceIntegrand<T>& integrand, const QuadratureSpec& spec) {
  spec.validate();
  const auto& rule = gauss_legendre(spec.nodes_per_panel);
  const int n = spec.nodes_per_panel;

  // Panel layout: first parameter (u, or radius for disks) by second (v, or angle).
  double a0, a1, b0, b1;
  const Disk* disk = std::get_if<Disk>(&chart.domain());
  if (disk) {
    a0 = 0.0, a1 = disk->radius, b0 = 0.0, b1 = 2.0 * std::numbers::pi;
  } else {
    const auto& r = std::get<Rectangle>(chart.domain());
    a0 = r.u_min, a1 = r.u_max, b0 = r.v_min, b1 = r.v_max;
  }
  const double ha = (a1 - a0) / spec.panels_u;
  const double hb = (b1 - b0) / spec.panels_v;

  auto panel = [&](std::size_t p) -> T {
    const int pa = static_cast<int>(p) / spec.panels_v;
    const int pb = static_cast<int>(p) % spec.panels_v;
    const double lo_a = a0 + pa * ha, lo_b = b0 + pb * hb;
    T sum = zero<T>();
    for (int i = 0; i < n; ++i) {
      const double a = lo_a + 0.5 * ha * (1.0 + rule.nodes[i]);
      const double wa = 0.5 * ha * rule.weights[i];
      for (int j = 0; j < n; ++j) {
        const double b = lo_b + 0.5 * hb * (1.0 + rule.nodes[j]);
        double w = wa * 0.5 * hb * rule.weights[j];
        Vec2 uv(a, b);
        if (disk) {
          uv = disk->center + a * Vec2(std::cos(b), std::sin(b));
          w *= a;
        }
        FramedPoint fp;
        try {
          fp = frame_at(chart, uv);
        } catch (...) {
          std::throw_with_nested(QuadratureError("frame evaluation failed at " + describe(uv), uv));
        }
        sum += (w * fp.area_density) * evaluate_at<T>(integrand, fp);
      }
    }
    return sum;
  };

  const std::size_t count = static_cast<std::size_t>(spec.panels_u) * spec.panels_v;
  const std::vector<T> partial = run_tasks<T>(count, spec.execution, panel);
  T total = zero<T>();
  for (const auto& v : partial) total += v;
  return total;
}

template <class T>
T boundary_sum(const Chart& chart, const BoundaryIntegrand<T>& integrand, const QuadratureSpec& spec,
               BoundaryOrientation orientation) {
  spec.validate();
  const std::vector<BoundarySegment> segments = chart.boundary(orientation);
  if (segments.empty()) return zero<T>();
  const auto& rule = gauss_legendre(spec.nodes_per_panel);
  const int n = spec.nodes_per_panel;
  const int panels = spec.boundary_panels;
  const double h = 1.0 / panels;

  auto panel = [&](std::size_t p) -> T {
    const std::size_t s = p / panels;
    const int k = static_cast<int>(p % panels);
    T sum = zero<T>();
    for (int i = 0; i < n; ++i) {
      const double t = (k + 0.5 * (1.0 + rule.nodes[i])) * h;
      BoundaryPoint bp;
      try {
        bp = boundary_point(chart, segments[s], t, s);
      } catch (...) {
        const Vec2 uv = segments[s].at(t).uv;
        std::throw_with_nested(QuadratureError("boundary evaluation failed at " + describe(uv), uv));
      }
      sum += (0.5 * h * rule.weights[i] * bp.speed) * evaluate_at<T>(integrand, bp);
    }
    return sum;
  };

  const std::vector<T> partial = run_tasks<T>(segments.size() * panels, spec.execution, panel);
  T total = zero<T>();
  for (const auto& v : partial) total += v;
  return total;
}

template <class T>
IntegralResult<T> surface_integral(const Chart& chart, const SurfaceIntegrand<T>& integrand,
                                   const QuadratureSpec& spec) {
  IntegralResult<T> r{surface_sum<T>(chart, integrand, spec),
                      surface_sum<T>(chart, integrand, spec.refined()), 0.0};
  r.est_error = magnitude(T(r.value - r.refined_value));
  return r;
}

template <class T>
IntegralResult<T> boundary_integral(const Chart& chart, const BoundaryIntegrand<T>& integrand,
                                    const QuadratureSpec& spec, BoundaryOrientation orientation) {
  IntegralResult<T> r{boundary_sum<T>(chart, integrand, spec, orientation),
                      boundary_sum<T>(chart, integrand, spec.refined(), orientation), 0.0};
  r.est_error = magnitude(T(r.value - r.refined_value));
  return r;
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, int panels, int nodes) {
  const auto& rule = gauss_legendre(nodes);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) sum += rule.weights[i] * f(a + h * (k + 0.5 * (1.0 + rule.nodes[i])));
    total += 0.5 * h * sum;
  }
  return total;
}

template double surface_sum<double>(const Chart&, const SurfaceIntegrand<double>&, const QuadratureSpec&);
template Vec3 surface_sum<Vec3>(const Chart&, const SurfaceIntegrand<Vec3>&, const QuadratureSpec&);
template double boundary_sum<double>(const Chart&, const BoundaryIntegrand<double>&, const QuadratureSpec&,
                                     BoundaryOrientation);
template Vec3 boundary_sum<Vec3>(const Chart&, const BoundaryIntegrand<Vec3>&, const QuadratureSpec&,
                                 BoundaryOrientation);
template IntegralResult<double> surface_integral<double>(const Chart&, const SurfaceIntegrand<double>&,
                                                         const QuadratureSpec&);
template IntegralResult<Vec3> surface_integral<Vec3>(const Chart&, const SurfaceIntegrand<Vec3>&,
                                                     const QuadratureSpec&);
template IntegralResult<double> boundary_integral<double>(const Chart&, const BoundaryIntegrand<double>&,
                                                          const QuadratureSpec&, BoundaryOrientation);
template IntegralResult<Vec3> boundary_integral<Vec3>(const Chart&, const BoundaryIntegrand<Vec3>&,
                                                      const QuadratureSpec&, BoundaryOrientation);

}  // namespace surfint
