#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfint/geometry.hpp"

namespace surfint {

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2n - 1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kMaxGaussNodes = 64;

/// Cached rule, 1 <= n <= kMaxGaussNodes. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

enum class Execution { serial, parallel };

struct QuadratureSpec {
  int panels_u = 8;
  int panels_v = 8;
  int nodes_per_panel = 12;
  int boundary_panels = 32;
  Execution execution = Execution::parallel;

  /// Same rule with every panel count doubled.
  QuadratureSpec refined() const;
  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  std::size_t surface_node_count() const;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, Vec2 uv) : std::runtime_error(what), uv_(uv) {}
  const Vec2& uv() const { return uv_; }

 private:
  Vec2 uv_;
};

template <class T>
struct IntegralResult {
  T value;
  T refined_value;
  double est_error = 0.0;  // ||value - refined_value||
};

template <class T>
using SurfaceIntegrand = std::function<T(const FramedPoint&)>;
template <class T>
using BoundaryIntegrand = std::function<T(const BoundaryPoint&)>;

/// Composite rule over the parameter domain, integrand weighted by the area
/// density. Disk domains are tiled in polar coordinates. Panel partial sums
/// are combined in a fixed order, so serial and parallel runs agree bitwise.
/// Integrand failures are rethrown as QuadratureError nesting the cause.
template <class T>
T surface_sum(const Chart& chart, const SurfaceIntegrand<T>& integrand, const QuadratureSpec& spec);

/// Composite rule over each boundary segment with ds = speed dt; zero for
/// closed charts.
template <class T>
T boundary_sum(const Chart& chart, const BoundaryIntegrand<T>& integrand, const QuadratureSpec& spec,
               BoundaryOrientation orientation = BoundaryOrientation::positive);

template <class T>
IntegralResult<T> surface_integral(const Chart& chart, const SurfaceIntegrand<T>& integrand,
                                   const QuadratureSpec& spec = {});

template <class T>
IntegralResult<T> boundary_integral(const Chart& chart, const BoundaryIntegrand<T>& integrand,
                                    const QuadratureSpec& spec = {},
                                    BoundaryOrientation orientation = BoundaryOrientation::positive);

/// Composite Gauss-Legendre on [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b, int panels, int nodes);

}  // namespace surfint
