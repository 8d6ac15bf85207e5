#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surfint/fields.hpp"
#include "surfint/geometry.hpp"
#include "surfint/quadrature.hpp"

namespace surfint {

enum class Status { pass, fail, hypothesis_violated };

std::string_view to_string(Status s);

using Quantity = std::variant<double, Vec3>;

double magnitude(const Quantity& q);

inline constexpr double kDefaultTolerance = 1e-8;
/// Liouville finite differences and the index identities are checked at this level.
inline constexpr double kSweepTolerance = 1e-6;
/// |C.N| above 1 - kLiouvilleMargin violates the Liouville hypothesis.
inline constexpr double kLiouvilleMargin = 1e-6;
/// 1 - (C.N)^2 below this makes the Gauss-Bonnet substitution field singular.
inline constexpr double kSubstitutionMargin = 1e-8;

/// Stable checker ids, in the order a full run reports them.
const std::vector<std::string>& identity_ids();
bool is_identity_id(std::string_view id);
double default_tolerance(std::string_view id);

struct IdentityReport {
  std::string id;
  Quantity lhs = 0.0;
  Quantity rhs = 0.0;
  double residual = 0.0;          // ||lhs - rhs||
  double refined_residual = 0.0;  // same at doubled panel counts
  double est_error = 0.0;         // quadrature error estimate of both sides
  double tolerance = kDefaultTolerance;
  QuadratureSpec spec;
  Status status = Status::fail;
  std::string note;

  bool passed() const { return status == Status::pass; }
};

/// pass <=> residual <= tolerance * (1 + ||lhs|| + ||rhs||).
bool within_tolerance(double residual, const Quantity& lhs, const Quantity& rhs, double tolerance);

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckOptions {
  QuadratureSpec quadrature{};
  std::optional<double> tolerance;  // falls back to default_tolerance(id)
  BoundaryOrientation orientation = BoundaryOrientation::positive;
};

/// Pointwise integrands of the integral identities. Surface integrands take
/// the principal frame; boundary integrands return the ds density.
namespace integrand {

double stokes_scalar_surface(const FramedPoint& p, const ScalarField& f, const ScalarField& g);
double stokes_scalar_boundary(const BoundaryPoint& b, const ScalarField& f, const ScalarField& g);

double stokes_vector_surface(const FramedPoint& p, const FieldLinearization& V, const FieldLinearization& W);
double stokes_vector_boundary(const BoundaryPoint& b, const FieldLinearization& V,
                              const FieldLinearization& W);

/// -(V_p.P + V_q.Q + 2 H V.N)
double divergence_surface(const FramedPoint& p, const FieldLinearization& V);
/// (V x N).X_s
double divergence_boundary(const BoundaryPoint& b, const FieldLinearization& V);

/// kappa2 V_p.P + kappa1 V_q.Q + 2 K V.N
double curvature_surface(const FramedPoint& p, const FieldLinearization& V);
/// (V x N).N_s
double curvature_boundary(const BoundaryPoint& b, const FieldLinearization& V);

/// (V x N).V_s / ||V||^2
double winding_boundary(const BoundaryPoint& b, const FieldLinearization& V);

}  // namespace integrand

IdentityReport check_stokes_scalar(const Chart& chart, const ScalarField& f, const ScalarField& g,
                                   const CheckOptions& options = {});

/// Integral of V.dW around the boundary against the P/Q surface form.
IdentityReport check_stokes_vector(const Chart& chart, const SurfaceField& V, const SurfaceField& W,
                                   const CheckOptions& options = {});

IdentityReport check_divergence_identity(const Chart& chart, const SurfaceField& V,
                                         const CheckOptions& options = {});
IdentityReport check_curvature_identity(const Chart& chart, const SurfaceField& V,
                                        const CheckOptions& options = {});

/// N x dX, N x dN, X x (N x dX), X x (N x dN) moment identities, in that order.
std::array<IdentityReport, 4> check_moment_identities(const Chart& chart, const CheckOptions& options = {});

/// Both Minkowski formulas.
std::array<IdentityReport, 2> check_minkowski(const Chart& chart, const CheckOptions& options = {});

/// Turning angle of X_s measured from the unit tangent direction C x N / ||C x N||.
double liouville_angle(const BoundaryPoint& b, const Vec3& C);

struct LiouvilleSample {
  double theta_s = 0.0;    // finite difference in arc length
  double predicted = 0.0;  // kappa_g - (C.N)/(1 - (C.N)^2) (C x N).N_s
  double residual = 0.0;
};

/// Pointwise Liouville check at parameter t of segment. `step` is the arc
/// length step of the central difference. Throws HypothesisViolation when
/// |C.N| > 1 - kLiouvilleMargin at any stencil point.
LiouvilleSample liouville_residual(const Chart& chart, const Vec3& C, const BoundarySegment& segment,
                                   double t, double step);

/// Max Liouville residual over `samples` boundary points with step
/// 1e-4 * boundary length; hypothesis_violated when C.N reaches +-1 on the boundary.
IdentityReport check_liouville(const Chart& chart, const Vec3& C, int samples = 512,
                               const CheckOptions& options = {});

struct GaussBonnetIntegrand {
  double curvature_integrand = 0.0;  // curvature_surface integrand for V = (C.N)/(1-(C.N)^2) C
  double simplified = 0.0;           // closed form in C.P, C.Q, C.N and K
  double K = 0.0;
};

/// Evaluates the substituted curvature integrand at uv. The Liouville
/// correction enters the boundary term with a minus sign, so the surface
/// term that pairs with the geodesic curvature is -curvature_integrand.
GaussBonnetIntegrand gauss_bonnet_integrand(const Chart& chart, const Vec3& C, const Vec2& uv);

/// | -curvature_integrand - K | at uv.
double gauss_bonnet_integrand_identity(const Chart& chart, const Vec3& C, const Vec2& uv);

/// Random sweep of (point, C) pairs with |C.N| < 0.9; reports the worst point.
IdentityReport check_gauss_bonnet_integrand(const Chart& chart, int samples = 200,
                                            std::uint64_t seed = 1, const CheckOptions& options = {});

/// Sum of the signed turning angles of the boundary at the junctions of
/// consecutive segments (the corners of a rectangular patch). Zero for disks,
/// closed charts and periodic rectangles.
double boundary_corner_angles(const Chart& chart, BoundaryOrientation orientation = BoundaryOrientation::positive);

/// lhs = boundary kappa_g integral + corner angles + total K; rhs = 2 pi chi.
IdentityReport check_gauss_bonnet(const Chart& chart, const CheckOptions& options = {});

IdentityReport check_unit_tangent_identity(const Chart& chart, const TangentField& V,
                                           std::span<const SingularitySpec> singularities = {},
                                           const CheckOptions& options = {});

IdentityReport check_index_identity(const Chart& chart, const TangentField& V,
                                    std::span<const SingularitySpec> singularities,
                                    const CheckOptions& options = {});

IdentityReport check_poincare_hopf(const Chart& chart, const TangentField& V,
                                   std::span<const SingularitySpec> singularities,
                                   const CheckOptions& options = {});

/// Both difference-of-curvatures Hessian identities (grad F at X against dN,
/// grad F at N against dX).
std::array<IdentityReport, 2> check_hessian_identities(const Chart& chart, const ScalarField& F,
                                                       const CheckOptions& options = {});

}  // namespace surfint
