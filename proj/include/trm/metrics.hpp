#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trm/geometry.hpp"

namespace trm {

enum class MetricKind { s, j, jstar, rho, euclidean };

std::string_view to_string(MetricKind kind);
/// Accepts "s", "j", "jstar", "rho", "euclidean".
std::optional<MetricKind> parse_metric(std::string_view name);

/// Numerical controls of the triangular ratio evaluator.
struct SolveOpts {
  int grid_count = 720;
  double refine_tol = 1e-12;
  int max_refine_iters = 60;

  /// Throws DomainError if grid_count < 8, refine_tol <= 0 or
  /// max_refine_iters < 1.
  void validate() const;
};

/// Result of evaluating the triangular ratio metric. `argmin_z` is the
/// boundary point realising the infimum of |x - z| + |z - y|.
struct SValue {
  double value = 0.0;
  Point argmin_z;
  double bisection_residual = 0.0;
  bool converged = true;

  /// Throws ConvergenceError when the residual target was not met.
  void require_converged() const;
};

/// Planar counterpart of SValue, used by the tracing kernels.
struct PlanarSValue {
  double value = 0.0;
  Complex z;
  double bisection_residual = 0.0;
  bool converged = true;
};

/// Signed bisection residual at the boundary point z = e^{i theta}: the sum
/// of the signed angles that x - z and y - z make with the inward normal -z.
/// It vanishes exactly when the line through 0 and z bisects the angle
/// between the lines L(x, z) and L(z, y).
double bisection_residual(Complex x, Complex y, Complex z);

/// Triangular ratio metric of the unit ball.
///
/// The pair is rotated into the plane, |x - e^{i theta}| + |e^{i theta} - y|
/// is scanned on a uniform grid of `grid_count` angles, every discrete local
/// minimum is narrowed by golden-section search to a bracket of width 1e-10,
/// and the best one is polished by root finding on the bisection residual
/// until |residual| <= refine_tol. Non-convergence is reported through the
/// `converged` flag rather than thrown.
SValue s_ball(const Point& x, const Point& y, const SolveOpts& opts = {});
PlanarSValue s_ball(Complex x, Complex y, const SolveOpts& opts = {});

/// |x - y| / (2 - |x + y|) for x, y collinear with the origin.
/// Throws NotCollinearError when |x ^ y| > 1e-12.
double s_collinear(const Point& x, const Point& y);

/// Closed form of s(x, conj(x)) for x in the open first quadrant of the disk.
double s_conjugate(Complex x);
double s_conjugate(const Point& x);

double j_ball(const Point& x, const Point& y);
double jstar_ball(const Point& x, const Point& y);
double rho_ball(const Point& x, const Point& y);

double j_ball(Complex x, Complex y);
double jstar_ball(Complex x, Complex y);
double rho_ball(Complex x, Complex y);

/// Dispatches on `kind`; s uses s_ball with `opts`.
double metric_distance(MetricKind kind, const Point& x, const Point& y,
                       const SolveOpts& opts = {});
double metric_distance(MetricKind kind, Complex x, Complex y, const SolveOpts& opts = {});

}  // namespace trm
