#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "trm/geometry.hpp"
#include "trm/metrics.hpp"
#include "trm/parallel.hpp"

namespace trm {

/// Ordered polyline approximating a metric circle in the unit disk.
///
/// Vertices are sorted by the argument of (v - center) on [0, 2pi), ties by
/// distance to the center; `residuals[i]` is |d(center, v_i) - radius|.
struct Trace {
  Complex center;
  MetricKind metric = MetricKind::s;
  double radius = 0.0;
  std::vector<Complex> vertices;
  std::vector<double> residuals;
  /// Acceptance threshold the residuals were filtered with.
  double eps = 0.0;
};

/// Points y with |x - y| / (|x - z| + |z - y|) = t for which the line through
/// 0 and z = x e^{iu} / |x| bisects the angle at z.
struct CandidateSet {
  struct Candidate {
    Complex y;
    double h = 0.0;
  };

  double u = 0.0;
  Complex z;
  double v = 0.0;
  std::array<Candidate, 2> points{};
  int count = 0;
  /// True when (t, u) falls in the band where no such point exists.
  bool excluded = false;

  std::span<const Candidate> candidates() const {
    return {points.data(), static_cast<std::size_t>(count)};
  }
};

struct EuclideanBall {
  std::vector<double> center;
  double radius = 0.0;
};

/// Closed triangulated surface in R^3; faces index `vertices` (0-based).
struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;
};

/// Controls of the triangular ratio circle tracer. Defaults N = 10000 and
/// eps = 1e-5.
struct TraceOpts {
  int samples = 10000;
  double eps = 1e-5;
  SolveOpts solve{};
  Exec exec = Exec::parallel;
};

/// Endpoints c- <= c+ of the band of cos(u) for which no bisecting point at
/// metric distance t exists. Only meaningful for 0 < t < |x|.
std::pair<double, double> excluded_cos_band(double x_norm, double t);

CandidateSet candidate_points(Complex x, double t, double u);

/// Traces S_s(x, t):
///  1. x = 0: the Euclidean circle of radius 2t/(1+t);
///  2-3. sample u on [0, pi], or on the two admissible sub-intervals when
///     t < |x| (endpoints included);
///  4. collect the admissible candidate points of every sample;
///  5. keep those with |s(x, y) - t| <= eps;
///  6. add the reflection of each survivor over L(0, x);
///  7. sort by argument of y - x.
/// Throws EmptyTraceError if nothing survives step 5.
Trace trace_s_circle(Complex x, double t, const TraceOpts& opts = {});

/// Points of S_s(x, t) on the line L(0, x): y0 beyond x, y1 towards and past
/// the origin.
std::pair<Point, Point> s_line_intersections(const Point& x, double t);
std::pair<Complex, Complex> s_line_intersections(Complex x, double t);

struct MidcircleIntersections {
  /// cos of the half angle between x and each intersection point.
  double c = 0.0;
  std::vector<Complex> points;
  /// t > |x|: the whole circle |y| = |x| lies inside B_s(x, t).
  bool contains_circle = false;
};

/// Intersection of S_s(x, t) with the circle |y| = |x|.
MidcircleIntersections s_midcircle_intersections(Complex x, double t);

/// Admissible radial solutions |y| of the one-sided j* equation
/// |x - y| / (|x - y| + 2 - 2|y|) = k at angle u = angle(x, 0, y), with the
/// case split on k versus 1/3. Returns zero, one or two radii in (0, 1).
std::vector<double> upsilon_radii(double x_norm, double k, double cos_u);

/// Traces S_j*(x, k): the arc of S(x, 2k(1-|x|)/(1-k)) inside |y| <= |x| joined
/// with the one-sided branch outside it. `samples` per branch.
Trace trace_jstar_circle(Complex x, double k, int samples);

/// The full level set of the one-sided function (both inside and outside the
/// circle |y| = |x|); auxiliary curve for plots.
std::vector<Complex> trace_upsilon_circle(Complex x, double k, int samples);

/// Euclidean form of the hyperbolic ball B_rho(x, R).
EuclideanBall rho_ball_euclidean(const Point& x, double R);

/// Samples S_rho(x, R) through its Euclidean form.
Trace trace_rho_circle(Complex x, double R, int samples);

/// Samples the Euclidean circle S(center, r) (metric = euclidean).
Trace trace_euclidean_circle(Complex center, double r, int samples);

/// The two points where the traced sphere crosses the axis L(0, center),
/// ordered (outer, inner). Supported for s, j*, rho and Euclidean traces.
std::pair<Complex, Complex> axis_points(const Trace& trace);

/// Revolves the upper half of a planar trace about the axis L(0, center)
/// (the real axis when center = 0) in `steps` uniform rotation steps.
/// `axis` places the result in R^3; it defaults to the trace plane embedded
/// as z = 0.
Mesh revolve_3d(const Trace& trace, int steps,
                std::optional<std::array<double, 3>> axis = std::nullopt);

}  // namespace trm
