#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trm/geometry.hpp"
#include "trm/spheres.hpp"

namespace trm {

/// How strongly a bound is established.
enum class BoundStatus {
  proved_iff,         // both radii are the best possible
  proved_sufficient,  // the inclusions hold, optimality not claimed
  necessary,          // the inclusions can only hold within these radii
  conjectural,        // claimed best possible on numerical evidence only
  identity,           // the two balls coincide
};

std::string_view to_string(BoundStatus status);

/// For pairs involving the hyperbolic metric: which ball's radius is given.
/// `metric` means the s / j / j* radius is the input and hyperbolic radii
/// R0, R1 are returned; `rho` means R is the input.
enum class Given { metric, rho };

std::string_view to_string(Given given);

/// Largest inscribed radius (`inner`) and smallest circumscribed radius
/// (`outer`) of one metric's balls around a ball of another metric, with
/// points on both spheres showing the radii cannot be improved.
struct InclusionBound {
  std::string pair;
  Given given = Given::metric;
  double input = 0.0;
  double inner = 0.0;
  double outer = 0.0;
  bool inner_sharp = false;
  bool outer_sharp = false;
  BoundStatus status = BoundStatus::proved_sufficient;
  std::vector<Point> witnesses;
};

struct EnclosureResult {
  EuclideanBall ball;
  bool fits_in_unit = false;
};

/// B(x, inner) <= B_s(x, t) <= B(x, outer), both sharp.
InclusionBound s_vs_euclid(const Point& x, double t);

/// Whether the smallest x-centred Euclidean ball containing B_s(x, t) lies in
/// the unit ball.
bool s_enclosure_fits(const Point& x, double t);

/// B_j*(x, inner) <= B(x, r) <= B_j*(x, outer); requires 0 < r < 1 - |x|.
InclusionBound jstar_vs_euclid(const Point& x, double r);

/// B(x, inner) <= B_j*(x, k) <= B(x, outer).
InclusionBound euclid_vs_jstar(const Point& x, double k);

/// j*-radii around B_s(x, t); `convex` uses the sharper inner radius valid in
/// convex domains. With a center, the witness of the sharp outer radius is
/// included.
InclusionBound s_vs_jstar(double t, bool convex);
InclusionBound s_vs_jstar(const Point& x, double t, bool convex);

/// j-radii around B_s(x, t).
InclusionBound s_vs_j(double t, bool convex);

/// Smallest Euclidean ball containing B_s(x, t) (and B_j*(x, t)) for
/// 0 < |x| <= t < 1. Throws UnsupportedRegime for t < |x|.
EnclosureResult s_enclosing_ball(const Point& x, double t);

/// j versus rho. Given::rho: input R, returns j-radii K0, K1.
/// Given::metric: input K, returns hyperbolic radii R0, R1.
InclusionBound j_vs_rho(const Point& x, double value, Given given);

/// j* versus rho, same conventions (k in (0, 1) when Given::metric).
InclusionBound jstar_vs_rho(const Point& x, double value, Given given);

/// Hyperbolic radius of the origin-centred s-ball of radius t.
double s_rho_origin(double t);

/// l(t, |x|) of the necessary s/rho bounds.
double s_rho_l(double t, double x_norm);

/// Necessary conditions on s/rho inclusion radii. Given::rho returns the
/// upper bound for t0 and the lower bound for t1; Given::metric returns the
/// upper bound for R0 and the lower bound for R1.
InclusionBound s_rho_necessary(const Point& x, double value, Given given);

/// The same radii, labelled as conjecturally best possible.
InclusionBound conjecture_bounds(const Point& x, double value, Given given);

/// Proven sufficient s/rho radii.
InclusionBound s_rho_sufficient(const Point& x, double value, Given given);

/// Points of S_rho(x, R) on the axis L(0, x): (beyond x, towards the origin).
std::pair<Point, Point> rho_axis_points(const Point& x, double R);

}  // namespace trm
