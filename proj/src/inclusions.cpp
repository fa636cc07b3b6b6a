#include "trm/inclusions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "trm/errors.hpp"

namespace trm {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTieTol = 1e-12;

void require_center(const Point& x) {
  if (x.on_boundary() || !(x.norm() < 1.0)) {
    throw DomainError("center must be an interior point");
  }
}

void require_unit_radius(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError(std::string(what) + " must lie in (0, 1)");
}

void require_positive(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(std::string(what) + " must be positive");
}

// Unit vector along x, or the first axis when x = 0.
std::vector<double> direction(const Point& x) {
  std::vector<double> d(x.dim(), 0.0);
  const double nx = x.norm();
  if (nx == 0.0) {
    d[0] = 1.0;
    return d;
  }
  for (std::size_t i = 0; i < x.dim(); ++i) d[i] = x[i] / nx;
  return d;
}

// x + step * dir
Point offset(const Point& x, const std::vector<double>& dir, double step) {
  std::vector<double> p(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) p[i] = x[i] + step * dir[i];
  return Point::interior(std::move(p));
}

// At a tie of the selecting condition both branches must agree.
double checked_min(double a, double b, bool tie) {
  if (tie && std::abs(a - b) > kTieTol) {
    throw std::logic_error("branches disagree at their tie point");
  }
  return std::min(a, b);
}

InclusionBound make(std::string pair, Given given, double input, double inner, double outer,
                    BoundStatus status) {
  InclusionBound b;
  b.pair = std::move(pair);
  b.given = given;
  b.input = input;
  b.inner = inner;
  b.outer = outer;
  b.status = status;
  b.inner_sharp = status == BoundStatus::proved_iff || status == BoundStatus::conjectural ||
                  status == BoundStatus::identity;
  b.outer_sharp = b.inner_sharp;
  return b;
}

// k1 of the j*/rho inclusion: largest j* distance on S_rho(x, R).
double jstar_outer_of_rho(double nx, double R) {
  const double em1 = std::expm1(R);
  return (1.0 + nx) * em1 / (3.0 + std::exp(R) + nx * em1);
}

// k0 of the j*/rho inclusion.
double jstar_inner_of_rho(double nx, double R) {
  const double em1 = std::expm1(R);
  const double sh = (1.0 + nx) * std::sinh(R / 2.0);
  return std::max(sh / (2.0 + sh), (1.0 - nx) * em1 / (3.0 + std::exp(R) - nx * em1));
}

double rho_inner_of_jstar(double nx, double k) {
  return std::log1p(4.0 * k / ((1.0 - k) * (1.0 + nx)));
}

double rho_outer_of_jstar(double nx, double k) {
  return std::min(2.0 * std::asinh(2.0 * k / ((1.0 - k) * (1.0 + nx))),
                  std::log1p(4.0 * k / ((1.0 - k) * (1.0 - nx))));
}

InclusionBound necessary_radii(const Point& x, double value, Given given, std::string pair,
                               BoundStatus status) {
  require_center(x);
  const double nx = x.norm();
  if (given == Given::rho) {
    require_positive(value, "hyperbolic radius R");
    const double th = std::tanh(value / 2.0);
    const double t0 = th * (1.0 - nx * nx) /
                      (2.0 * (1.0 - nx * th) - std::abs(2.0 * nx - th * (1.0 + nx * nx)));
    const double t1 = jstar_outer_of_rho(nx, value);
    InclusionBound b = make(std::move(pair), given, value, t0, t1, status);
    const auto [outward, inward] = rho_axis_points(x, value);
    b.witnesses = {inward, outward};
    return b;
  }
  require_unit_radius(value, "radius t");
  const double t = value;
  const double l = s_rho_l(t, nx);
  if (!(l > 0.0)) {
    throw NonpositiveArgError("l(t, |x|) = " + std::to_string(l) + " is not positive");
  }
  const double r0 = std::log1p(4.0 * t / ((1.0 - t) * (1.0 + nx)));
  const double r1 = 2.0 * std::asinh(2.0 * t / std::sqrt(l));
  InclusionBound b = make(std::move(pair), given, value, r0, r1, status);
  if (nx > 0.0) {
    const auto [y0, y1] = s_line_intersections(x, t);
    b.witnesses = {y0, y1};
  } else {
    const double r = 2.0 * t / (1.0 + t);
    const auto dir = direction(x);
    b.witnesses = {offset(x, dir, r), offset(x, dir, -r)};
  }
  return b;
}

}  // namespace

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::proved_iff:
      return "proved-iff";
    case BoundStatus::proved_sufficient:
      return "proved-sufficient";
    case BoundStatus::necessary:
      return "necessary";
    case BoundStatus::conjectural:
      return "conjectural";
    case BoundStatus::identity:
      return "identity";
  }
  return "?";
}

std::string_view to_string(Given given) { return given == Given::rho ? "given-rho" : "given-metric"; }

InclusionBound s_vs_euclid(const Point& x, double t) {
  require_center(x);
  require_unit_radius(t, "radius t");
  const double nx = x.norm();
  const double inner = 2.0 * t * (1.0 - nx) / (1.0 + t);
  const double outer = checked_min(2.0 * t * (1.0 - nx) / (1.0 - t),
                                   2.0 * t * (1.0 + nx) / (1.0 + t), t == nx);
  InclusionBound b = make("s-euclid", Given::metric, t, inner, outer, BoundStatus::proved_iff);
  if (nx > 0.0) {
    const auto [y0, y1] = s_line_intersections(x, t);
    b.witnesses = {y0, y1};
  } else {
    const auto dir = direction(x);
    b.witnesses = {offset(x, dir, inner), offset(x, dir, -outer)};
  }
  return b;
}

bool s_enclosure_fits(const Point& x, double t) {
  require_center(x);
  require_unit_radius(t, "radius t");
  const double nx = x.norm();
  return (t < 1.0 / 3.0 && t <= nx) ||
         (nx < 1.0 / 3.0 && nx < t && t < (1.0 - nx) / (1.0 + 3.0 * nx));
}

InclusionBound jstar_vs_euclid(const Point& x, double r) {
  require_center(x);
  const double nx = x.norm();
  if (!(r > 0.0 && r < 1.0 - nx)) throw DomainError("Euclidean radius must lie in (0, 1 - |x|)");
  const double k0 = r / (2.0 - std::abs(r - 2.0 * nx));
  const double k1 = r / (2.0 - 2.0 * nx - r);
  InclusionBound b = make("jstar-euclid", Given::metric, r, k0, k1, BoundStatus::proved_iff);
  const auto dir = direction(x);
  b.witnesses = {offset(x, dir, -r), offset(x, dir, r)};
  return b;
}

InclusionBound euclid_vs_jstar(const Point& x, double k) {
  require_center(x);
  require_unit_radius(k, "radius k");
  const double nx = x.norm();
  const double r0 = 2.0 * k * (1.0 - nx) / (1.0 + k);
  const double r1 = checked_min(2.0 * k * (1.0 - nx) / (1.0 - k),
                                2.0 * k * (1.0 + nx) / (1.0 + k), k == nx);
  InclusionBound b = make("euclid-jstar", Given::metric, k, r0, r1, BoundStatus::proved_iff);
  const auto dir = direction(x);
  b.witnesses = {offset(x, dir, r0), offset(x, dir, -r1)};
  return b;
}

InclusionBound s_vs_jstar(double t, bool convex) {
  require_unit_radius(t, "radius t");
  const double inner = convex ? t / std::min(1.0 + t, kSqrt2) : t / (1.0 + t);
  InclusionBound b = make("s-jstar", Given::metric, t, inner, t, BoundStatus::proved_sufficient);
  b.outer_sharp = true;
  return b;
}

InclusionBound s_vs_jstar(const Point& x, double t, bool convex) {
  require_center(x);
  InclusionBound b = s_vs_jstar(t, convex);
  // y = x + 2t(z - x)/(1 + t) with z the boundary point nearest to x.
  const auto dir = direction(x);
  b.witnesses = {offset(x, dir, 2.0 * t * (1.0 - x.norm()) / (1.0 + t))};
  return b;
}

InclusionBound s_vs_j(double t, bool convex) {
  require_unit_radius(t, "radius t");
  double inner = std::log1p(2.0 * t);
  if (convex) inner = std::max(std::log((t + kSqrt2) / (kSqrt2 - t)), inner);
  InclusionBound b = make("s-j", Given::metric, t, inner, std::log((1.0 + t) / (1.0 - t)),
                          BoundStatus::proved_sufficient);
  b.outer_sharp = true;
  return b;
}

EnclosureResult s_enclosing_ball(const Point& x, double t) {
  require_center(x);
  require_unit_radius(t, "radius t");
  const double nx = x.norm();
  if (nx == 0.0) throw DomainError("the enclosing ball needs x != 0");
  if (t < nx) throw UnsupportedRegime("the enclosing ball is only established for t >= |x|");

  EnclosureResult out;
  out.ball.radius = 2.0 * t / (1.0 + t);
  out.ball.center.resize(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.ball.center[i] = x[i] * (1.0 - out.ball.radius);

  const auto [y0, y1] = s_line_intersections(x, t);
  double mid_err = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    mid_err = std::max(mid_err, std::abs(0.5 * (y0[i] + y1[i]) - out.ball.center[i]));
  }
  const double half = 0.5 * distance(y0.coords(), y1.coords());
  if (mid_err > 1e-12 || std::abs(half - out.ball.radius) > 1e-12) {
    throw std::logic_error("enclosing ball does not match the axis witnesses");
  }
  out.fits_in_unit = norm(out.ball.center) + out.ball.radius < 1.0;
  return out;
}

InclusionBound j_vs_rho(const Point& x, double value, Given given) {
  require_center(x);
  require_positive(value, given == Given::rho ? "hyperbolic radius R" : "j radius K");
  const double nx = x.norm();
  if (given == Given::rho) {
    const double R = value;
    const double em1 = std::expm1(R);
    const double k0 = std::max(std::log1p((1.0 + nx) * std::sinh(R / 2.0)),
                               std::log1p((1.0 - nx) * em1 / 2.0));
    const double k1 = std::log1p((1.0 + nx) * em1 / 2.0);
    return make("j-rho", given, R, k0, k1, BoundStatus::proved_iff);
  }
  const double em1 = std::expm1(value);
  const double r0 = std::log1p(2.0 * em1 / (1.0 + nx));
  const double r1 = std::min(2.0 * std::asinh(em1 / (1.0 + nx)), std::log1p(2.0 * em1 / (1.0 - nx)));
  return make("j-rho", given, value, r0, r1, BoundStatus::proved_iff);
}

InclusionBound jstar_vs_rho(const Point& x, double value, Given given) {
  require_center(x);
  const double nx = x.norm();
  if (given == Given::rho) {
    require_positive(value, "hyperbolic radius R");
    return make("jstar-rho", given, value, jstar_inner_of_rho(nx, value),
                jstar_outer_of_rho(nx, value), BoundStatus::proved_iff);
  }
  require_unit_radius(value, "radius k");
  return make("jstar-rho", given, value, rho_inner_of_jstar(nx, value),
              rho_outer_of_jstar(nx, value), BoundStatus::proved_iff);
}

double s_rho_origin(double t) {
  require_unit_radius(t, "radius t");
  return std::log((1.0 + 3.0 * t) / (1.0 - t));
}

double s_rho_l(double t, double x_norm) {
  const double nx = x_norm;
  return std::max((1.0 + t) * (1.0 + nx) * (1.0 - 3.0 * t + nx * (1.0 + t)),
                  (1.0 - t) * (1.0 - nx) * (1.0 + 3.0 * t - nx * (1.0 - t)));
}

InclusionBound s_rho_necessary(const Point& x, double value, Given given) {
  return necessary_radii(x, value, given, "s-rho-necessary", BoundStatus::necessary);
}

InclusionBound conjecture_bounds(const Point& x, double value, Given given) {
  return necessary_radii(x, value, given, "s-rho-conjecture", BoundStatus::conjectural);
}

InclusionBound s_rho_sufficient(const Point& x, double value, Given given) {
  require_center(x);
  const double nx = x.norm();
  if (given == Given::rho) {
    require_positive(value, "hyperbolic radius R");
    const double t0 = jstar_inner_of_rho(nx, value);
    const double k1 = jstar_outer_of_rho(nx, value);
    // Either expression alone suffices, so the smaller one is the bound.
    const double t1 = std::min(kSqrt2 * k1, (1.0 + nx) * std::expm1(value) / 4.0);
    return make("s-rho-sufficient", given, value, t0, t1, BoundStatus::proved_sufficient);
  }
  require_unit_radius(value, "radius t");
  const double t = value;
  const double k = t / std::min(1.0 + t, kSqrt2);
  return make("s-rho-sufficient", given, value, rho_inner_of_jstar(nx, k),
              rho_outer_of_jstar(nx, t), BoundStatus::proved_sufficient);
}

std::pair<Point, Point> rho_axis_points(const Point& x, double R) {
  const EuclideanBall ball = rho_ball_euclidean(x, R);
  const auto dir = direction(x);
  std::vector<double> out(x.dim());
  std::vector<double> in(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out[i] = ball.center[i] + ball.radius * dir[i];
    in[i] = ball.center[i] - ball.radius * dir[i];
  }
  return {Point::interior(std::move(out)), Point::interior(std::move(in))};
}

}  // namespace trm
