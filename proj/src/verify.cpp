#include "trm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "trm/errors.hpp"
#include "trm/inclusions.hpp"

namespace trm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double boundary_sum(Complex x, Complex y, double theta) {
  const Complex z(std::cos(theta), std::sin(theta));
  return std::abs(x - z) + std::abs(z - y);
}

Complex direction_of(Complex c) {
  const double n = std::abs(c);
  return n == 0.0 ? Complex(1.0, 0.0) : c / n;
}

std::vector<Complex> circle_points(Complex center, double r, Complex dir, int n) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = kTwoPi * i / n;
    pts.push_back(center + r * dir * Complex(std::cos(a), std::sin(a)));
  }
  return pts;
}

double outer_excess(const BallSpec& outer, Complex y) {
  if (!(std::abs(y) < 1.0)) return kInf;
  if (outer.kind == MetricKind::euclidean) return std::abs(y - outer.center) - outer.radius;
  return metric_distance(outer.kind, outer.center, y) - outer.radius;
}

// One suite claim: builds the ball pair of a grid cell, or nothing when the
// cell lies outside the claim's hypotheses.
struct Claim {
  std::string id;
  std::string statement;
  bool iff = false;
  bool sharp = false;
  bool exploratory = false;
  std::vector<int> shape;
  std::vector<std::function<std::optional<std::pair<BallSpec, BallSpec>>()>> cells;
};

const std::vector<double> kNorms = {0.0, 0.25, 0.5, 0.75};
const std::vector<double> kUnitRadii = {0.1, 0.3, 0.5, 0.7, 0.9};
const std::vector<double> kHyperbolicRadii = {0.25, 0.75, 1.5, 3.0};
const std::vector<double> kEuclidFractions = {0.2, 0.5, 0.8};
const Complex kDirection = std::polar(1.0, 0.6);

Complex center_at(double nx) { return nx * kDirection; }

BallSpec ball(MetricKind kind, Complex c, double r) { return BallSpec{kind, c, r}; }

using Builder = std::function<std::optional<std::pair<BallSpec, BallSpec>>(Complex, double)>;

Claim grid_claim(std::string id, std::string statement, bool iff, bool sharp,
                 const std::vector<double>& radii, const Builder& build) {
  Claim c{std::move(id), std::move(statement), iff, sharp, false,
          {static_cast<int>(kNorms.size()), static_cast<int>(radii.size())}, {}};
  for (double nx : kNorms) {
    for (double r : radii) {
      c.cells.push_back([=] { return build(center_at(nx), r); });
    }
  }
  return c;
}

std::vector<Claim> inclusion_claims() {
  using MK = MetricKind;
  std::vector<Claim> out;
  auto P = [](Complex x) { return Point::from_complex(x); };

  out.push_back(grid_claim("euclid-in-s", "B(x,r0) <= B_s(x,t)", true, true, kUnitRadii,
                           [P](Complex x, double t) {
                             auto b = s_vs_euclid(P(x), t);
                             return std::make_pair(ball(MK::euclidean, x, b.inner), ball(MK::s, x, t));
                           }));
  out.push_back(grid_claim("s-in-euclid", "B_s(x,t) <= B(x,r1)", true, true, kUnitRadii,
                           [P](Complex x, double t) {
                             auto b = s_vs_euclid(P(x), t);
                             return std::make_pair(ball(MK::s, x, t), ball(MK::euclidean, x, b.outer));
                           }));

  // Euclidean radius as a fraction of the distance to the boundary.
  Claim jin{"jstar-in-euclid", "B_j*(x,k0) <= B(x,r)", true, true, false,
            {static_cast<int>(kNorms.size()), static_cast<int>(kEuclidFractions.size())}, {}};
  Claim ein{"euclid-in-jstar", "B(x,r) <= B_j*(x,k1)", true, true, false, jin.shape, {}};
  for (double nx : kNorms) {
    for (double f : kEuclidFractions) {
      const Complex x = center_at(nx);
      const double r = f * (1.0 - nx);
      jin.cells.push_back([=] {
        auto b = jstar_vs_euclid(P(x), r);
        return std::optional(std::make_pair(ball(MK::jstar, x, b.inner), ball(MK::euclidean, x, r)));
      });
      ein.cells.push_back([=] {
        auto b = jstar_vs_euclid(P(x), r);
        return std::optional(std::make_pair(ball(MK::euclidean, x, r), ball(MK::jstar, x, b.outer)));
      });
    }
  }
  out.push_back(std::move(jin));
  out.push_back(std::move(ein));

  out.push_back(grid_claim("euclid-in-jstar-k", "B(x,r0) <= B_j*(x,k)", true, true, kUnitRadii,
                           [P](Complex x, double k) {
                             auto b = euclid_vs_jstar(P(x), k);
                             return std::make_pair(ball(MK::euclidean, x, b.inner), ball(MK::jstar, x, k));
                           }));
  out.push_back(grid_claim("jstar-k-in-euclid", "B_j*(x,k) <= B(x,r1)", true, true, kUnitRadii,
                           [P](Complex x, double k) {
                             auto b = euclid_vs_jstar(P(x), k);
                             return std::make_pair(ball(MK::jstar, x, k), ball(MK::euclidean, x, b.outer));
                           }));

  out.push_back(grid_claim("jstar-in-s", "B_j*(x,t/(1+t)) <= B_s(x,t)", false, false, kUnitRadii,
                           [](Complex x, double t) {
                             return std::make_pair(ball(MK::jstar, x, s_vs_jstar(t, false).inner),
                                                   ball(MK::s, x, t));
                           }));
  out.push_back(grid_claim("jstar-in-s-convex", "B_j*(x,t/min(1+t,sqrt2)) <= B_s(x,t)", false,
                           false, kUnitRadii, [](Complex x, double t) {
                             return std::make_pair(ball(MK::jstar, x, s_vs_jstar(t, true).inner),
                                                   ball(MK::s, x, t));
                           }));
  out.push_back(grid_claim("s-in-jstar", "B_s(x,t) <= B_j*(x,t)", false, true, kUnitRadii,
                           [](Complex x, double t) {
                             return std::make_pair(ball(MK::s, x, t), ball(MK::jstar, x, t));
                           }));
  out.push_back(grid_claim("j-in-s", "B_j(x,log(1+2t)) <= B_s(x,t)", false, false, kUnitRadii,
                           [](Complex x, double t) {
                             return std::make_pair(ball(MK::j, x, s_vs_j(t, false).inner),
                                                   ball(MK::s, x, t));
                           }));
  out.push_back(grid_claim("j-in-s-convex", "B_j(x,max(log(1+2t),log((t+sqrt2)/(sqrt2-t)))) <= B_s(x,t)",
                           false, false, kUnitRadii, [](Complex x, double t) {
                             return std::make_pair(ball(MK::j, x, s_vs_j(t, true).inner),
                                                   ball(MK::s, x, t));
                           }));
  out.push_back(grid_claim("s-in-j", "B_s(x,t) <= B_j(x,log((1+t)/(1-t)))", false, true, kUnitRadii,
                           [](Complex x, double t) {
                             return std::make_pair(ball(MK::s, x, t), ball(MK::j, x, s_vs_j(t, false).outer));
                           }));

  auto enclosing = [P](MK kind) {
    return [P, kind](Complex x, double t) -> std::optional<std::pair<BallSpec, BallSpec>> {
      if (std::abs(x) == 0.0 || t < std::abs(x)) return std::nullopt;
      const EnclosureResult e = s_enclosing_ball(P(x), t);
      return std::make_pair(ball(kind, x, t),
                            ball(MK::euclidean, Complex(e.ball.center[0], e.ball.center[1]), e.ball.radius));
    };
  };
  out.push_back(grid_claim("s-in-enclosing-ball", "B_s(x,t) <= B(q,r) for t >= |x|", false, true,
                           kUnitRadii, enclosing(MK::s)));
  out.push_back(grid_claim("jstar-in-enclosing-ball", "B_j*(x,t) <= B(q,r) for t >= |x|", false,
                           true, kUnitRadii, enclosing(MK::jstar)));

  // j and j* against the hyperbolic metric, both directions.
  out.push_back(grid_claim("j-in-rho", "B_j(x,K0) <= B_rho(x,R)", true, true, kHyperbolicRadii,
                           [P](Complex x, double R) {
                             auto b = j_vs_rho(P(x), R, Given::rho);
                             return std::make_pair(ball(MK::j, x, b.inner), ball(MK::rho, x, R));
                           }));
  out.push_back(grid_claim("rho-in-j", "B_rho(x,R) <= B_j(x,K1)", true, true, kHyperbolicRadii,
                           [P](Complex x, double R) {
                             auto b = j_vs_rho(P(x), R, Given::rho);
                             return std::make_pair(ball(MK::rho, x, R), ball(MK::j, x, b.outer));
                           }));
  out.push_back(grid_claim("rho-in-j-given-K", "B_rho(x,R0) <= B_j(x,K)", true, true, kHyperbolicRadii,
                           [P](Complex x, double K) {
                             auto b = j_vs_rho(P(x), K, Given::metric);
                             return std::make_pair(ball(MK::rho, x, b.inner), ball(MK::j, x, K));
                           }));
  out.push_back(grid_claim("j-in-rho-given-K", "B_j(x,K) <= B_rho(x,R1)", true, true, kHyperbolicRadii,
                           [P](Complex x, double K) {
                             auto b = j_vs_rho(P(x), K, Given::metric);
                             return std::make_pair(ball(MK::j, x, K), ball(MK::rho, x, b.outer));
                           }));
  out.push_back(grid_claim("jstar-in-rho", "B_j*(x,k0) <= B_rho(x,R)", true, true, kHyperbolicRadii,
                           [P](Complex x, double R) {
                             auto b = jstar_vs_rho(P(x), R, Given::rho);
                             return std::make_pair(ball(MK::jstar, x, b.inner), ball(MK::rho, x, R));
                           }));
  out.push_back(grid_claim("rho-in-jstar", "B_rho(x,R) <= B_j*(x,k1)", true, true, kHyperbolicRadii,
                           [P](Complex x, double R) {
                             auto b = jstar_vs_rho(P(x), R, Given::rho);
                             return std::make_pair(ball(MK::rho, x, R), ball(MK::jstar, x, b.outer));
                           }));
  out.push_back(grid_claim("rho-in-jstar-given-k", "B_rho(x,R0) <= B_j*(x,k)", true, true, kUnitRadii,
                           [P](Complex x, double k) {
                             auto b = jstar_vs_rho(P(x), k, Given::metric);
                             return std::make_pair(ball(MK::rho, x, b.inner), ball(MK::jstar, x, k));
                           }));
  out.push_back(grid_claim("jstar-in-rho-given-k", "B_j*(x,k) <= B_rho(x,R1)", true, true, kUnitRadii,
                           [P](Complex x, double k) {
                             auto b = jstar_vs_rho(P(x), k, Given::metric);
                             return std::make_pair(ball(MK::jstar, x, k), ball(MK::rho, x, b.outer));
                           }));

  // Sufficient s/rho radii.
  out.push_back(grid_claim("s-in-rho", "B_s(x,t0) <= B_rho(x,R)", false, false, kHyperbolicRadii,
                           [P](Complex x, double R) -> std::optional<std::pair<BallSpec, BallSpec>> {
                             auto b = s_rho_sufficient(P(x), R, Given::rho);
                             if (!(b.inner < 1.0)) return std::nullopt;
                             return std::make_pair(ball(MK::s, x, b.inner), ball(MK::rho, x, R));
                           }));
  out.push_back(grid_claim("rho-in-s", "B_rho(x,R) <= B_s(x,t1)", false, false, kHyperbolicRadii,
                           [P](Complex x, double R) {
                             auto b = s_rho_sufficient(P(x), R, Given::rho);
                             return std::make_pair(ball(MK::rho, x, R), ball(MK::s, x, b.outer));
                           }));
  out.push_back(grid_claim("rho-in-s-given-t", "B_rho(x,R0) <= B_s(x,t)", false, false, kUnitRadii,
                           [P](Complex x, double t) {
                             auto b = s_rho_sufficient(P(x), t, Given::metric);
                             return std::make_pair(ball(MK::rho, x, b.inner), ball(MK::s, x, t));
                           }));
  out.push_back(grid_claim("s-in-rho-given-t", "B_s(x,t) <= B_rho(x,R1)", false, false, kUnitRadii,
                           [P](Complex x, double t) {
                             auto b = s_rho_sufficient(P(x), t, Given::metric);
                             return std::make_pair(ball(MK::s, x, t), ball(MK::rho, x, b.outer));
                           }));

  // For t < |x| the ball spanned by the axis points still holds the s-ball,
  // while the j*-ball is expected to stick out.
  auto axis_ball = [](MK kind) {
    return [kind](Complex x, double t) -> std::optional<std::pair<BallSpec, BallSpec>> {
      const auto [y0, y1] = s_line_intersections(x, t);
      return std::make_pair(ball(kind, x, t), ball(MK::euclidean, 0.5 * (y0 + y1), 0.5 * std::abs(y0 - y1)));
    };
  };
  for (MK kind : {MK::s, MK::jstar}) {
    Claim explore{kind == MK::s ? "s-in-axis-ball-below-norm" : "jstar-in-axis-ball-below-norm",
                  kind == MK::s ? "B_s(x,t) <= B((y0+y1)/2,|y0-y1|/2) for t < |x|"
                                : "B_j*(x,t) <= B((y0+y1)/2,|y0-y1|/2) for t < |x|",
                  false, false, true, {3, 3}, {}};
    const auto build = axis_ball(kind);
    for (double nx : {0.5, 0.7, 0.9}) {
      for (double f : {0.3, 0.6, 0.9}) {
        const Complex x = center_at(nx);
        explore.cells.push_back([=] { return build(x, f * nx); });
      }
    }
    out.push_back(std::move(explore));
  }
  return out;
}

struct PairClaim {
  std::string id;
  std::string statement;
  // Positive when the inequality is violated.
  std::function<double(Complex, Complex)> excess;
};

std::vector<PairClaim> pair_claims() {
  auto js = [](Complex x, Complex y) { return jstar_ball(x, y); };
  auto ss = [](Complex x, Complex y) { return s_ball(x, y).value; };
  return {
      {"jstar-le-s", "j*(x,y) <= s(x,y)", [=](Complex x, Complex y) { return js(x, y) - ss(x, y); }},
      {"s-le-2jstar", "s(x,y) <= 2 j*(x,y)",
       [=](Complex x, Complex y) { return ss(x, y) - 2.0 * js(x, y); }},
      {"s-le-sqrt2-jstar", "s(x,y) <= sqrt2 j*(x,y)",
       [=](Complex x, Complex y) { return ss(x, y) - std::numbers::sqrt2 * js(x, y); }},
      {"s-le-jstar-ratio", "s(x,y) <= j*(x,y)/(1-j*(x,y))",
       [=](Complex x, Complex y) {
         const double k = js(x, y);
         return ss(x, y) - k / (1.0 - k);
       }},
  };
}

Complex random_in_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = 0.99 * std::sqrt(unit(rng));
  return std::polar(r, kTwoPi * unit(rng));
}

InclusionReport run_pair_claim(const PairClaim& claim, const std::vector<std::pair<Complex, Complex>>& pairs,
                               Exec exec) {
  std::vector<double> ex(pairs.size());
  for_each_index(exec, pairs.size(), [&](std::size_t i) { ex[i] = claim.excess(pairs[i].first, pairs[i].second); });
  InclusionReport rep;
  rep.claim = claim.id;
  rep.statement = claim.statement;
  rep.grid_shape = {static_cast<int>(pairs.size())};
  rep.cells = static_cast<int>(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (ex[i] > rep.worst) {
      rep.worst = ex[i];
      rep.worst_center = pairs[i].first;
      rep.worst_point = pairs[i].second;
    }
  }
  return rep;
}

// Equalities at the axis witnesses of the necessary s/rho radii; the bound
// is inflated like an inner radius.
std::vector<InclusionReport> witness_claims(double inflate, Exec exec) {
  struct Cell {
    Complex x;
    double arg;
  };
  std::vector<Cell> t_cells;
  std::vector<Cell> r_cells;
  for (double nx : kNorms) {
    for (double t : kUnitRadii) t_cells.push_back({center_at(nx), t});
    for (double R : kHyperbolicRadii) r_cells.push_back({center_at(nx), R});
  }
  const double g = 1.0 + inflate;
  struct Spec {
    std::string id;
    std::string statement;
    const std::vector<Cell>* cells;
    std::function<std::pair<double, Complex>(const Cell&)> gap;
  };
  auto P = [](Complex x) { return Point::from_complex(x); };
  auto C = [](const Point& p) { return Complex(p[0], p[1]); };
  std::vector<Spec> specs = {
      {"necessary-R0-witness", "rho(x,y0) = R0 bound", &t_cells,
       [=](const Cell& c) {
         auto b = s_rho_necessary(P(c.x), c.arg, Given::metric);
         return std::make_pair(std::abs(rho_ball(P(c.x), b.witnesses[0]) - g * b.inner), C(b.witnesses[0]));
       }},
      {"necessary-R1-witness", "rho(x,y1) = R1 bound", &t_cells,
       [=](const Cell& c) {
         auto b = s_rho_necessary(P(c.x), c.arg, Given::metric);
         return std::make_pair(std::abs(rho_ball(P(c.x), b.witnesses[1]) - b.outer / g), C(b.witnesses[1]));
       }},
      {"necessary-t0-witness", "s(x,inward rho point) = t0 bound", &r_cells,
       [=](const Cell& c) {
         auto b = s_rho_necessary(P(c.x), c.arg, Given::rho);
         return std::make_pair(std::abs(s_ball(P(c.x), b.witnesses[0]).value - g * b.inner),
                               C(b.witnesses[0]));
       }},
      {"necessary-t1-witness", "s(x,outward rho point) = t1 bound", &r_cells,
       [=](const Cell& c) {
         auto b = s_rho_necessary(P(c.x), c.arg, Given::rho);
         return std::make_pair(std::abs(s_ball(P(c.x), b.witnesses[1]).value - b.outer / g),
                               C(b.witnesses[1]));
       }},
  };
  std::vector<InclusionReport> out;
  for (const Spec& s : specs) {
    const auto& cells = *s.cells;
    std::vector<std::pair<double, Complex>> gaps(cells.size());
    for_each_index(exec, cells.size(), [&](std::size_t i) { gaps[i] = s.gap(cells[i]); });
    InclusionReport rep;
    rep.claim = s.id;
    rep.statement = s.statement;
    rep.sharp = true;
    rep.grid_shape = {static_cast<int>(kNorms.size()), static_cast<int>(cells.size() / kNorms.size())};
    rep.cells = static_cast<int>(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (gaps[i].first > rep.worst) {
        rep.worst = gaps[i].first;
        rep.worst_center = cells[i].x;
        rep.worst_inner_radius = cells[i].arg;
        rep.worst_point = gaps[i].second;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

double brute_force_s(Complex x, Complex y, int m) {
  if (m < 360) throw DomainError("brute force needs at least 360 boundary samples");
  if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0)) throw DomainError("points must lie in the unit disk");
  const double d = std::abs(x - y);
  if (d == 0.0) return 0.0;

  const double h = kTwoPi / m;
  int best = 0;
  double fbest = boundary_sum(x, y, 0.0);
  for (int k = 1; k < m; ++k) {
    const double f = boundary_sum(x, y, h * k);
    if (f < fbest) {
      fbest = f;
      best = k;
    }
  }
  const double th = h * best;
  const double fm = boundary_sum(x, y, th - h);
  const double fp = boundary_sum(x, y, th + h);
  const double curv = fm - 2.0 * fbest + fp;
  if (curv > 0.0) {
    const double step = 0.5 * h * (fm - fp) / curv;
    fbest = std::min(fbest, boundary_sum(x, y, th + step));
  }
  return d / fbest;
}

double brute_force_s(const Point& x, const Point& y, int m) {
  const PlanarPair p = reduce_to_plane(x, y);
  return brute_force_s(p.a, p.b, m);
}

std::vector<double> brute_force_s_batch(const std::vector<std::pair<Point, Point>>& pairs, int m,
                                        Exec exec) {
  std::vector<double> out(pairs.size());
  for_each_index(exec, pairs.size(),
                 [&](std::size_t i) { out[i] = brute_force_s(pairs[i].first, pairs[i].second, m); });
  return out;
}

void InclusionReport::merge(const InclusionReport& cell) {
  cells += cell.cells;
  tolerance = std::max(tolerance, cell.tolerance);
  if (!cell.error.empty() && error.empty()) error = cell.error;
  if (cell.worst > worst) {
    worst = cell.worst;
    worst_center = cell.worst_center;
    worst_inner_radius = cell.worst_inner_radius;
    worst_outer_radius = cell.worst_outer_radius;
    worst_point = cell.worst_point;
  }
}

std::vector<Complex> sample_sphere(const BallSpec& b, const CheckOpts& opts) {
  if (opts.samples < 100) throw DomainError("inclusion checks need at least 100 samples");
  const Complex x = b.center;
  const Complex dir = direction_of(x);
  std::vector<Complex> pts;
  switch (b.kind) {
    case MetricKind::euclidean:
      pts = circle_points(x, b.radius, dir, opts.samples);
      break;
    case MetricKind::rho: {
      const EuclideanBall e = rho_ball_euclidean(Point::from_complex(x), b.radius);
      pts = circle_points(Complex(e.center[0], e.center[1]), e.radius, dir, opts.samples);
      break;
    }
    case MetricKind::j:
    case MetricKind::jstar: {
      const double k = b.kind == MetricKind::j ? std::tanh(b.radius / 2.0) : b.radius;
      const Trace tr = trace_jstar_circle(x, k, opts.samples);
      pts = tr.vertices;
      const auto [o, i] = axis_points(tr);
      pts.push_back(o);
      pts.push_back(i);
      break;
    }
    case MetricKind::s: {
      TraceOpts to;
      to.samples = opts.samples;
      to.eps = opts.eps;
      to.exec = opts.exec;
      pts = trace_s_circle(x, b.radius, to).vertices;
      break;
    }
  }
  return pts;
}

InclusionReport check_inclusion(const BallSpec& inner, const BallSpec& outer, const CheckOpts& opts) {
  if (inner.kind != MetricKind::euclidean && outer.kind != MetricKind::euclidean &&
      inner.center != outer.center) {
    throw DomainError("inclusion checks need a common center");
  }
  InclusionReport rep;
  rep.tolerance = opts.tolerance > 0.0 ? opts.tolerance
                  : inner.kind == MetricKind::s ? kTracedTolerance
                                                : kExactTolerance;
  rep.cells = 1;
  rep.worst_center = inner.center;
  rep.worst_inner_radius = inner.radius;
  rep.worst_outer_radius = outer.radius;
  const std::vector<Complex> pts = sample_sphere(inner, opts);
  std::vector<double> ex(pts.size());
  for_each_index(opts.exec, pts.size(), [&](std::size_t i) { ex[i] = outer_excess(outer, pts[i]); });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (ex[i] > rep.worst) {
      rep.worst = ex[i];
      rep.worst_point = pts[i];
    }
  }
  return rep;
}

std::vector<InclusionReport> verify_theorem_suite(const SuiteOpts& opts) {
  std::vector<InclusionReport> reports;

  const std::vector<Claim> claims = inclusion_claims();
  struct Job {
    std::size_t claim;
    std::size_t cell;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    for (std::size_t k = 0; k < claims[c].cells.size(); ++k) jobs.push_back({c, k});
  }
  std::vector<std::optional<InclusionReport>> results(jobs.size());
  for_each_index(opts.exec, jobs.size(), [&](std::size_t j) {
    const Claim& claim = claims[jobs[j].claim];
    InclusionReport rep;
    try {
      auto balls = claim.cells[jobs[j].cell]();
      if (!balls) return;
      auto [inner, outer] = *balls;
      inner.radius *= 1.0 + opts.inflate;
      CheckOpts co;
      co.samples = inner.kind == MetricKind::s ? opts.trace_samples : opts.samples;
      co.tolerance = inner.kind == MetricKind::s ? -1.0 : opts.tolerance;
      co.exec = Exec::serial;
      rep = check_inclusion(inner, outer, co);
    } catch (const std::exception& e) {
      rep.cells = 1;
      rep.error = e.what();
    }
    results[j] = std::move(rep);
  });

  for (std::size_t c = 0; c < claims.size(); ++c) {
    InclusionReport agg;
    agg.claim = claims[c].id;
    agg.statement = claims[c].statement;
    agg.iff = claims[c].iff;
    agg.sharp = claims[c].sharp;
    agg.exploratory = claims[c].exploratory;
    agg.grid_shape = claims[c].shape;
    agg.tolerance = 0.0;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (jobs[j].claim == c && results[j]) agg.merge(*results[j]);
    }
    if (agg.tolerance == 0.0) agg.tolerance = kExactTolerance;
    reports.push_back(std::move(agg));
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<std::pair<Complex, Complex>> pairs;
  pairs.reserve(static_cast<std::size_t>(opts.random_pairs));
  for (int i = 0; i < opts.random_pairs; ++i) {
    const Complex a = random_in_disk(rng);
    const Complex b = random_in_disk(rng);
    pairs.emplace_back(a, b);
  }
  for (const PairClaim& pc : pair_claims()) {
    InclusionReport rep = run_pair_claim(pc, pairs, opts.exec);
    rep.tolerance = opts.tolerance > 0.0 ? opts.tolerance : kExactTolerance;
    reports.push_back(std::move(rep));
  }

  for (InclusionReport& rep : witness_claims(opts.inflate, opts.exec)) {
    rep.tolerance = opts.tolerance > 0.0 ? opts.tolerance : kExactTolerance;
    reports.push_back(std::move(rep));
  }
  return reports;
}

bool suite_passes(const std::vector<InclusionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const InclusionReport& r) { return r.exploratory || r.pass(); });
}

bool suite_iff_all_fail(const std::vector<InclusionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const InclusionReport& r) { return !r.iff || !r.pass(); });
}

ConjectureReport verify_conjecture(const ConjectureOpts& opts) {
  if (opts.grid_n < 5) throw DomainError("conjecture grid needs at least 5 points per axis");
  ConjectureReport rep;
  rep.grid_n = opts.grid_n;
  rep.trace_n = opts.trace_n;
  rep.eps = opts.eps;

  const int n = opts.grid_n;
  auto lin = [n](double a, double b, int i) { return a + (b - a) * i / (n - 1); };
  TraceOpts to;
  to.samples = opts.trace_n;
  to.eps = opts.eps;
  to.exec = Exec::serial;

  auto measure_s_sphere = [&](double nx, double t) {
    ConjectureCell cell;
    cell.x_norm = nx;
    cell.radius = t;
    const Complex x = center_at(nx);
    if (nx > 0.0 && !(s_rho_l(t, nx) > 0.0)) {
      cell.skipped = true;
      return cell;
    }
    const Trace tr = trace_s_circle(x, t, to);
    cell.vertices = tr.vertices.size();
    cell.measured_min = kInf;
    cell.measured_max = -kInf;
    for (std::size_t i = 0; i < tr.vertices.size(); ++i) {
      const double r = rho_ball(x, tr.vertices[i]);
      cell.measured_min = std::min(cell.measured_min, r);
      cell.measured_max = std::max(cell.measured_max, r);
      cell.max_residual = std::max(cell.max_residual, tr.residuals[i]);
    }
    if (nx == 0.0) {
      cell.conjectured_inner = cell.conjectured_outer = s_rho_origin(t);
    } else {
      const InclusionBound b = conjecture_bounds(Point::from_complex(x), t, Given::metric);
      cell.conjectured_inner = b.inner;
      cell.conjectured_outer = b.outer;
    }
    cell.deviation = std::max(std::abs(cell.measured_min - cell.conjectured_inner),
                              std::abs(cell.measured_max - cell.conjectured_outer));
    return cell;
  };

  rep.s_cells.resize(static_cast<std::size_t>(n * n));
  rep.origin_cells.resize(static_cast<std::size_t>(n));
  for_each_index(opts.exec, rep.s_cells.size(), [&](std::size_t k) {
    const int i = static_cast<int>(k) / n;
    const int j = static_cast<int>(k) % n;
    rep.s_cells[k] = measure_s_sphere(lin(0.05, 0.95, i), lin(0.05, 0.95, j));
  });
  for_each_index(opts.exec, rep.origin_cells.size(), [&](std::size_t j) {
    rep.origin_cells[j] = measure_s_sphere(0.0, lin(0.05, 0.95, static_cast<int>(j)));
  });

  if (opts.rho_direction) {
    rep.rho_cells.resize(static_cast<std::size_t>(n * n));
    for_each_index(opts.exec, rep.rho_cells.size(), [&](std::size_t k) {
      const int i = static_cast<int>(k) / n;
      const int j = static_cast<int>(k) % n;
      ConjectureCell cell;
      cell.x_norm = lin(0.05, 0.95, i);
      cell.radius = lin(0.1, 4.0, j);
      const Complex x = center_at(cell.x_norm);
      CheckOpts co;
      co.samples = std::max(opts.trace_n, 100);
      const auto pts = sample_sphere(BallSpec{MetricKind::rho, x, cell.radius}, co);
      cell.vertices = pts.size();
      cell.measured_min = kInf;
      cell.measured_max = -kInf;
      for (Complex y : pts) {
        const double s = s_ball(x, y).value;
        cell.measured_min = std::min(cell.measured_min, s);
        cell.measured_max = std::max(cell.measured_max, s);
        cell.max_residual = std::max(cell.max_residual, std::abs(rho_ball(x, y) - cell.radius));
      }
      const InclusionBound b = conjecture_bounds(Point::from_complex(x), cell.radius, Given::rho);
      cell.conjectured_inner = b.inner;
      cell.conjectured_outer = b.outer;
      cell.deviation = std::max(std::abs(cell.measured_min - b.inner), std::abs(cell.measured_max - b.outer));
      rep.rho_cells[k] = cell;
    });
  }

  double sum = 0.0;
  int used = 0;
  for (const ConjectureCell& c : rep.s_cells) {
    if (c.skipped) {
      rep.skipped.emplace_back(c.x_norm, c.radius);
      continue;
    }
    rep.max_deviation = std::max(rep.max_deviation, c.deviation);
    sum += c.deviation;
    ++used;
  }
  rep.mean_deviation = used > 0 ? sum / used : 0.0;
  for (const ConjectureCell& c : rep.origin_cells) {
    rep.origin_max_deviation = std::max(rep.origin_max_deviation, c.deviation);
  }
  for (const ConjectureCell& c : rep.rho_cells) {
    rep.rho_max_deviation = std::max(rep.rho_max_deviation, c.deviation);
  }
  return rep;
}

}  // namespace trm
