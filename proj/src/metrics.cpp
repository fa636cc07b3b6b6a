#include "trm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "trm/errors.hpp"

namespace trm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGoldenWidth = 1e-10;
constexpr std::size_t kMaxBasins = 8;

void require_interior(Complex x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("point is not inside the open unit disk");
}

void require_interior(const Point& x) {
  if (x.on_boundary() || !(x.norm() < 1.0)) {
    throw DomainError("point is not inside the open unit ball");
  }
}

// |a - z| + |z - b| for z = (c, s) on the unit circle.
inline double boundary_sum(double a, Complex b, double c, double s) {
  const double dx = c - a;
  const double ex = c - b.real();
  const double ey = s - b.imag();
  return std::sqrt(dx * dx + s * s) + std::sqrt(ex * ex + ey * ey);
}

inline double boundary_sum(double a, Complex b, double theta) {
  return boundary_sum(a, b, std::cos(theta), std::sin(theta));
}

inline double signed_normal_angle(Complex p, Complex z) {
  const Complex w = p - z;
  const Complex normal = -z;
  const Complex tangent = Complex(0.0, 1.0) * z;
  const double along_t = w.real() * tangent.real() + w.imag() * tangent.imag();
  const double along_n = w.real() * normal.real() + w.imag() * normal.imag();
  return std::atan2(along_t, along_n);
}

double golden_section(double a, Complex b, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = boundary_sum(a, b, c);
  double fd = boundary_sum(a, b, d);
  while (hi - lo > kGoldenWidth) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = boundary_sum(a, b, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = boundary_sum(a, b, d);
    }
  }
  return 0.5 * (lo + hi);
}

struct Minimum {
  double theta = 0.0;
  double sum = 0.0;
  double residual = 0.0;
  bool converged = true;
};

// Minimizes |a - e^{i theta}| + |e^{i theta} - b| with a >= 0 real.
Minimum minimize_boundary_sum(double a, Complex b, const SolveOpts& opts) {
  const int n = opts.grid_count;
  const double step = kTwoPi / n;

  // Grid values; the unit roots come from a rotation recurrence re-synced
  // every 64 steps, which is plenty for picking brackets.
  std::vector<double> f(static_cast<std::size_t>(n));
  const Complex rot = std::polar(1.0, step);
  Complex w(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    if (i % 64 == 0) w = std::polar(1.0, i * step);
    f[static_cast<std::size_t>(i)] = boundary_sum(a, b, w.real(), w.imag());
    w *= rot;
  }

  std::vector<int> basins;
  for (int i = 0; i < n; ++i) {
    const double prev = f[static_cast<std::size_t>((i + n - 1) % n)];
    const double next = f[static_cast<std::size_t>((i + 1) % n)];
    const double here = f[static_cast<std::size_t>(i)];
    if (here <= prev && here <= next) basins.push_back(i);
  }
  if (basins.empty()) {
    basins.push_back(static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin()));
  }
  std::sort(basins.begin(), basins.end(), [&](int l, int r) {
    return f[static_cast<std::size_t>(l)] < f[static_cast<std::size_t>(r)];
  });
  if (basins.size() > kMaxBasins) basins.resize(kMaxBasins);

  double best_theta = 0.0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (int i : basins) {
    const double centre = i * step;
    const double theta = golden_section(a, b, centre - step, centre + step);
    const double sum = boundary_sum(a, b, theta);
    if (sum < best_sum) {
      best_sum = sum;
      best_theta = theta;
    }
  }

  const Complex ac(a, 0.0);
  auto residual = [&](double theta) {
    const Complex z = std::polar(1.0, theta);
    return signed_normal_angle(ac, z) + signed_normal_angle(b, z);
  };

  Minimum out{best_theta, best_sum, std::abs(residual(best_theta)), true};
  if (out.residual <= opts.refine_tol) return out;

  // Bracket a sign change of the residual around the golden-section minimum.
  const double g0 = residual(best_theta);
  double lo = 0.0;
  double hi = 0.0;
  double glo = 0.0;
  double ghi = 0.0;
  bool bracketed = false;
  for (double h = 1e-9; h <= 2.0 * step; h *= 8.0) {
    const double gm = residual(best_theta - h);
    const double gp = residual(best_theta + h);
    if ((gm < 0.0) != (g0 < 0.0)) {
      lo = best_theta - h;
      hi = best_theta;
      glo = gm;
      ghi = g0;
      bracketed = true;
      break;
    }
    if ((gp < 0.0) != (g0 < 0.0)) {
      lo = best_theta;
      hi = best_theta + h;
      glo = g0;
      ghi = gp;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    out.converged = false;
    return out;
  }

  std::uintmax_t iters = static_cast<std::uintmax_t>(opts.max_refine_iters);
  const double tol = opts.refine_tol;
  auto stop = [&](double l, double r) {
    return std::abs(r - l) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(l) ||
           std::abs(residual(0.5 * (l + r))) <= 0.25 * tol;
  };
  const auto [r_lo, r_hi] =
      boost::math::tools::toms748_solve(residual, lo, hi, glo, ghi, stop, iters);

  double theta = r_lo;
  double g = std::abs(residual(r_lo));
  for (double cand : {r_hi, 0.5 * (r_lo + r_hi)}) {
    const double gc = std::abs(residual(cand));
    if (gc < g) {
      g = gc;
      theta = cand;
    }
  }
  out.theta = theta;
  out.sum = boundary_sum(a, b, theta);
  out.residual = g;
  out.converged = g <= tol;
  return out;
}

// j, j* and rho depend only on |x|, |y| and |x - y|.
double j_from(double nx, double ny, double d) {
  return std::log1p(d / std::min(1.0 - nx, 1.0 - ny));
}

double jstar_from(double nx, double ny, double d) {
  return d / (d + 2.0 * std::min(1.0 - nx, 1.0 - ny));
}

double rho_from(double nx, double ny, double d) {
  const double denom = std::sqrt((1.0 - nx) * (1.0 + nx) * (1.0 - ny) * (1.0 + ny));
  return 2.0 * std::asinh(d / denom);
}

}  // namespace

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::s:
      return "s";
    case MetricKind::j:
      return "j";
    case MetricKind::jstar:
      return "jstar";
    case MetricKind::rho:
      return "rho";
    case MetricKind::euclidean:
      return "euclidean";
  }
  return "?";
}

std::optional<MetricKind> parse_metric(std::string_view name) {
  if (name == "s") return MetricKind::s;
  if (name == "j") return MetricKind::j;
  if (name == "jstar") return MetricKind::jstar;
  if (name == "rho") return MetricKind::rho;
  if (name == "euclidean") return MetricKind::euclidean;
  return std::nullopt;
}

void SolveOpts::validate() const {
  if (grid_count < 8) throw DomainError("grid_count must be at least 8");
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
  if (max_refine_iters < 1) throw DomainError("max_refine_iters must be positive");
}

void SValue::require_converged() const {
  if (!converged) {
    throw ConvergenceError("bisection residual " + std::to_string(bisection_residual) +
                           " above target");
  }
}

double bisection_residual(Complex x, Complex y, Complex z) {
  return signed_normal_angle(x, z) + signed_normal_angle(y, z);
}

PlanarSValue s_ball(Complex x, Complex y, const SolveOpts& opts) {
  opts.validate();
  require_interior(x);
  require_interior(y);
  const double nx = std::abs(x);
  const Complex dir = nx > 0.0 ? x / nx : Complex(1.0, 0.0);
  if (x == y) return {0.0, dir, 0.0, true};

  const Complex b = y * std::conj(dir);
  const Minimum m = minimize_boundary_sum(nx, b, opts);
  return {std::abs(x - y) / m.sum, std::polar(1.0, m.theta) * dir, m.residual, m.converged};
}

SValue s_ball(const Point& x, const Point& y, const SolveOpts& opts) {
  opts.validate();
  require_interior(x);
  require_interior(y);
  const PlaneFrame frame = plane_frame(x, y);
  const double d = distance(x.coords(), y.coords());
  if (d == 0.0) {
    return {0.0, Point::boundary(frame.e1), 0.0, true};
  }
  const Minimum m = minimize_boundary_sum(frame.pair.a, frame.pair.b, opts);
  std::vector<double> z = frame.lift(std::polar(1.0, m.theta));
  const double zn = norm(z);
  for (double& c : z) c /= zn;
  return {d / m.sum, Point::boundary(std::move(z)), m.residual, m.converged};
}

double s_collinear(const Point& x, const Point& y) {
  require_interior(x);
  require_interior(y);
  if (wedge_norm(x.coords(), y.coords()) > 1e-12) {
    throw NotCollinearError("points are not collinear with the origin");
  }
  return distance(x.coords(), y.coords()) / (2.0 - sum_norm(x.coords(), y.coords()));
}

double s_conjugate(Complex x) {
  require_interior(x);
  if (!(x.real() > 0.0 && x.imag() > 0.0)) {
    throw DomainError("conjugate formula needs Re(x) > 0 and Im(x) > 0");
  }
  if (std::abs(x - 0.5) > 0.5) return std::abs(x);
  return x.imag() / std::hypot(1.0 - x.real(), x.imag());
}

double s_conjugate(const Point& x) { return s_conjugate(x.to_complex()); }

double j_ball(const Point& x, const Point& y) {
  require_interior(x);
  require_interior(y);
  return j_from(x.norm(), y.norm(), distance(x.coords(), y.coords()));
}

double jstar_ball(const Point& x, const Point& y) {
  require_interior(x);
  require_interior(y);
  return jstar_from(x.norm(), y.norm(), distance(x.coords(), y.coords()));
}

double rho_ball(const Point& x, const Point& y) {
  require_interior(x);
  require_interior(y);
  return rho_from(x.norm(), y.norm(), distance(x.coords(), y.coords()));
}

double j_ball(Complex x, Complex y) {
  require_interior(x);
  require_interior(y);
  return j_from(std::abs(x), std::abs(y), std::abs(x - y));
}

double jstar_ball(Complex x, Complex y) {
  require_interior(x);
  require_interior(y);
  return jstar_from(std::abs(x), std::abs(y), std::abs(x - y));
}

double rho_ball(Complex x, Complex y) {
  require_interior(x);
  require_interior(y);
  return rho_from(std::abs(x), std::abs(y), std::abs(x - y));
}

double metric_distance(MetricKind kind, const Point& x, const Point& y, const SolveOpts& opts) {
  switch (kind) {
    case MetricKind::s:
      return s_ball(x, y, opts).value;
    case MetricKind::j:
      return j_ball(x, y);
    case MetricKind::jstar:
      return jstar_ball(x, y);
    case MetricKind::rho:
      return rho_ball(x, y);
    case MetricKind::euclidean:
      return distance(x.coords(), y.coords());
  }
  return 0.0;
}

double metric_distance(MetricKind kind, Complex x, Complex y, const SolveOpts& opts) {
  switch (kind) {
    case MetricKind::s:
      return s_ball(x, y, opts).value;
    case MetricKind::j:
      return j_ball(x, y);
    case MetricKind::jstar:
      return jstar_ball(x, y);
    case MetricKind::rho:
      return rho_ball(x, y);
    case MetricKind::euclidean:
      return std::abs(x - y);
  }
  return 0.0;
}

}  // namespace trm
