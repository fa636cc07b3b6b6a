#include "trm/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "trm/errors.hpp"

namespace trm {

namespace {

constexpr double kPi = std::numbers::pi;

void require_radius(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError(std::string(what) + " must lie in (0, 1)");
  }
}

void require_disk(Complex x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("center is not inside the open unit disk");
}

Complex axis_direction(Complex x) {
  const double nx = std::abs(x);
  return nx > 0.0 ? x / nx : Complex(1.0, 0.0);
}

// n points of [lo, hi] with both endpoints.
void append_uniform(std::vector<double>& out, double lo, double hi, int n) {
  if (n == 1) {
    out.push_back(lo);
    return;
  }
  for (int i = 0; i < n; ++i) {
    out.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
  }
}

void sort_trace(Trace& trace) {
  const std::size_t n = trace.vertices.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> key(n);
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = positive_arg(trace.vertices[i] - trace.center);
    dist[i] = std::abs(trace.vertices[i] - trace.center);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (key[l] != key[r]) return key[l] < key[r];
    return dist[l] < dist[r];
  });
  std::vector<Complex> vertices(n);
  std::vector<double> residuals(n);
  for (std::size_t i = 0; i < n; ++i) {
    vertices[i] = trace.vertices[order[i]];
    residuals[i] = trace.residuals[order[i]];
  }
  trace.vertices = std::move(vertices);
  trace.residuals = std::move(residuals);
}

// Conjugate form of (b - q) / a = c / (b + q), used when a is small.
double stable_root(double a, double b, double q, double c) {
  if (std::abs(a) > 1e-3) return (b - q) / a;
  return c / (b + q);
}

}  // namespace

std::pair<double, double> excluded_cos_band(double x_norm, double t) {
  const double t2 = t * t;
  const double root = std::sqrt(std::max(0.0, (1.0 - t2) * (x_norm * x_norm - t2)));
  return {(t2 - root) / x_norm, (t2 + root) / x_norm};
}

CandidateSet candidate_points(Complex x, double t, double u) {
  require_disk(x);
  require_radius(t, "radius t");
  const double nx = std::abs(x);
  if (nx == 0.0) throw DomainError("candidate points need x != 0");
  if (!(u >= 0.0 && u <= kPi)) throw DomainError("u must lie in [0, pi]");

  CandidateSet out;
  out.u = u;
  out.z = axis_direction(x) * std::polar(1.0, u);
  const double cos_u = std::cos(u);
  const double dxz = std::sqrt(1.0 + nx * nx - 2.0 * nx * cos_u);
  const double cos_v = std::clamp((1.0 - nx * cos_u) / dxz, 0.0, 1.0);
  const double sin_v = std::clamp(nx * std::sin(u) / dxz, 0.0, 1.0);
  out.v = std::atan2(sin_v, cos_v);

  if (t < nx) {
    const auto [lo, hi] = excluded_cos_band(nx, t);
    if (lo < cos_u && cos_u < hi) {
      out.excluded = true;
      return out;
    }
  }

  double disc = t * t - sin_v * sin_v;
  if (disc < 0.0) {
    // Band endpoints can land a rounding error below zero.
    if (disc < -1e-13) return out;
    disc = 0.0;
  }
  const double cos_2v = cos_v * cos_v - sin_v * sin_v;
  const double spread = 2.0 * cos_v * std::sqrt(disc);
  const double scale = dxz / (1.0 - t * t);
  const Complex turn = std::polar(1.0, -out.v);
  const double hs[2] = {scale * (t * t + cos_2v - spread), scale * (t * t + cos_2v + spread)};
  for (int i = 0; i < 2; ++i) {
    const double h = hs[i];
    if (i == 1 && h == hs[0]) break;
    if (!(h > 0.0 && h < 2.0 * cos_v)) continue;
    const Complex y = out.z * (1.0 - h * turn);
    if (!(std::abs(y) < 1.0)) continue;
    out.points[static_cast<std::size_t>(out.count++)] = {y, h};
  }
  return out;
}

Trace trace_s_circle(Complex x, double t, const TraceOpts& opts) {
  require_disk(x);
  require_radius(t, "radius t");
  if (opts.samples < 2) throw DomainError("trace needs at least two samples");
  if (!(opts.eps > 0.0)) throw DomainError("trace tolerance must be positive");
  opts.solve.validate();

  Trace trace;
  trace.center = x;
  trace.metric = MetricKind::s;
  trace.radius = t;
  trace.eps = opts.eps;

  const double nx = std::abs(x);
  if (nx == 0.0) {
    const double r = 2.0 * t / (1.0 + t);
    const auto n = static_cast<std::size_t>(opts.samples);
    trace.vertices.resize(n);
    trace.residuals.resize(n);
    for_each_index(opts.exec, n, [&](std::size_t i) {
      const Complex y = std::polar(r, 2.0 * kPi * static_cast<double>(i) / opts.samples);
      trace.vertices[i] = y;
      trace.residuals[i] = std::abs(s_ball(x, y, opts.solve).value - t);
    });
    sort_trace(trace);
    return trace;
  }

  std::vector<double> us;
  us.reserve(static_cast<std::size_t>(opts.samples) + 2);
  if (t >= nx) {
    append_uniform(us, 0.0, kPi, opts.samples);
  } else {
    const auto [lo, hi] = excluded_cos_band(nx, t);
    const double first_end = std::acos(std::clamp(hi, -1.0, 1.0));
    const double second_start = std::acos(std::clamp(lo, -1.0, 1.0));
    const double len1 = first_end;
    const double len2 = kPi - second_start;
    int n1 = static_cast<int>(std::lround(opts.samples * len1 / (len1 + len2)));
    n1 = std::clamp(n1, 2, std::max(2, opts.samples - 2));
    const int n2 = std::max(2, opts.samples - n1);
    append_uniform(us, 0.0, first_end, n1);
    append_uniform(us, second_start, kPi, n2);
  }

  // Steps 4-5: two candidate slots per u, filtered by the metric itself.
  const std::size_t slots = 2 * us.size();
  std::vector<Complex> cand(slots);
  std::vector<double> resid(slots, -1.0);
  for_each_index(opts.exec, us.size(), [&](std::size_t i) {
    const CandidateSet set = candidate_points(x, t, us[i]);
    for (int c = 0; c < set.count; ++c) {
      const Complex y = set.points[static_cast<std::size_t>(c)].y;
      const double r = std::abs(s_ball(x, y, opts.solve).value - t);
      if (r <= opts.eps) {
        cand[2 * i + static_cast<std::size_t>(c)] = y;
        resid[2 * i + static_cast<std::size_t>(c)] = r;
      }
    }
  });
  for (std::size_t i = 0; i < slots; ++i) {
    if (resid[i] >= 0.0) {
      trace.vertices.push_back(cand[i]);
      trace.residuals.push_back(resid[i]);
    }
  }
  if (trace.vertices.empty()) {
    throw EmptyTraceError("no candidate passed the residual filter; loosen eps or raise N");
  }

  // Step 6: reflection over L(0, x). Points on the axis are their own mirror.
  const std::size_t survivors = trace.vertices.size();
  std::vector<Complex> mirrors(survivors);
  std::vector<double> mirror_resid(survivors, -1.0);
  for_each_index(opts.exec, survivors, [&](std::size_t i) {
    const Complex m = reflect_over_axis(x, trace.vertices[i]);
    if (std::abs(m - trace.vertices[i]) <= 1e-14) return;
    mirrors[i] = m;
    mirror_resid[i] = std::abs(s_ball(x, m, opts.solve).value - t);
  });
  for (std::size_t i = 0; i < survivors; ++i) {
    if (mirror_resid[i] >= 0.0) {
      trace.vertices.push_back(mirrors[i]);
      trace.residuals.push_back(mirror_resid[i]);
    }
  }

  sort_trace(trace);
  return trace;
}

std::pair<Complex, Complex> s_line_intersections(Complex x, double t) {
  require_disk(x);
  require_radius(t, "radius t");
  const double nx = std::abs(x);
  if (nx == 0.0) throw DomainError("the line L(0, x) is undefined for x = 0");
  const Complex dir = x / nx;
  const double outward = 2.0 * t * (1.0 - nx) / (1.0 + t);
  const double inward = 2.0 * t * std::min((1.0 - nx) / (1.0 - t), (1.0 + nx) / (1.0 + t));
  return {x + outward * dir, x - inward * dir};
}

std::pair<Point, Point> s_line_intersections(const Point& x, double t) {
  if (x.on_boundary()) throw DomainError("center must be an interior point");
  require_radius(t, "radius t");
  const double nx = x.norm();
  if (nx == 0.0) throw DomainError("the line L(0, x) is undefined for x = 0");
  const double outward = 1.0 + 2.0 * t * (1.0 - nx) / (nx * (1.0 + t));
  const double inward =
      1.0 - (2.0 * t / nx) * std::min((1.0 - nx) / (1.0 - t), (1.0 + nx) / (1.0 + t));
  std::vector<double> y0(x.dim());
  std::vector<double> y1(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    y0[i] = x[i] * outward;
    y1[i] = x[i] * inward;
  }
  return {Point::interior(std::move(y0)), Point::interior(std::move(y1))};
}

MidcircleIntersections s_midcircle_intersections(Complex x, double t) {
  require_disk(x);
  require_radius(t, "radius t");
  const double nx = std::abs(x);
  if (nx == 0.0) throw DomainError("midcircle intersections need x != 0");
  MidcircleIntersections out;
  if (t > nx) {
    out.contains_circle = true;
    return out;
  }
  const double t2 = t * t;
  out.c = (t2 + std::sqrt((1.0 - t2) * (nx * nx - t2))) / nx;
  const double c = out.c;
  const Complex w(2.0 * c * c - 1.0, 2.0 * c * std::sqrt(std::max(0.0, 1.0 - c * c)));
  out.points = {x * w, x * std::conj(w)};
  return out;
}

std::vector<double> upsilon_radii(double x_norm, double k, double cos_u) {
  const double nx = x_norm;
  const double q1 = (1.0 - k) * (1.0 - k);
  const double a = 3.0 * k * k + 2.0 * k - 1.0;
  const double b = 4.0 * k * k - q1 * nx * cos_u;
  const double c = 4.0 * k * k - q1 * nx * nx;
  const double sin2 = std::max(0.0, 1.0 - cos_u * cos_u);
  const double d = 4.0 * k * k * (1.0 + nx * nx - 2.0 * nx * cos_u) - q1 * nx * nx * sin2;

  std::vector<double> roots;
  auto keep = [&](double r) {
    if (r > 0.0 && r < 1.0) roots.push_back(r);
  };

  if (std::abs(k - 1.0 / 3.0) <= 1e-12) {
    keep((1.0 - nx * nx) / (2.0 * (1.0 - nx * cos_u)));
    return roots;
  }
  if (d < 0.0) return roots;
  const double q = (1.0 - k) * std::sqrt(d);
  const double l0 = stable_root(a, b, q, c);
  const double l1 = (b + q) / a;
  const double threshold = 2.0 * k / (1.0 - k);

  if (k < 1.0 / 3.0) {
    if (nx <= threshold) {
      keep(l0);
    } else {
      const double c1 = (4.0 * k * k + std::sqrt(a * c)) / (nx * q1);
      if (cos_u >= c1) {
        keep(l0);
        keep(l1);
      }
    }
  } else {
    const double c0 = (4.0 * k * k - std::sqrt(a * c)) / (nx * q1);
    if (cos_u <= c0) keep(l0);
  }
  return roots;
}

Trace trace_jstar_circle(Complex x, double k, int samples) {
  require_disk(x);
  require_radius(k, "radius k");
  if (samples < 4) throw DomainError("trace needs at least four samples");

  Trace trace;
  trace.center = x;
  trace.metric = MetricKind::jstar;
  trace.radius = k;
  const double nx = std::abs(x);

  auto add = [&](Complex y) {
    trace.vertices.push_back(y);
    trace.residuals.push_back(std::abs(jstar_ball(x, y) - k));
  };

  if (nx == 0.0) {
    const double r = 2.0 * k / (1.0 + k);
    for (int i = 0; i < samples; ++i) add(std::polar(r, 2.0 * kPi * i / samples));
  } else {
    const Complex dir = x / nx;
    const double r = 2.0 * k * (1.0 - nx) / (1.0 - k);
    // Arc of S(x, r) inside the closed disk |y| <= |x|.
    for (int i = 0; i < samples; ++i) {
      const Complex y = x + std::polar(r, 2.0 * kPi * i / samples);
      if (std::abs(y) <= nx) add(y);
    }
    const double seam_cos = 1.0 - r * r / (2.0 * nx * nx);
    if (seam_cos >= -1.0 && seam_cos <= 1.0) {
      const double u = std::acos(seam_cos);
      add(x * std::polar(1.0, u));
      if (u > 0.0 && u < kPi) add(x * std::polar(1.0, -u));
    }
    // One-sided branch outside the disk, parametrised by u = angle(x, 0, y).
    for (int i = 0; i < samples; ++i) {
      const double u = (i == samples - 1) ? kPi : kPi * i / (samples - 1);
      for (double radius : upsilon_radii(nx, k, std::cos(u))) {
        if (!(radius > nx)) continue;
        add(radius * dir * std::polar(1.0, u));
        if (u > 0.0 && u < kPi) add(radius * dir * std::polar(1.0, -u));
      }
    }
  }
  trace.eps = *std::max_element(trace.residuals.begin(), trace.residuals.end());
  sort_trace(trace);
  return trace;
}

std::vector<Complex> trace_upsilon_circle(Complex x, double k, int samples) {
  require_disk(x);
  require_radius(k, "radius k");
  const double nx = std::abs(x);
  if (nx == 0.0) throw DomainError("the one-sided level set needs x != 0");
  const Complex dir = x / nx;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (int i = 0; i < samples; ++i) {
    const double u = (i == samples - 1) ? kPi : kPi * i / (samples - 1);
    for (double radius : upsilon_radii(nx, k, std::cos(u))) {
      upper.push_back(radius * dir * std::polar(1.0, u));
      lower.push_back(radius * dir * std::polar(1.0, -u));
    }
  }
  std::vector<Complex> out = upper;
  out.insert(out.end(), lower.rbegin(), lower.rend());
  std::stable_sort(out.begin(), out.end(), [&](Complex l, Complex r) {
    return positive_arg(l - x) < positive_arg(r - x);
  });
  return out;
}

EuclideanBall rho_ball_euclidean(const Point& x, double R) {
  if (x.on_boundary()) throw DomainError("center must be an interior point");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("hyperbolic radius must be positive");
  const double k = std::tanh(R / 2.0);
  const double n2 = x.norm() * x.norm();
  const double denom = 1.0 - n2 * k * k;
  EuclideanBall ball;
  ball.center.resize(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) ball.center[i] = x[i] * (1.0 - k * k) / denom;
  ball.radius = (1.0 - n2) * k / denom;
  return ball;
}

Trace trace_rho_circle(Complex x, double R, int samples) {
  require_disk(x);
  if (samples < 3) throw DomainError("trace needs at least three samples");
  const EuclideanBall ball = rho_ball_euclidean(Point::from_complex(x), R);
  const Complex c(ball.center[0], ball.center[1]);
  Trace trace;
  trace.center = x;
  trace.metric = MetricKind::rho;
  trace.radius = R;
  for (int i = 0; i < samples; ++i) {
    const Complex y = c + std::polar(ball.radius, 2.0 * kPi * i / samples);
    trace.vertices.push_back(y);
    trace.residuals.push_back(std::abs(rho_ball(x, y) - R));
  }
  trace.eps = *std::max_element(trace.residuals.begin(), trace.residuals.end());
  sort_trace(trace);
  return trace;
}

Trace trace_euclidean_circle(Complex center, double r, int samples) {
  if (!(r > 0.0)) throw DomainError("Euclidean radius must be positive");
  if (samples < 3) throw DomainError("trace needs at least three samples");
  Trace trace;
  trace.center = center;
  trace.metric = MetricKind::euclidean;
  trace.radius = r;
  for (int i = 0; i < samples; ++i) {
    const Complex y = center + std::polar(r, 2.0 * kPi * i / samples);
    trace.vertices.push_back(y);
    trace.residuals.push_back(std::abs(std::abs(y - center) - r));
  }
  trace.eps = *std::max_element(trace.residuals.begin(), trace.residuals.end());
  return trace;
}

std::pair<Complex, Complex> axis_points(const Trace& trace) {
  const Complex x = trace.center;
  const Complex dir = axis_direction(x);
  const double nx = std::abs(x);
  switch (trace.metric) {
    case MetricKind::s: {
      if (nx == 0.0) {
        const double r = 2.0 * trace.radius / (1.0 + trace.radius);
        return {r * dir, -r * dir};
      }
      return s_line_intersections(x, trace.radius);
    }
    case MetricKind::jstar: {
      const double k = trace.radius;
      const double r0 = 2.0 * k * (1.0 - nx) / (1.0 + k);
      const double r1 = std::min(2.0 * k * (1.0 - nx) / (1.0 - k), 2.0 * k * (1.0 + nx) / (1.0 + k));
      return {x + r0 * dir, x - r1 * dir};
    }
    case MetricKind::rho: {
      const EuclideanBall ball = rho_ball_euclidean(Point::from_complex(x), trace.radius);
      const Complex c(ball.center[0], ball.center[1]);
      return {c + ball.radius * dir, c - ball.radius * dir};
    }
    case MetricKind::euclidean:
      return {x + trace.radius * dir, x - trace.radius * dir};
    case MetricKind::j:
      break;
  }
  throw DomainError("axis points are not available for this trace");
}

Mesh revolve_3d(const Trace& trace, int steps, std::optional<std::array<double, 3>> axis) {
  if (steps < 3) throw DomainError("revolution needs at least three steps");
  const Complex dir = axis_direction(trace.center);
  const double nx = std::abs(trace.center);

  // Upper half of the profile in the frame where the axis is the real line.
  std::vector<Complex> profile;
  for (Complex v : trace.vertices) {
    const Complex w = v * std::conj(dir);
    if (w.imag() > 1e-12) profile.push_back(w);
  }
  if (profile.empty()) throw DomainError("trace has no vertex off the rotation axis");
  std::stable_sort(profile.begin(), profile.end(), [&](Complex l, Complex r) {
    return std::arg(l - nx) < std::arg(r - nx);
  });
  const auto [outer, inner] = axis_points(trace);
  const double pole0 = (outer * std::conj(dir)).real();
  const double pole1 = (inner * std::conj(dir)).real();

  std::array<double, 3> e{};
  std::array<double, 3> n{};
  std::array<double, 3> b{};
  if (axis) {
    const double len = std::sqrt((*axis)[0] * (*axis)[0] + (*axis)[1] * (*axis)[1] +
                                 (*axis)[2] * (*axis)[2]);
    if (!(len > 0.0)) throw DomainError("rotation axis must be non-zero");
    for (std::size_t i = 0; i < 3; ++i) e[i] = (*axis)[i] / len;
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(e[i]) < std::abs(e[k])) k = i;
    }
    std::array<double, 3> w{};
    w[k] = 1.0;
    const double proj = e[k];
    for (std::size_t i = 0; i < 3; ++i) w[i] -= proj * e[i];
    const double wl = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
    for (std::size_t i = 0; i < 3; ++i) n[i] = w[i] / wl;
    b = {e[1] * n[2] - e[2] * n[1], e[2] * n[0] - e[0] * n[2], e[0] * n[1] - e[1] * n[0]};
  } else {
    e = {dir.real(), dir.imag(), 0.0};
    n = {-dir.imag(), dir.real(), 0.0};
    b = {0.0, 0.0, 1.0};
  }

  Mesh mesh;
  const int rings = static_cast<int>(profile.size());
  mesh.vertices.reserve(static_cast<std::size_t>(rings * steps + 2));
  mesh.vertices.push_back({pole0 * e[0], pole0 * e[1], pole0 * e[2]});
  for (const Complex w : profile) {
    for (int m = 0; m < steps; ++m) {
      const double phi = 2.0 * kPi * m / steps;
      const double cp = std::cos(phi);
      const double sp = std::sin(phi);
      std::array<double, 3> p{};
      for (std::size_t i = 0; i < 3; ++i) {
        p[i] = w.real() * e[i] + w.imag() * (cp * n[i] + sp * b[i]);
      }
      mesh.vertices.push_back(p);
    }
  }
  mesh.vertices.push_back({pole1 * e[0], pole1 * e[1], pole1 * e[2]});

  const int last = rings * steps + 1;
  auto ring = [&](int j, int m) { return 1 + j * steps + (m % steps); };
  for (int m = 0; m < steps; ++m) mesh.faces.push_back({0, ring(0, m), ring(0, m + 1)});
  for (int j = 0; j + 1 < rings; ++j) {
    for (int m = 0; m < steps; ++m) {
      mesh.faces.push_back({ring(j, m), ring(j + 1, m), ring(j + 1, m + 1)});
      mesh.faces.push_back({ring(j, m), ring(j + 1, m + 1), ring(j, m + 1)});
    }
  }
  for (int m = 0; m < steps; ++m) {
    mesh.faces.push_back({last, ring(rings - 1, m + 1), ring(rings - 1, m)});
  }
  return mesh;
}

}  // namespace trm
