#include "trm/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trm/errors.hpp"

namespace trm {

namespace {

void require_same_dim(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw DomainError("dimension mismatch: " + std::to_string(u.size()) + " vs " +
                      std::to_string(v.size()));
  }
}

// Unit vector orthogonal to the unit vector e, built from the coordinate axis
// least aligned with e.
std::vector<double> orthogonal_unit(const std::vector<double>& e) {
  const std::size_t n = e.size();
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(e[i]) < std::abs(e[k])) k = i;
  }
  std::vector<double> w(n, 0.0);
  w[k] = 1.0;
  const double proj = e[k];
  for (std::size_t i = 0; i < n; ++i) w[i] -= proj * e[i];
  const double len = norm(w);
  for (double& c : w) c /= len;
  return w;
}

}  // namespace

Point Point::interior(std::vector<double> coords) {
  if (coords.size() < 2) throw DomainError("points need dimension n >= 2");
  for (double c : coords) {
    if (!std::isfinite(c)) throw DomainError("non-finite coordinate");
  }
  const double r = trm::norm(coords);
  if (!(r < 1.0)) {
    throw DomainError("point is not inside the open unit ball (norm " + std::to_string(r) +
                      ")");
  }
  return Point(std::move(coords), false);
}

Point Point::boundary(std::vector<double> coords) {
  if (coords.size() < 2) throw DomainError("points need dimension n >= 2");
  const double r = trm::norm(coords);
  if (!(std::abs(r - 1.0) <= kBoundaryTol)) {
    throw DomainError("point is not on the unit sphere (norm " + std::to_string(r) + ")");
  }
  return Point(std::move(coords), true);
}

double Point::norm() const { return trm::norm(coords_); }

Complex Point::to_complex() const {
  if (coords_.size() != 2) throw DomainError("complex view needs a planar point");
  return {coords_[0], coords_[1]};
}

double dot(std::span<const double> u, std::span<const double> v) {
  require_same_dim(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double norm(std::span<const double> u) {
  double s = 0.0;
  for (double c : u) s += c * c;
  return std::sqrt(s);
}

double distance(std::span<const double> u, std::span<const double> v) {
  require_same_dim(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double sum_norm(std::span<const double> u, std::span<const double> v) {
  require_same_dim(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] + v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double wedge_norm(std::span<const double> u, std::span<const double> v) {
  require_same_dim(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const double m = u[i] * v[j] - u[j] * v[i];
      s += m * m;
    }
  }
  return std::sqrt(s);
}

std::vector<double> PlaneFrame::lift(Complex w) const {
  std::vector<double> out(e1.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = w.real() * e1[i] + w.imag() * e2[i];
  return out;
}

PlaneFrame plane_frame(const Point& x, const Point& y) {
  if (x.on_boundary() || y.on_boundary()) {
    throw DomainError("planar reduction needs interior points");
  }
  require_same_dim(x.coords(), y.coords());
  const std::size_t n = x.dim();
  const double nx = x.norm();
  const double ny = y.norm();

  PlaneFrame frame;
  frame.e1.assign(n, 0.0);
  if (nx > 0.0) {
    for (std::size_t i = 0; i < n; ++i) frame.e1[i] = x[i] / nx;
    const double along = dot(y.coords(), frame.e1);
    const double across = wedge_norm(x.coords(), y.coords()) / nx;
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = y[i] - along * frame.e1[i];
    const double wn = norm(w);
    if (wn > 0.0 && across > 0.0) {
      for (double& c : w) c /= wn;
      frame.e2 = std::move(w);
    } else {
      frame.e2 = orthogonal_unit(frame.e1);
    }
    frame.pair = {nx, Complex(along, across)};
  } else {
    if (ny > 0.0) {
      for (std::size_t i = 0; i < n; ++i) frame.e1[i] = y[i] / ny;
    } else {
      frame.e1[0] = 1.0;
    }
    frame.e2 = orthogonal_unit(frame.e1);
    frame.pair = {0.0, Complex(ny, 0.0)};
  }
  return frame;
}

PlanarPair reduce_to_plane(const Point& x, const Point& y) { return plane_frame(x, y).pair; }

double angle_at(std::span<const double> vertex, std::span<const double> p,
                std::span<const double> q) {
  require_same_dim(vertex, p);
  require_same_dim(vertex, q);
  std::vector<double> u(vertex.size());
  std::vector<double> v(vertex.size());
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    u[i] = p[i] - vertex[i];
    v[i] = q[i] - vertex[i];
  }
  if (norm(u) < 1e-15 || norm(v) < 1e-15) {
    throw DegenerateError("angle requested at a vertex coinciding with an endpoint");
  }
  return std::atan2(wedge_norm(u, v), dot(u, v));
}

double angle_at(const Point& vertex, const Point& p, const Point& q) {
  return angle_at(vertex.coords(), p.coords(), q.coords());
}

double angle_at(Complex vertex, Complex p, Complex q) {
  const Complex u = p - vertex;
  const Complex v = q - vertex;
  if (std::abs(u) < 1e-15 || std::abs(v) < 1e-15) {
    throw DegenerateError("angle requested at a vertex coinciding with an endpoint");
  }
  const double cross = u.real() * v.imag() - u.imag() * v.real();
  const double inner = u.real() * v.real() + u.imag() * v.imag();
  return std::atan2(std::abs(cross), inner);
}

double positive_arg(Complex w) {
  double a = std::arg(w);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

}  // namespace trm
