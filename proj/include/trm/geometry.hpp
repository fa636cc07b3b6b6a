#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace trm {

using Complex = std::complex<double>;

/// Norm tolerance used to accept a point as lying on the unit sphere.
inline constexpr double kBoundaryTol = 1e-12;

/// A point of the closed unit ball in R^n, n >= 2.
///
/// Interior points have norm strictly below one. Boundary points (the
/// optimal reflection point of the triangular ratio metric, for example)
/// share the representation and carry `on_boundary() == true`.
class Point {
 public:
  /// Throws DomainError unless n >= 2 and |coords| < 1.
  static Point interior(std::vector<double> coords);
  static Point interior(std::initializer_list<double> coords) {
    return interior(std::vector<double>(coords));
  }
  /// Throws DomainError unless n >= 2 and ||coords| - 1| <= kBoundaryTol.
  static Point boundary(std::vector<double> coords);
  static Point from_complex(Complex c) { return interior({c.real(), c.imag()}); }

  std::span<const double> coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double norm() const;
  bool on_boundary() const { return boundary_; }
  /// Requires dim() == 2.
  Complex to_complex() const;

 private:
  Point(std::vector<double> coords, bool boundary)
      : coords_(std::move(coords)), boundary_(boundary) {}

  std::vector<double> coords_;
  bool boundary_ = false;
};

double dot(std::span<const double> u, std::span<const double> v);
double norm(std::span<const double> u);
double distance(std::span<const double> u, std::span<const double> v);
/// |u + v|
double sum_norm(std::span<const double> u, std::span<const double> v);
/// Norm of the wedge product u ^ v, i.e. |u||v| sin(angle), evaluated from
/// the pairwise 2x2 minors so it stays accurate for nearly parallel vectors.
double wedge_norm(std::span<const double> u, std::span<const double> v);

/// (|x|, y rotated so that x lands on the non-negative real axis).
/// The imaginary part of b is non-negative.
struct PlanarPair {
  double a = 0.0;
  Complex b;
};

/// Orthonormal frame of a 2-plane through the origin containing x and y,
/// together with the planar coordinates of the pair in that frame.
struct PlaneFrame {
  PlanarPair pair;
  std::vector<double> e1;
  std::vector<double> e2;

  /// Maps a planar coordinate back into R^n.
  std::vector<double> lift(Complex w) const;
};

/// Rotates (x, y) into the complex plane, preserving |x|, |y| and |x - y|.
/// Throws DomainError if either point is outside the open unit ball.
PlanarPair reduce_to_plane(const Point& x, const Point& y);
PlaneFrame plane_frame(const Point& x, const Point& y);

/// Angle in [0, pi] between p - vertex and q - vertex.
/// Throws DegenerateError if either vector is shorter than 1e-15.
double angle_at(std::span<const double> vertex, std::span<const double> p,
                std::span<const double> q);
double angle_at(const Point& vertex, const Point& p, const Point& q);
double angle_at(Complex vertex, Complex p, Complex q);

/// Reflection of y over the line through the origin and x (x != 0).
inline Complex reflect_over_axis(Complex x, Complex y) {
  return x * std::conj(y) / std::conj(x);
}

/// Argument of w mapped into [0, 2pi).
double positive_arg(Complex w);

}  // namespace trm
