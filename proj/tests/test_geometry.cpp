#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "trm/errors.hpp"
#include "trm/geometry.hpp"

using namespace trm;

TEST_CASE("interior points reject the boundary and low dimensions") {
  CHECK_NOTHROW(Point::interior({0.3, 0.4}));
  CHECK_THROWS_AS(Point::interior({0.6, 0.8}), DomainError);
  CHECK_THROWS_AS(Point::interior({1.2, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(Point::interior({0.5}), DomainError);
  CHECK_THROWS_AS(Point::interior({NAN, 0.0}), DomainError);
}

TEST_CASE("boundary points are accepted within the norm tolerance") {
  const Point z = Point::boundary({0.6, 0.8});
  CHECK(z.on_boundary());
  CHECK(z.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_NOTHROW(Point::boundary({1.0 + 5e-13, 0.0}));
  CHECK_THROWS_AS(Point::boundary({0.9, 0.0}), DomainError);
}

TEST_CASE("point accessors") {
  const Point p = Point::interior({0.1, -0.2, 0.3});
  CHECK(p.dim() == 3);
  CHECK(p[1] == -0.2);
  CHECK(p.norm() == doctest::Approx(std::sqrt(0.14)).epsilon(1e-15));
  const Point c = Point::from_complex(Complex(0.3, -0.4));
  CHECK(c.to_complex() == Complex(0.3, -0.4));
}

TEST_CASE("planar reduction preserves norms and the distance") {
  std::mt19937_64 rng(7);
  for (std::size_t dim : {2u, 3u, 5u}) {
    for (int i = 0; i < 200; ++i) {
      const Point x = test::random_ball(rng, dim);
      const Point y = test::random_ball(rng, dim);
      const PlanarPair p = reduce_to_plane(x, y);
      CHECK(p.a >= 0.0);
      CHECK(p.b.imag() >= 0.0);
      CHECK(std::abs(p.a - x.norm()) <= 1e-15);
      CHECK(std::abs(std::abs(p.b) - y.norm()) <= 1e-15);
      CHECK(std::abs(std::abs(p.a - p.b) - distance(x.coords(), y.coords())) <= 1e-14);
    }
  }
}

TEST_CASE("plane frames lift planar coordinates back") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Point x = test::random_ball(rng, 4);
    const Point y = test::random_ball(rng, 4);
    const PlaneFrame f = plane_frame(x, y);
    CHECK(std::abs(dot(f.e1, f.e2)) <= 1e-14);
    CHECK(std::abs(norm(f.e1) - 1.0) <= 1e-14);
    CHECK(std::abs(norm(f.e2) - 1.0) <= 1e-14);
    CHECK(distance(f.lift(Complex(f.pair.a, 0.0)), x.coords()) <= 1e-14);
    CHECK(distance(f.lift(f.pair.b), y.coords()) <= 1e-14);
  }
}

TEST_CASE("planar reduction of collinear and coincident pairs") {
  const PlanarPair p = reduce_to_plane(Point::interior({0.0, 0.0, 0.5}), Point::interior({0.0, 0.0, -0.2}));
  CHECK(p.a == doctest::Approx(0.5));
  CHECK(p.b.real() == doctest::Approx(-0.2));
  CHECK(std::abs(p.b.imag()) <= 1e-15);
  const PlanarPair q = reduce_to_plane(Point::interior({0.0, 0.0}), Point::interior({0.0, 0.3}));
  CHECK(q.a == 0.0);
  CHECK(std::abs(q.b) == doctest::Approx(0.3));
}

TEST_CASE("angles keep relative precision near zero") {
  CHECK(angle_at(Complex(0, 0), Complex(1, 0), Complex(0, 1)) == doctest::Approx(std::numbers::pi / 2));
  const double tiny = angle_at(Complex(0, 0), Complex(1, 0), Complex(1, 1e-13));
  CHECK(std::abs(tiny - 1e-13) <= 1e-20);
  CHECK(angle_at(Complex(0, 0), Complex(1, 0), Complex(-1, 1e-300)) == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(angle_at(Complex(0.2, 0), Complex(0.2, 0), Complex(1, 0)), DegenerateError);
  const Point v = Point::interior({0.0, 0.0, 0.0});
  CHECK(angle_at(v, Point::interior({0.5, 0, 0}), Point::interior({0, 0, 0.5})) ==
        doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("wedge norm equals |u||v| sin of the angle") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Point u = test::random_ball(rng, 3);
    const Point v = test::random_ball(rng, 3);
    const double a = angle_at(std::vector<double>(3, 0.0), u.coords(), v.coords());
    CHECK(wedge_norm(u.coords(), v.coords()) ==
          doctest::Approx(u.norm() * v.norm() * std::sin(a)).epsilon(1e-10));
  }
  const std::vector<double> e{0.3, 0.4};
  const std::vector<double> f{0.6, 0.8};
  CHECK(wedge_norm(e, f) == 0.0);
  CHECK(sum_norm(e, f) == doctest::Approx(1.5));
}

TEST_CASE("reflection over the axis is an isometry fixing x") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Complex x = test::random_disk(rng);
    const Complex y = test::random_disk(rng);
    const Complex r = reflect_over_axis(x, y);
    CHECK(std::abs(std::abs(r) - std::abs(y)) <= 1e-15);
    CHECK(std::abs(std::abs(r - x) - std::abs(y - x)) <= 1e-14);
    CHECK(std::abs(reflect_over_axis(x, r) - y) <= 1e-14);
    CHECK(std::abs(reflect_over_axis(x, 0.5 * x) - 0.5 * x) <= 1e-15);
  }
}

TEST_CASE("positive argument lies in [0, 2pi)") {
  CHECK(positive_arg(Complex(1, 0)) == 0.0);
  CHECK(positive_arg(Complex(0, -1)) == doctest::Approx(1.5 * std::numbers::pi));
  CHECK(positive_arg(Complex(-1, -1e-300)) < 2.0 * std::numbers::pi);
}
