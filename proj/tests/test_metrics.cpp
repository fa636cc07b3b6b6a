#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "trm/errors.hpp"
#include "trm/metrics.hpp"

using namespace trm;

// 40-digit reference values: golden-section minimisation of |x-z|+|z-y| over
// the circle in arbitrary precision.
TEST_CASE("s matches high precision reference values") {
  struct Case {
    std::vector<double> x, y;
    double s;
  };
  const Case cases[] = {
      {{0.5, 0.1}, {-0.2, 0.6}, 0.58291606879794409},
      {{0.7, -0.2}, {0.1, 0.85}, 0.8381924721869266},
      {{0.1, 0.2, 0.3}, {-0.4, 0.1, 0.5}, 0.46610778074718227},
      {{0.9, 0.0}, {0.0, 0.9}, 0.9},
      {{0.3, 0.4}, {0.3, -0.4}, 0.49613893835683384},
  };
  for (const Case& c : cases) {
    const SValue v = s_ball(Point::interior(c.x), Point::interior(c.y));
    CHECK(v.converged);
    CHECK(std::abs(v.value - c.s) <= 1e-12);
  }
}

TEST_CASE("s examples") {
  CHECK(s_ball(Complex(0.6, 0), Complex(-0.2, 0)).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s_ball(Complex(0.4, 0.2), Complex(0.4, 0.2)).value == 0.0);
  const SValue o = s_ball(Point::interior({0.0, 0.0}), Point::interior({0.5, 0.0}));
  CHECK(std::abs(o.value - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("s argmin lies on the boundary and bisects the angle") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Point x = test::random_ball(rng, 3);
    const Point y = test::random_ball(rng, 3);
    const SValue v = s_ball(x, y);
    REQUIRE(v.converged);
    CHECK(v.argmin_z.on_boundary());
    CHECK(std::abs(v.bisection_residual) <= 1e-12);
    const double d = distance(x.coords(), y.coords());
    const double sum = distance(x.coords(), v.argmin_z.coords()) + distance(v.argmin_z.coords(), y.coords());
    CHECK(std::abs(v.value - d / sum) <= 1e-14);
  }
}

TEST_CASE("s is symmetric, bounded and rotation invariant") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Complex x = test::random_disk(rng);
    const Complex y = test::random_disk(rng);
    const double s = s_ball(x, y).value;
    CHECK(s >= 0.0);
    CHECK(s < 1.0);
    CHECK(std::abs(s - s_ball(y, x).value) <= 1e-12);
    const Complex rot = std::polar(1.0, 1.234);
    CHECK(std::abs(s - s_ball(rot * x, rot * y).value) <= 1e-12);
    CHECK(std::abs(s - s_ball(std::conj(x), std::conj(y)).value) <= 1e-12);
  }
}

TEST_CASE("s agrees with the collinear and conjugate closed forms") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-0.97, 0.97);
  std::uniform_real_distribution<double> a(0.02, 0.97);
  for (int i = 0; i < 300; ++i) {
    const double th = 0.37 * i;
    const double p = u(rng);
    const double q = u(rng);
    const Point x = Point::interior({p * std::cos(th), p * std::sin(th)});
    const Point y = Point::interior({q * std::cos(th), q * std::sin(th)});
    CHECK(std::abs(s_ball(x, y).value - s_collinear(x, y)) <= 1e-9);

    const double r = a(rng);
    const Complex c = std::polar(r, a(rng) * std::numbers::pi / 2.0 / 0.97);
    if (c.real() > 0.0 && c.imag() > 0.0) {
      CHECK(std::abs(s_ball(c, std::conj(c)).value - s_conjugate(c)) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(s_collinear(Point::interior({0.1, 0.2}), Point::interior({0.3, -0.2})), NotCollinearError);
}

TEST_CASE("s from the origin is |y|/(2-|y|)") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const Complex y = test::random_disk(rng);
    const double r = std::abs(y);
    CHECK(std::abs(s_ball(Complex(0.0, 0.0), y).value - r / (2.0 - r)) <= 1e-12);
  }
}

TEST_CASE("s works in higher dimensions") {
  const Point x = Point::interior({0.1, 0.2, 0.3, 0.1});
  const Point y = Point::interior({-0.3, 0.1, 0.2, -0.4});
  const PlanarPair p = reduce_to_plane(x, y);
  CHECK(std::abs(s_ball(x, y).value - s_ball(Complex(p.a, 0.0), p.b).value) <= 1e-13);
}

TEST_CASE("closed form metrics") {
  const Point o = Point::interior({0.0, 0.0});
  const Point h = Point::interior({0.5, 0.0});
  CHECK(rho_ball(o, h) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(jstar_ball(o, h) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(j_ball(o, h) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(metric_distance(MetricKind::euclidean, o, h) == 0.5);
  CHECK(metric_distance(MetricKind::rho, Complex(0, 0), Complex(0.5, 0)) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("j* is th(j/2) and sits between s/2 and s") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 300; ++i) {
    const Complex x = test::random_disk(rng);
    const Complex y = test::random_disk(rng);
    const double js = jstar_ball(x, y);
    CHECK(std::abs(js - std::tanh(j_ball(x, y) / 2.0)) <= 1e-14);
    const double s = s_ball(x, y).value;
    CHECK(js <= s + 1e-12);
    CHECK(s <= std::numbers::sqrt2 * js + 1e-12);
    CHECK(s <= 2.0 * js + 1e-12);
  }
}

TEST_CASE("s is bounded above by j*/(1-j*) and not below") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 300; ++i) {
    const Complex x = test::random_disk(rng);
    const Complex y = test::random_disk(rng);
    const double js = jstar_ball(x, y);
    CHECK(s_ball(x, y).value <= js / (1.0 - js) + 1e-12);
  }
  // From the origin s = 1/3 while j*/(1-j*) = 1/2.
  const double s = s_ball(Complex(0, 0), Complex(0.5, 0)).value;
  const double js = jstar_ball(Complex(0, 0), Complex(0.5, 0));
  CHECK(s < js / (1.0 - js) - 0.1);
}

TEST_CASE("rho is the hyperbolic distance") {
  // Mobius invariance: rho(x, y) = 2 artanh |(x - y)/(1 - conj(x) y)|.
  std::mt19937_64 rng(27);
  for (int i = 0; i < 200; ++i) {
    const Complex x = test::random_disk(rng);
    const Complex y = test::random_disk(rng);
    const double ref = 2.0 * std::atanh(std::abs((x - y) / (1.0 - std::conj(x) * y)));
    CHECK(rho_ball(x, y) == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("solver options are validated") {
  SolveOpts bad;
  bad.grid_count = 4;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = SolveOpts{};
  bad.refine_tol = 0.0;
  CHECK_THROWS_AS(s_ball(Complex(0.1, 0), Complex(0.2, 0.1), bad), DomainError);
}

TEST_CASE("non-convergence is reported, not thrown") {
  SolveOpts o;
  o.grid_count = 8;
  o.max_refine_iters = 1;
  o.refine_tol = 1e-300;
  const SValue v = s_ball(Point::interior({0.9, 0.0}), Point::interior({-0.3, 0.8}), o);
  CHECK_FALSE(v.converged);
  CHECK_THROWS_AS(v.require_converged(), ConvergenceError);
}

TEST_CASE("metric names round trip") {
  for (MetricKind k : {MetricKind::s, MetricKind::j, MetricKind::jstar, MetricKind::rho, MetricKind::euclidean}) {
    CHECK(parse_metric(to_string(k)) == k);
  }
  CHECK_FALSE(parse_metric("hyperbolic").has_value());
}

TEST_CASE("points outside the ball are rejected") {
  CHECK_THROWS_AS(s_ball(Complex(1.0, 0.0), Complex(0.2, 0.0)), DomainError);
  CHECK_THROWS_AS(rho_ball(Complex(0.0, 1.0), Complex(0.2, 0.0)), DomainError);
}
