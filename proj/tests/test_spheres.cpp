#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "support.hpp"
#include "trm/errors.hpp"
#include "trm/metrics.hpp"
#include "trm/spheres.hpp"

using namespace trm;

namespace {

constexpr double kPi = std::numbers::pi;

TraceOpts quick(int n) {
  TraceOpts o;
  o.samples = n;
  return o;
}

}  // namespace

TEST_CASE("origin-centred s-circle is a regular polygon of radius 2t/(1+t)") {
  const Trace tr = trace_s_circle(Complex(0, 0), 0.5, quick(8));
  REQUIRE(tr.vertices.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::abs(std::abs(tr.vertices[i]) - 2.0 / 3.0) <= 1e-15);
    CHECK(std::abs(std::abs(tr.vertices[(i + 1) % 8] - tr.vertices[i]) - 2.0 * (2.0 / 3.0) * std::sin(kPi / 8)) <=
          1e-14);
  }
}

TEST_CASE("axis intersections of the s-circle") {
  const auto [y0, y1] = s_line_intersections(Complex(0.6, 0), 0.5);
  CHECK(y0.real() == doctest::Approx(0.8666666666666667).epsilon(1e-14));
  CHECK(y1.real() == doctest::Approx(-0.2).epsilon(1e-14));
  CHECK(std::abs(s_ball(Complex(0.6, 0), y0).value - 0.5) <= 1e-9);
  CHECK(std::abs(s_ball(Complex(0.6, 0), y1).value - 0.5) <= 1e-9);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.02, 0.97);
  for (int i = 0; i < 200; ++i) {
    const Complex x = test::random_disk(rng, 0.97);
    const double t = u(rng);
    const auto [a, b] = s_line_intersections(x, t);
    CHECK(std::abs(s_ball(x, a).value - t) <= 1e-9);
    CHECK(std::abs(s_ball(x, b).value - t) <= 1e-9);
    // Both on the line through 0 and x, on opposite sides of x.
    CHECK(std::abs(std::imag((a - x) * std::conj(x))) <= 1e-14);
    CHECK(std::real((a - x) * std::conj(b - x)) < 0.0);
  }
  const auto [p0, p1] = s_line_intersections(Point::interior({0.0, 0.0, 0.6}), 0.5);
  CHECK(p0[2] == doctest::Approx(0.8666666666666667));
  CHECK(p1[2] == doctest::Approx(-0.2));
  CHECK_THROWS_AS(s_line_intersections(Complex(0, 0), 0.5), DomainError);
}

TEST_CASE("midcircle intersections") {
  const MidcircleIntersections m = s_midcircle_intersections(Complex(0.6, 0), 0.5);
  CHECK(m.c == doctest::Approx(0.895380).epsilon(1e-6));
  REQUIRE(m.points.size() == 2);
  for (Complex y : m.points) {
    CHECK(std::abs(std::abs(y) - 0.6) <= 1e-15);
    CHECK(std::abs(s_ball(Complex(0.6, 0), y).value - 0.5) <= 1e-9);
  }
  const MidcircleIntersections in = s_midcircle_intersections(Complex(0.4, 0), 0.5);
  CHECK(in.contains_circle);
  CHECK(in.points.empty());
  // At t = |x| the two band endpoints meet but the points stay distinct.
  const MidcircleIntersections tie = s_midcircle_intersections(Complex(0.0, 0.5), 0.5);
  REQUIRE(tie.points.size() == 2);
  CHECK(std::abs(tie.points[0] - tie.points[1]) > 0.1);
  for (Complex y : tie.points) CHECK(std::abs(s_ball(Complex(0.0, 0.5), y).value - 0.5) <= 1e-9);
}

TEST_CASE("candidate points satisfy the ratio and the bisection condition") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    const Complex x = test::random_disk(rng, 0.95);
    const double t = 0.05 + 0.9 * u01(rng);
    const double u = kPi * u01(rng);
    const CandidateSet cs = candidate_points(x, t, u);
    CHECK(std::abs(std::abs(cs.z) - 1.0) <= 1e-15);
    if (t < std::abs(x)) {
      const auto [lo, hi] = excluded_cos_band(std::abs(x), t);
      CHECK(cs.excluded == (std::cos(u) > lo && std::cos(u) < hi));
    } else {
      CHECK_FALSE(cs.excluded);
    }
    for (const auto& c : cs.candidates()) {
      ++found;
      CHECK(c.h > 0.0);
      const double ratio = std::abs(x - c.y) / (std::abs(x - cs.z) + std::abs(cs.z - c.y));
      CHECK(std::abs(ratio - t) <= 1e-12);
      CHECK(std::abs(bisection_residual(x, c.y, cs.z)) <= 1e-9);
    }
  }
  CHECK(found > 200);
}

TEST_CASE("candidate points at the figure parameters") {
  const CandidateSet cs = candidate_points(Complex(0.0, 0.5), 0.5, kPi / 5.0);
  CHECK(std::abs(cs.z - std::polar(1.0, kPi / 2 + kPi / 5)) <= 1e-15);
  REQUIRE(cs.count >= 1);
}

TEST_CASE("s-circle traces pass the residual filter and are mirror symmetric") {
  for (Complex x : {Complex(0.3, 0.7), Complex(0.6, 0.0), Complex(0.3, 0.45), Complex(-0.2, 0.1)}) {
    for (double t : {0.1, 0.5, 0.8}) {
      const Trace tr = trace_s_circle(x, t, quick(600));
      REQUIRE(tr.vertices.size() > 100);
      std::multiset<std::pair<long long, long long>> keys;
      auto key = [](Complex c) {
        return std::make_pair(std::llround(c.real() * 1e9), std::llround(c.imag() * 1e9));
      };
      for (Complex v : tr.vertices) keys.insert(key(v));
      double prev = -1.0;
      for (std::size_t i = 0; i < tr.vertices.size(); ++i) {
        CHECK(tr.residuals[i] <= 1e-5);
        CHECK(std::abs(s_ball(x, tr.vertices[i]).value - t) <= 1e-9);
        const double a = positive_arg(tr.vertices[i] - x);
        CHECK(a >= prev);
        prev = a;
        CHECK(keys.count(key(reflect_over_axis(x, tr.vertices[i]))) >= 1);
      }
    }
  }
}

TEST_CASE("s-circle trace contains the axis points") {
  const Complex x(0.3, 0.7);
  const Trace tr = trace_s_circle(x, 0.5, quick(500));
  const auto [y0, y1] = s_line_intersections(x, 0.5);
  auto nearest = [&](Complex p) {
    double d = 1.0;
    for (Complex v : tr.vertices) d = std::min(d, std::abs(v - p));
    return d;
  };
  CHECK(nearest(y0) <= 1e-14);
  CHECK(nearest(y1) <= 1e-14);
}

TEST_CASE("serial and parallel tracing agree bit for bit") {
  TraceOpts a = quick(3000);
  a.exec = Exec::serial;
  TraceOpts b = a;
  b.exec = Exec::parallel;
  const Trace s = trace_s_circle(Complex(0.3, 0.45), 0.5, a);
  const Trace p = trace_s_circle(Complex(0.3, 0.45), 0.5, b);
  REQUIRE(s.vertices.size() == p.vertices.size());
  CHECK(std::equal(s.vertices.begin(), s.vertices.end(), p.vertices.begin()));
  CHECK(std::equal(s.residuals.begin(), s.residuals.end(), p.residuals.begin()));
}

TEST_CASE("tracing errors") {
  CHECK_THROWS_AS(trace_s_circle(Complex(0.3, 0), 1.0), DomainError);
  CHECK_THROWS_AS(trace_s_circle(Complex(1.0, 0), 0.5), DomainError);
  TraceOpts bad = quick(100);
  bad.eps = 0.0;
  CHECK_THROWS_AS(trace_s_circle(Complex(0.3, 0), 0.5, bad), DomainError);
  // Below double resolution nothing survives the filter.
  TraceOpts strict = quick(50);
  strict.eps = 1e-300;
  CHECK_THROWS_AS(trace_s_circle(Complex(0.8, 0.1), 0.3, strict), EmptyTraceError);
}

TEST_CASE("j*-circle vertices have j* = k in every regime") {
  struct Case {
    Complex x;
    double k;
  };
  // k < 1/3 with |x| below and above 2k/(1-k), k = 1/3, k > 1/3, x = 0.
  const Case cases[] = {{{0.1, 0.05}, 0.2}, {{0.3, 0.3}, 0.3}, {{0.6, -0.5}, 0.1}, {{0.2, 0.5}, 1.0 / 3.0},
                        {{-0.4, 0.2}, 0.6}, {{0.0, 0.0}, 0.4}, {{0.0, 0.9}, 0.9}};
  for (const Case& c : cases) {
    const Trace tr = trace_jstar_circle(c.x, c.k, 1500);
    REQUIRE(tr.vertices.size() > 100);
    for (Complex y : tr.vertices) {
      CHECK(std::abs(y) < 1.0);
      CHECK(std::abs(jstar_ball(c.x, y) - c.k) <= 1e-9);
    }
  }
}

TEST_CASE("j*-circle branches meet on |y| = |x|") {
  for (auto [x, k] : {std::pair{Complex(0.3, 0.3), 0.3}, std::pair{Complex(0.7, 0.0), 0.2},
                      std::pair{Complex(0.5, 0.1), 0.5}}) {
    const double nx = std::abs(x);
    const double r = 2.0 * k * (1.0 - nx) / (1.0 - k);
    if (r >= 2.0 * nx) continue;
    const double cs = 1.0 - r * r / (2.0 * nx * nx);
    const auto radii = upsilon_radii(nx, k, cs);
    double gap = 1.0;
    for (double l : radii) gap = std::min(gap, std::abs(l - nx));
    CHECK(gap <= 1e-8);
  }
}

TEST_CASE("one-sided radii") {
  // k = 1/3 closed form.
  const double nx = 0.4;
  for (double cu : {-1.0, -0.3, 0.2, 0.9}) {
    const auto r = upsilon_radii(nx, 1.0 / 3.0, cu);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx((1 - nx * nx) / (2 * (1 - nx * cu))).epsilon(1e-12));
  }
  // Each radius solves the one-sided equation.
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double a = 0.95 * u01(rng);
    const double k = 0.02 + 0.95 * u01(rng);
    const double u = kPi * u01(rng);
    for (double l : upsilon_radii(a, k, std::cos(u))) {
      CHECK(l > 0.0);
      CHECK(l < 1.0);
      const Complex y = std::polar(l, u);
      const double d = std::abs(Complex(a, 0) - y);
      CHECK(std::abs(d / (d + 2.0 - 2.0 * l) - k) <= 1e-9);
    }
  }
}

TEST_CASE("Upsilon level set passes through the outer j*-branch") {
  const Complex x(0.3, 0.3);
  const auto ups = trace_upsilon_circle(x, 0.3, 400);
  REQUIRE(ups.size() > 100);
  for (Complex y : ups) {
    const double d = std::abs(x - y);
    CHECK(std::abs(d / (d + 2.0 - 2.0 * std::abs(y)) - 0.3) <= 1e-9);
  }
}

TEST_CASE("hyperbolic balls are Euclidean balls") {
  const EuclideanBall b = rho_ball_euclidean(Point::interior({0.5, 0.0}), std::log(3.0));
  CHECK(std::abs(b.center[0] - 0.4) <= 1e-12);
  CHECK(std::abs(b.center[1]) <= 1e-15);
  CHECK(std::abs(b.radius - 0.4) <= 1e-12);

  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Point x = test::random_ball(rng, 3, 0.9);
    const double R = 0.05 + 4.0 * u01(rng);
    const EuclideanBall e = rho_ball_euclidean(x, R);
    for (int k = 0; k < 20; ++k) {
      const Point d = test::random_ball(rng, 3);
      const double dn = d.norm();
      std::vector<double> y(3);
      for (std::size_t c = 0; c < 3; ++c) y[c] = e.center[c] + e.radius * d[c] / dn;
      CHECK(std::abs(rho_ball(x, Point::interior(y)) - R) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(rho_ball_euclidean(Point::interior({0.1, 0.0}), 0.0), DomainError);
}

TEST_CASE("rho and Euclidean traces") {
  const Trace tr = trace_rho_circle(Complex(0.5, 0), std::log(3.0), 64);
  for (Complex v : tr.vertices) CHECK(std::abs(std::abs(v - 0.4) - 0.4) <= 1e-12);
  const Trace e = trace_euclidean_circle(Complex(0.1, 0.2), 0.3, 16);
  for (Complex v : e.vertices) CHECK(std::abs(std::abs(v - Complex(0.1, 0.2)) - 0.3) <= 1e-15);
}

TEST_CASE("axis points of traces") {
  const Trace s = trace_s_circle(Complex(0.6, 0), 0.5, quick(200));
  const auto [o, i] = axis_points(s);
  CHECK(o.real() == doctest::Approx(0.8666666666666667));
  CHECK(i.real() == doctest::Approx(-0.2));
  const Trace r = trace_rho_circle(Complex(0.5, 0), std::log(3.0), 64);
  const auto [ro, ri] = axis_points(r);
  CHECK(ro.real() == doctest::Approx(0.8));
  CHECK(std::abs(ri) <= 1e-12);
  const Trace j = trace_jstar_circle(Complex(0.3, 0.3), 0.3, 100);
  const auto [jo, ji] = axis_points(j);
  CHECK(std::abs(jstar_ball(Complex(0.3, 0.3), jo) - 0.3) <= 1e-12);
  CHECK(std::abs(jstar_ball(Complex(0.3, 0.3), ji) - 0.3) <= 1e-12);
}

TEST_CASE("revolving the origin circle gives a round sphere") {
  const Trace tr = trace_s_circle(Complex(0, 0), 0.5, quick(64));
  const Mesh m = revolve_3d(tr, 16);
  for (const auto& v : m.vertices) {
    CHECK(std::abs(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) - 2.0 / 3.0) <= 1e-14);
  }
  // Closed surface of genus 0: V - E + F = 2, with E = 3F/2.
  const long long V = static_cast<long long>(m.vertices.size());
  const long long F = static_cast<long long>(m.faces.size());
  CHECK(V - 3 * F / 2 + F == 2);
  std::map<std::pair<int, int>, int> edges;
  for (const auto& f : m.faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[static_cast<std::size_t>(k)];
      const int b = f[static_cast<std::size_t>((k + 1) % 3)];
      edges[{std::min(a, b), std::max(a, b)}]++;
    }
  }
  for (const auto& [e, n] : edges) CHECK(n == 2);
}

TEST_CASE("revolved off-centre sphere stays on the s-sphere in 3D") {
  const Trace tr = trace_s_circle(Complex(0.6, 0), 0.5, quick(200));
  const std::array<double, 3> axis{0.0, 0.6, 0.8};
  const Mesh m = revolve_3d(tr, 12, axis);
  const Point x = Point::interior({0.0, 0.36, 0.48});
  for (const auto& v : m.vertices) {
    CHECK(std::abs(s_ball(x, Point::interior({v[0], v[1], v[2]})).value - 0.5) <= 1e-5);
  }
  CHECK_THROWS_AS(revolve_3d(tr, 2), DomainError);
}
