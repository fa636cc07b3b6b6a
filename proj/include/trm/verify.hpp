#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trm/geometry.hpp"
#include "trm/metrics.hpp"
#include "trm/parallel.hpp"
#include "trm/spheres.hpp"

namespace trm {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr double kExactTolerance = 1e-7;
inline constexpr double kTracedTolerance = 1e-4;

/// Triangular ratio metric by direct discretisation of the boundary: M uniform
/// angles plus a parabolic step around the best sample. Requires M >= 360.
double brute_force_s(Complex x, Complex y, int m);
double brute_force_s(const Point& x, const Point& y, int m);

std::vector<double> brute_force_s_batch(const std::vector<std::pair<Point, Point>>& pairs, int m,
                                        Exec exec = Exec::parallel);

/// A planar metric ball. Only Euclidean balls may sit off the common center.
struct BallSpec {
  MetricKind kind = MetricKind::euclidean;
  Complex center;
  double radius = 0.0;
};

struct CheckOpts {
  int samples = 720;
  /// Negative: kTracedTolerance when the inner sphere is traced, else
  /// kExactTolerance.
  double tolerance = -1.0;
  double eps = 1e-5;
  Exec exec = Exec::serial;
};

struct InclusionReport {
  std::string claim;
  /// Human-readable statement, e.g. "B_s(x,t) <= B(x,r1)".
  std::string statement;
  /// The statement is an if-and-only-if characterisation.
  bool iff = false;
  /// The statement claims its radii cannot be improved.
  bool sharp = false;
  /// Not gating: recorded for inspection only.
  bool exploratory = false;
  std::vector<int> grid_shape;
  int cells = 0;
  double tolerance = kExactTolerance;
  double worst = -1e300;
  Complex worst_center;
  double worst_inner_radius = 0.0;
  double worst_outer_radius = 0.0;
  Complex worst_point;
  std::string error;

  bool pass() const { return error.empty() && worst <= tolerance; }
  /// Folds one cell into the aggregate, keeping the worst case.
  void merge(const InclusionReport& cell);
};

/// Samples the sphere of `inner` and reports max over samples of
/// d_outer(outer.center, y) - outer.radius. Samples outside the unit disk count
/// as +inf.
InclusionReport check_inclusion(const BallSpec& inner, const BallSpec& outer,
                                const CheckOpts& opts = {});

/// Points of the sphere of `ball` used by check_inclusion.
std::vector<Complex> sample_sphere(const BallSpec& ball, const CheckOpts& opts);

struct SuiteOpts {
  std::uint64_t seed = kDefaultSeed;
  /// Inner radii are multiplied by (1 + inflate).
  double inflate = 0.0;
  int random_pairs = 2000;
  int samples = 720;
  int trace_samples = 2000;
  Exec exec = Exec::parallel;
  /// Overrides the tolerance of exactly sampled spheres when positive.
  double tolerance = -1.0;
};

std::vector<InclusionReport> verify_theorem_suite(const SuiteOpts& opts = {});

/// All gating claims pass.
bool suite_passes(const std::vector<InclusionReport>& reports);
/// Every if-and-only-if claim fails (meaningful for inflated runs).
bool suite_iff_all_fail(const std::vector<InclusionReport>& reports);

struct ConjectureCell {
  double x_norm = 0.0;
  /// s radius (traced s-spheres) or hyperbolic radius (traced rho-spheres).
  double radius = 0.0;
  bool skipped = false;
  std::size_t vertices = 0;
  double max_residual = 0.0;
  double measured_min = 0.0;
  double measured_max = 0.0;
  double conjectured_inner = 0.0;
  double conjectured_outer = 0.0;
  double deviation = 0.0;
};

struct ConjectureReport {
  int grid_n = 0;
  int trace_n = 0;
  double eps = 0.0;
  double tolerance = 1e-3;
  double origin_tolerance = 1e-9;
  /// min/max of rho over traced S_s(x, t) against R0, R1.
  std::vector<ConjectureCell> s_cells;
  /// x = 0 column against log((1+3t)/(1-t)).
  std::vector<ConjectureCell> origin_cells;
  /// min/max of s over sampled S_rho(x, R) against t0, t1.
  std::vector<ConjectureCell> rho_cells;
  std::vector<std::pair<double, double>> skipped;
  double max_deviation = 0.0;
  double origin_max_deviation = 0.0;
  double rho_max_deviation = 0.0;
  double mean_deviation = 0.0;

  bool pass() const {
    return max_deviation <= tolerance && origin_max_deviation <= origin_tolerance;
  }
};

struct ConjectureOpts {
  int grid_n = 20;
  int trace_n = 2000;
  double eps = 1e-5;
  /// Also sweep the hyperbolic-radius direction.
  bool rho_direction = true;
  Exec exec = Exec::parallel;
};

ConjectureReport verify_conjecture(const ConjectureOpts& opts = {});

}  // namespace trm
