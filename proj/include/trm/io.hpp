#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trm/inclusions.hpp"
#include "trm/spheres.hpp"
#include "trm/verify.hpp"

namespace trm {

/// 12 significant digits, shortest form.
std::string fmt(double v);
/// 12 digits after the decimal point.
std::string fmt_fixed(double v);
std::string fmt_point(std::span<const double> coords);
std::string fmt_point(Complex c);

/// `re,im,residual` with one vertex per line.
void write_trace_csv(std::ostream& os, const Trace& trace);

/// `v x y z` records followed by 1-based `f i j k` records.
void write_obj(std::ostream& os, const Mesh& mesh);

enum class CurveRole { metric, auxiliary, hyperbolic };

struct SvgCurve {
  std::vector<Complex> points;
  CurveRole role = CurveRole::metric;
  bool closed = true;
};

struct SvgCircle {
  Complex center;
  double radius = 0.0;
  CurveRole role = CurveRole::auxiliary;
};

/// A square plot of [-1.05, 1.05]^2; the unit circle is always drawn.
struct SvgScene {
  int pixels = 600;
  std::vector<SvgCurve> curves;
  std::vector<SvgCircle> circles;
  std::vector<Complex> centers;
  std::vector<Complex> marks;
};

void write_svg(std::ostream& os, const SvgScene& scene);

void write_bound(std::ostream& os, const InclusionBound& bound);

void write_suite_text(std::ostream& os, const std::vector<InclusionReport>& reports,
                      const SuiteOpts& opts);
std::string suite_json(const std::vector<InclusionReport>& reports, const SuiteOpts& opts);

void write_conjecture_text(std::ostream& os, const ConjectureReport& report);
std::string conjecture_json(const ConjectureReport& report);

}  // namespace trm
