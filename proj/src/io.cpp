#include "trm/io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace trm {

namespace {

const char* stroke(CurveRole role) {
  switch (role) {
    case CurveRole::metric:
      return "stroke=\"#b2182b\" stroke-width=\"0.006\"";
    case CurveRole::auxiliary:
      return "stroke=\"#2166ac\" stroke-width=\"0.004\" stroke-dasharray=\"0.02 0.015\"";
    case CurveRole::hyperbolic:
      return "stroke=\"#1b7837\" stroke-width=\"0.004\" stroke-dasharray=\"0.006 0.012\"";
  }
  return "";
}

// SVG coordinates need far fewer digits than reports.
std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

nlohmann::json complex_json(Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

}  // namespace

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

std::string fmt_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v + 0.0);
  return buf;
}

std::string fmt_point(std::span<const double> coords) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += fmt(coords[i]);
  }
  return s;
}

std::string fmt_point(Complex c) { return fmt(c.real()) + "," + fmt(c.imag()); }

void write_trace_csv(std::ostream& os, const Trace& trace) {
  os << "re,im,residual\n";
  for (std::size_t i = 0; i < trace.vertices.size(); ++i) {
    os << fmt(trace.vertices[i].real()) << ',' << fmt(trace.vertices[i].imag()) << ','
       << fmt(trace.residuals[i]) << '\n';
  }
}

void write_obj(std::ostream& os, const Mesh& mesh) {
  for (const auto& v : mesh.vertices) {
    os << "v " << fmt(v[0]) << ' ' << fmt(v[1]) << ' ' << fmt(v[2]) << '\n';
  }
  for (const auto& f : mesh.faces) {
    os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

void write_svg(std::ostream& os, const SvgScene& scene) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scene.pixels << "\" height=\""
     << scene.pixels << "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
     << "<rect x=\"-1.05\" y=\"-1.05\" width=\"2.1\" height=\"2.1\" fill=\"white\"/>\n"
     << "<g transform=\"scale(1,-1)\" fill=\"none\">\n"
     << "<circle class=\"unit\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\" stroke-width=\"0.006\"/>\n";
  for (const SvgCircle& c : scene.circles) {
    os << "<circle class=\"aux\" cx=\"" << svg_num(c.center.real()) << "\" cy=\""
       << svg_num(c.center.imag()) << "\" r=\"" << svg_num(c.radius) << "\" " << stroke(c.role)
       << "/>\n";
  }
  for (const SvgCurve& curve : scene.curves) {
    os << '<' << (curve.closed ? "polygon" : "polyline") << " class=\"curve\" " << stroke(curve.role)
       << " points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      if (i) os << ' ';
      os << svg_num(curve.points[i].real()) << ',' << svg_num(curve.points[i].imag());
    }
    os << "\"/>\n";
  }
  for (Complex c : scene.centers) {
    os << "<circle class=\"center\" cx=\"" << svg_num(c.real()) << "\" cy=\"" << svg_num(c.imag())
       << "\" r=\"0.012\" fill=\"black\"/>\n";
  }
  for (Complex m : scene.marks) {
    os << "<circle class=\"witness\" cx=\"" << svg_num(m.real()) << "\" cy=\"" << svg_num(m.imag())
       << "\" r=\"0.012\" fill=\"#b2182b\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

void write_bound(std::ostream& os, const InclusionBound& b) {
  os << "pair " << b.pair << '\n'
     << "direction " << to_string(b.given) << '\n'
     << "input " << fmt(b.input) << '\n'
     << "inner " << fmt(b.inner) << '\n'
     << "outer " << fmt(b.outer) << '\n'
     << "inner_sharp " << (b.inner_sharp ? "true" : "false") << '\n'
     << "outer_sharp " << (b.outer_sharp ? "true" : "false") << '\n'
     << "status " << to_string(b.status) << '\n';
  for (const Point& w : b.witnesses) os << "witness " << fmt_point(w.coords()) << '\n';
}

void write_suite_text(std::ostream& os, const std::vector<InclusionReport>& reports,
                      const SuiteOpts& opts) {
  os << "# inclusion suite seed=" << opts.seed << " inflate=" << fmt(opts.inflate)
     << " exact_tol=" << fmt(opts.tolerance > 0.0 ? opts.tolerance : kExactTolerance)
     << " traced_tol=" << fmt(kTracedTolerance) << '\n';
  for (const InclusionReport& r : reports) {
    os << "claim " << r.claim << " | " << r.statement << " | grid";
    for (std::size_t i = 0; i < r.grid_shape.size(); ++i) os << (i ? "x" : " ") << r.grid_shape[i];
    os << " | cells " << r.cells << " | iff " << (r.iff ? "yes" : "no") << " | worst "
       << fmt(r.worst) << " | tol " << fmt(r.tolerance) << " | at x=" << fmt_point(r.worst_center)
       << " radius=" << fmt(r.worst_inner_radius) << " y=" << fmt_point(r.worst_point) << " | "
       << (r.exploratory ? (r.pass() ? "holds" : "fails") : (r.pass() ? "PASS" : "FAIL"));
    if (r.exploratory) os << " (exploratory)";
    if (!r.error.empty()) os << " | error " << r.error;
    os << '\n';
  }
  os << "summary " << (suite_passes(reports) ? "PASS" : "FAIL")
     << " iff_claims_all_fail=" << (suite_iff_all_fail(reports) ? "yes" : "no") << '\n';
}

std::string suite_json(const std::vector<InclusionReport>& reports, const SuiteOpts& opts) {
  nlohmann::json j;
  j["seed"] = opts.seed;
  j["inflate"] = opts.inflate;
  j["exact_tolerance"] = opts.tolerance > 0.0 ? opts.tolerance : kExactTolerance;
  j["traced_tolerance"] = kTracedTolerance;
  j["pass"] = suite_passes(reports);
  j["iff_claims_all_fail"] = suite_iff_all_fail(reports);
  auto& arr = j["claims"] = nlohmann::json::array();
  for (const InclusionReport& r : reports) {
    arr.push_back({{"claim", r.claim},
                   {"statement", r.statement},
                   {"iff", r.iff},
                   {"sharp", r.sharp},
                   {"exploratory", r.exploratory},
                   {"grid_shape", r.grid_shape},
                   {"cells", r.cells},
                   {"worst", r.worst},
                   {"tolerance", r.tolerance},
                   {"worst_center", complex_json(r.worst_center)},
                   {"worst_inner_radius", r.worst_inner_radius},
                   {"worst_point", complex_json(r.worst_point)},
                   {"pass", r.pass()},
                   {"error", r.error}});
  }
  return j.dump(2) + "\n";
}

void write_conjecture_text(std::ostream& os, const ConjectureReport& r) {
  os << "# conjecture sweep grid=" << r.grid_n << " trace_n=" << r.trace_n << " eps=" << fmt(r.eps)
     << " tol=" << fmt(r.tolerance) << " origin_tol=" << fmt(r.origin_tolerance) << '\n';
  auto cells = [&os](const char* tag, const std::vector<ConjectureCell>& list) {
    for (const ConjectureCell& c : list) {
      os << tag << " |x|=" << fmt(c.x_norm) << " radius=" << fmt(c.radius);
      if (c.skipped) {
        os << " skipped\n";
        continue;
      }
      os << " n=" << c.vertices << " min=" << fmt(c.measured_min) << " max=" << fmt(c.measured_max)
         << " inner=" << fmt(c.conjectured_inner) << " outer=" << fmt(c.conjectured_outer)
         << " dev=" << fmt(c.deviation) << " residual=" << fmt(c.max_residual) << '\n';
    }
  };
  cells("s-cell", r.s_cells);
  cells("origin-cell", r.origin_cells);
  cells("rho-cell", r.rho_cells);
  os << "summary max_dev=" << fmt(r.max_deviation) << " mean_dev=" << fmt(r.mean_deviation)
     << " origin_max_dev=" << fmt(r.origin_max_deviation) << " rho_max_dev=" << fmt(r.rho_max_deviation)
     << " skipped=" << r.skipped.size() << ' ' << (r.pass() ? "PASS" : "FAIL") << '\n';
}

std::string conjecture_json(const ConjectureReport& r) {
  nlohmann::json j;
  j["grid_n"] = r.grid_n;
  j["trace_n"] = r.trace_n;
  j["eps"] = r.eps;
  j["tolerance"] = r.tolerance;
  j["origin_tolerance"] = r.origin_tolerance;
  j["max_deviation"] = r.max_deviation;
  j["mean_deviation"] = r.mean_deviation;
  j["origin_max_deviation"] = r.origin_max_deviation;
  j["rho_max_deviation"] = r.rho_max_deviation;
  j["skipped"] = r.skipped;
  j["pass"] = r.pass();
  auto cells = [](const std::vector<ConjectureCell>& list) {
    nlohmann::json a = nlohmann::json::array();
    for (const ConjectureCell& c : list) {
      a.push_back({{"x_norm", c.x_norm},
                   {"radius", c.radius},
                   {"skipped", c.skipped},
                   {"vertices", c.vertices},
                   {"min", c.measured_min},
                   {"max", c.measured_max},
                   {"inner", c.conjectured_inner},
                   {"outer", c.conjectured_outer},
                   {"deviation", c.deviation},
                   {"max_residual", c.max_residual}});
    }
    return a;
  };
  j["s_cells"] = cells(r.s_cells);
  j["origin_cells"] = cells(r.origin_cells);
  j["rho_cells"] = cells(r.rho_cells);
  return j.dump(2) + "\n";
}

}  // namespace trm
