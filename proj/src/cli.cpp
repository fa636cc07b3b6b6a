#include "trm/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trm/errors.hpp"
#include "trm/inclusions.hpp"
#include "trm/io.hpp"
#include "trm/metrics.hpp"
#include "trm/spheres.hpp"
#include "trm/verify.hpp"

namespace trm {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double d = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(d)) {
      throw UsageError("cannot parse coordinates '" + text + "'");
    }
    v.push_back(d);
  }
  if (v.size() < 2 || v.size() > 3) throw UsageError("coordinates need 2 or 3 components");
  return v;
}

Complex planar(const std::vector<double>& c) {
  if (c.size() != 2) throw UsageError("this command takes planar coordinates (re,im)");
  const Complex z(c[0], c[1]);
  if (!(std::abs(z) < 1.0)) throw DomainError("point must lie in the open unit disk");
  return z;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  if (text.empty()) return v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double d = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) throw UsageError("cannot parse list '" + text + "'");
    v.push_back(d);
  }
  return v;
}

// Writes to --out when given, else to the command's stream.
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  write(f);
}

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  double tol = -1.0;
  std::string out;
  std::string format;
};

struct DistArgs {
  std::string metric = "s";
  std::string x;
  std::string y;
};

struct TraceArgs {
  std::string metric = "s";
  std::string x = "0,0";
  double t = 0.5;
  int n = 10000;
  double eps = 1e-5;
  std::string radii;
  std::string preset;
};

struct RevolveArgs {
  std::string x = "0,0,0";
  double t = 0.5;
  int n = 720;
  int m = 32;
};

struct BoundsArgs {
  std::string pair;
  std::string x = "0,0";
  double value = 0.0;
  std::string direction = "given-metric";
  bool convex = false;
};

struct VerifyArgs {
  std::string mode;
  int grid = 20;
  int trace_n = 2000;
  double eps = 1e-5;
  double inflate = 0.0;
  bool serial = false;
};

int cmd_dist(const DistArgs& a, const Globals& g, std::ostream& out) {
  const auto kind = parse_metric(a.metric);
  if (!kind) throw UsageError("unknown metric '" + a.metric + "'");
  const auto xc = parse_coords(a.x);
  const auto yc = parse_coords(a.y);
  if (xc.size() != yc.size()) throw UsageError("points must have the same dimension");
  const Point x = Point::interior(xc);
  const Point y = Point::interior(yc);
  SolveOpts opts;
  if (g.tol > 0.0) opts.refine_tol = g.tol;
  if (*kind == MetricKind::s) {
    const SValue v = s_ball(x, y, opts);
    out << fmt_fixed(v.value) << '\n'
        << "argmin_z " << fmt_point(v.argmin_z.coords()) << '\n'
        << "residual " << fmt(v.bisection_residual) << '\n'
        << "converged " << (v.converged ? "true" : "false") << '\n';
    return kExitOk;
  }
  out << fmt_fixed(metric_distance(*kind, x, y, opts)) << '\n';
  return kExitOk;
}

Trace trace_metric(MetricKind kind, Complex x, double r, const TraceArgs& a, double tol) {
  switch (kind) {
    case MetricKind::s: {
      TraceOpts o;
      o.samples = a.n;
      o.eps = a.eps;
      if (tol > 0.0) o.solve.refine_tol = tol;
      return trace_s_circle(x, r, o);
    }
    case MetricKind::jstar:
      return trace_jstar_circle(x, r, a.n);
    case MetricKind::j: {
      if (!(r > 0.0)) throw DomainError("j radius must be positive");
      Trace tr = trace_jstar_circle(x, std::tanh(r / 2.0), a.n);
      tr.metric = MetricKind::j;
      tr.radius = r;
      for (std::size_t i = 0; i < tr.vertices.size(); ++i) {
        tr.residuals[i] = std::abs(j_ball(x, tr.vertices[i]) - r);
      }
      return tr;
    }
    case MetricKind::rho:
      return trace_rho_circle(x, r, a.n);
    case MetricKind::euclidean:
      return trace_euclidean_circle(x, r, a.n);
  }
  throw UsageError("unsupported metric");
}

int cmd_trace(TraceArgs a, const Globals& g, bool x_given, bool t_given, std::ostream& out) {
  std::vector<double> extra = parse_list(a.radii);
  SvgScene scene;
  if (!a.preset.empty()) {
    const std::string& p = a.preset;
    auto set = [&](const char* metric, const char* x, double t) {
      a.metric = metric;
      if (!x_given) a.x = x;
      if (!t_given) a.t = t;
    };
    if (p == "fig1" || p == "fig2") {
      set("s", p == "fig1" ? "0.3,0.7" : "0,0.5", 0.5);
    } else if (p == "fig3") {
      set("s", "0.6,0", 0.5);
      if (extra.empty()) extra = {0.1, 0.3, 0.7};
    } else if (p == "fig4") {
      set("jstar", "0.3,0.3", 0.3);
    } else if (p == "fig5") {
      set("s", "0.3,0.45", 0.5);
    } else {
      throw UsageError("unknown preset '" + p + "'");
    }
  }
  const auto kind = parse_metric(a.metric);
  if (!kind || *kind == MetricKind::euclidean) throw UsageError("trace metric must be s, jstar, rho or j");
  if (a.n < 4) throw DomainError("--n must be at least 4");
  const Complex x = planar(parse_coords(a.x));
  const std::string format = g.format.empty() ? "svg" : g.format;
  if (format != "svg" && format != "csv") throw UsageError("trace format must be svg or csv");

  const Trace main = trace_metric(*kind, x, a.t, a, g.tol);
  if (format == "csv") {
    emit(g.out, out, [&](std::ostream& os) { write_trace_csv(os, main); });
    return kExitOk;
  }

  scene.curves.push_back({main.vertices, CurveRole::metric, true});
  for (double r : extra) scene.curves.push_back({trace_metric(*kind, x, r, a, g.tol).vertices, CurveRole::metric, true});
  scene.centers.push_back(x);

  const std::string& p = a.preset;
  const Complex dir = std::abs(x) > 0.0 ? x / std::abs(x) : Complex(1.0, 0.0);
  if (p == "fig1") {
    const auto [y0, y1] = s_line_intersections(x, a.t);
    scene.marks = {y0, y1};
    scene.curves.push_back({{-dir, dir}, CurveRole::auxiliary, false});
  } else if (p == "fig2") {
    const double u = std::numbers::pi / 5.0;
    const CandidateSet cs = candidate_points(x, a.t, u);
    scene.marks.push_back(cs.z);
    scene.curves.push_back({{Complex(0.0, 0.0), cs.z}, CurveRole::auxiliary, false});
    for (const auto& c : cs.candidates()) {
      scene.marks.push_back(c.y);
      scene.curves.push_back({{x, cs.z, c.y}, CurveRole::auxiliary, false});
    }
  } else if (p == "fig4") {
    const double nx = std::abs(x);
    scene.circles.push_back({Complex(0.0, 0.0), nx, CurveRole::auxiliary});
    scene.circles.push_back({x, 2.0 * a.t * (1.0 - nx) / (1.0 - a.t), CurveRole::auxiliary});
    scene.curves.push_back({trace_upsilon_circle(x, a.t, a.n), CurveRole::auxiliary, true});
  } else if (p == "fig5") {
    const InclusionBound b = conjecture_bounds(Point::from_complex(x), a.t, Given::metric);
    for (double R : {b.inner, b.outer}) {
      const EuclideanBall e = rho_ball_euclidean(Point::from_complex(x), R);
      scene.circles.push_back({Complex(e.center[0], e.center[1]), e.radius, CurveRole::hyperbolic});
    }
  }
  emit(g.out, out, [&](std::ostream& os) { write_svg(os, scene); });
  return kExitOk;
}

int cmd_revolve(const RevolveArgs& a, const Globals& g, std::ostream& out) {
  if (a.n < 8) throw DomainError("--n must be at least 8");
  if (a.m < 3) throw DomainError("--m must be at least 3");
  const auto c = parse_coords(a.x);
  const Point x = Point::interior(c);
  TraceOpts o;
  o.samples = a.n;
  if (g.tol > 0.0) o.solve.refine_tol = g.tol;
  Mesh mesh;
  if (c.size() == 2) {
    mesh = revolve_3d(trace_s_circle(Complex(c[0], c[1]), a.t, o), a.m);
  } else {
    const double nx = x.norm();
    std::array<double, 3> axis{1.0, 0.0, 0.0};
    if (nx > 0.0) axis = {c[0] / nx, c[1] / nx, c[2] / nx};
    mesh = revolve_3d(trace_s_circle(Complex(nx, 0.0), a.t, o), a.m, axis);
  }
  emit(g.out, out, [&](std::ostream& os) { write_obj(os, mesh); });
  return kExitOk;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const Point x = Point::interior(parse_coords(a.x));
  std::optional<Given> given;
  if (a.direction == "given-metric") {
    given = Given::metric;
  } else if (a.direction == "given-rho") {
    given = Given::rho;
  } else if (a.direction != "given-euclid") {
    throw UsageError("direction must be given-metric, given-rho or given-euclid");
  }
  const bool euclid = !given.has_value();
  auto need_metric = [&] {
    if (euclid || *given != Given::metric) throw UsageError("pair " + a.pair + " only takes given-metric");
  };
  auto need_hyperbolic = [&] {
    if (euclid) throw UsageError("pair " + a.pair + " takes given-metric or given-rho");
  };
  const double v = a.value;
  if (a.pair == "s-euclid") {
    need_metric();
    write_bound(out, s_vs_euclid(x, v));
    out << "enclosure_fits " << (s_enclosure_fits(x, v) ? "true" : "false") << '\n';
    if (x.norm() > 0.0 && v >= x.norm()) {
      const EnclosureResult e = s_enclosing_ball(x, v);
      out << "enclosing_center " << fmt_point(e.ball.center) << '\n'
          << "enclosing_radius " << fmt(e.ball.radius) << '\n';
    }
  } else if (a.pair == "jstar-euclid") {
    if (euclid) {
      write_bound(out, jstar_vs_euclid(x, v));
    } else {
      need_metric();
      write_bound(out, euclid_vs_jstar(x, v));
    }
  } else if (a.pair == "s-jstar") {
    need_metric();
    write_bound(out, s_vs_jstar(x, v, a.convex));
  } else if (a.pair == "s-j") {
    need_metric();
    write_bound(out, s_vs_j(v, a.convex));
  } else if (a.pair == "j-rho") {
    need_hyperbolic();
    write_bound(out, j_vs_rho(x, v, *given));
  } else if (a.pair == "jstar-rho") {
    need_hyperbolic();
    write_bound(out, jstar_vs_rho(x, v, *given));
  } else if (a.pair == "s-rho-necessary") {
    need_hyperbolic();
    write_bound(out, s_rho_necessary(x, v, *given));
  } else if (a.pair == "s-rho-sufficient") {
    need_hyperbolic();
    write_bound(out, s_rho_sufficient(x, v, *given));
  } else if (a.pair == "s-rho-conjecture") {
    need_hyperbolic();
    write_bound(out, conjecture_bounds(x, v, *given));
  } else {
    throw UsageError("unknown pair '" + a.pair + "'");
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  const std::string format = g.format.empty() ? "text" : g.format;
  if (format != "text" && format != "json") throw UsageError("verify format must be text or json");
  const Exec exec = a.serial ? Exec::serial : Exec::parallel;
  std::string text;
  std::string json;
  bool pass = false;
  if (a.mode == "suite") {
    if (!(a.inflate >= 0.0)) throw UsageError("--inflate must be non-negative");
    SuiteOpts o;
    o.seed = g.seed;
    o.inflate = a.inflate;
    o.tolerance = g.tol;
    o.exec = exec;
    const auto reports = verify_theorem_suite(o);
    std::ostringstream ss;
    write_suite_text(ss, reports, o);
    text = ss.str();
    json = suite_json(reports, o);
    pass = suite_passes(reports);
  } else if (a.mode == "conjecture") {
    if (a.grid < 5) throw UsageError("--grid must be at least 5");
    if (a.trace_n < 4) throw UsageError("--trace-n must be at least 4");
    ConjectureOpts o;
    o.grid_n = a.grid;
    o.trace_n = a.trace_n;
    o.eps = a.eps;
    o.exec = exec;
    ConjectureReport r = verify_conjecture(o);
    if (g.tol > 0.0) r.tolerance = g.tol;
    std::ostringstream ss;
    write_conjecture_text(ss, r);
    text = ss.str();
    json = conjecture_json(r);
    pass = r.pass();
  } else {
    throw UsageError("verify mode must be suite or conjecture");
  }
  out << (format == "json" ? json : text);
  if (!g.out.empty()) {
    std::filesystem::create_directories(g.out);
    std::ofstream(std::filesystem::path(g.out) / "report.txt", std::ios::binary) << text;
    std::ofstream(std::filesystem::path(g.out) / "summary.json", std::ios::binary) << json;
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular ratio, distance ratio and hyperbolic metric balls of the unit disk", "trm"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed of verification sweeps");
  app.add_option("--tol", g.tol, "Residual target (dist, trace) or report tolerance (verify)");
  app.add_option("--out", g.out, "Output file (verify: output directory)");
  app.add_option("--format", g.format, "svg|csv for trace, text|json for verify");

  DistArgs da;
  auto* dist = app.add_subcommand("dist", "Distance between two points");
  dist->add_option("--metric", da.metric, "s|j|jstar|rho|euclidean");
  dist->add_option("--x", da.x)->required();
  dist->add_option("--y", da.y)->required();

  TraceArgs ta;
  auto* trace = app.add_subcommand("trace", "Trace a metric circle");
  trace->add_option("--metric", ta.metric, "s|jstar|rho|j");
  auto* tx = trace->add_option("--x", ta.x, "Center re,im");
  auto* tt = trace->add_option("--t", ta.t, "Radius");
  trace->add_option("--n", ta.n, "Samples");
  trace->add_option("--eps", ta.eps, "Residual filter of the s tracer");
  trace->add_option("--radii", ta.radii, "Further radii drawn in the same plot");
  trace->add_option("--preset", ta.preset, "fig1..fig5");

  RevolveArgs ra;
  auto* revolve = app.add_subcommand("revolve", "Revolve an s-circle into a 3D sphere mesh (OBJ)");
  revolve->add_option("--x", ra.x);
  revolve->add_option("--t", ra.t);
  revolve->add_option("--n", ra.n, "Samples of the traced circle");
  revolve->add_option("--m", ra.m, "Rotation steps");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Ball inclusion radii");
  bounds->add_option("--pair", ba.pair)->required();
  bounds->add_option("--x", ba.x);
  bounds->add_option("--t", ba.value, "Given radius")->required();
  bounds->add_option("--direction", ba.direction, "given-metric|given-rho|given-euclid");
  bounds->add_flag("--convex", ba.convex, "Use the sharper radii of convex domains");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Numerical verification of the inclusion results");
  verify->add_option("mode", va.mode, "suite|conjecture")->required();
  verify->add_option("--grid", va.grid);
  verify->add_option("--trace-n", va.trace_n);
  verify->add_option("--eps", va.eps);
  verify->add_option("--inflate", va.inflate, "Grow every inner radius by this fraction");
  verify->add_flag("--serial", va.serial, "Run the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*dist) return cmd_dist(da, g, out);
    if (*trace) return cmd_trace(ta, g, tx->count() > 0, tt->count() > 0, out);
    if (*revolve) return cmd_revolve(ra, g, out);
    if (*bounds) return cmd_bounds(ba, out);
    if (*verify) return cmd_verify(va, g, out);
  } catch (const EmptyTraceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEmpty;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trm
