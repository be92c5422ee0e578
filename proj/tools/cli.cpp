#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ortho/busemann.hpp"
#include "ortho/circumcenter.hpp"
#include "ortho/detectors.hpp"
#include "ortho/errors.hpp"
#include "ortho/io.hpp"
#include "ortho/orthocentric.hpp"
#include "ortho/orthogonality.hpp"
#include "ortho/svg.hpp"

namespace ortho::cli {

namespace {

using io::Json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const Vec2& v) { return "(" + fmt(v.x) + ", " + fmt(v.y) + ")"; }

/// A norm given either as a path to a JSON file or inline JSON text.
NormSpec load_norm(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::parse_norm(io::read_json_file(arg));
  try {
    return io::parse_norm(Json::parse(arg));
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("norm: " + arg + " is neither a readable file nor JSON");
  }
}

svg::RenderOptions parse_render(const Json& scene) {
  svg::RenderOptions r;
  if (!scene.contains("render")) return r;
  const auto& j = scene["render"];
  if (!j.is_object()) throw ConfigError("render: expected an object");
  try {
    r.width_px = j.value("width", r.width_px);
    r.circle_samples = j.value("circle_samples", r.circle_samples);
    r.stroke = j.value("stroke", r.stroke);
    r.unit_circle = j.value("unit_circle", r.unit_circle);
    r.triangles = j.value("triangles", r.triangles);
    r.circles = j.value("circles", r.circles);
    r.six_point = j.value("six_point", r.six_point);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("render: ") + e.what());
  }
  if (r.width_px <= 0) throw ConfigError("render: width must be positive");
  if (r.circle_samples < 256) throw ConfigError("render: circle_samples must be >= 256");
  return r;
}

NormSpec scene_norm(const Json& scene) {
  if (!scene.is_object() || !scene.contains("norm")) throw ConfigError("scene: missing \"norm\"");
  return io::parse_norm(scene["norm"]);
}

struct ConstructArgs {
  std::string scene;
  std::string svg;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const Json scene = io::read_json_file(a.scene);
  const NormSpec spec = scene_norm(scene);
  if (!scene.contains("triangle") || !scene["triangle"].is_array() ||
      scene["triangle"].size() != 3) {
    throw ConfigError("scene: \"triangle\" must hold three points");
  }
  const Triangle tri{io::parse_point(scene["triangle"][0], "triangle[0]"),
                     io::parse_point(scene["triangle"][1], "triangle[1]"),
                     io::parse_point(scene["triangle"][2], "triangle[2]")};
  if (tri.has_duplicates()) throw DegenerateInput("degenerate: repeated vertex");
  if (tri.collinear()) throw DegenerateInput("degenerate: collinear");
  const double tol = scene.value("tol", kDefaultTol);
  const svg::RenderOptions render = parse_render(scene);

  OrthocentricConfig cfg;
  std::size_t candidates = 0;
  if (scene.contains("p4") && !scene["p4"].is_null()) {
    const Vec2 p4 = io::parse_point(scene["p4"], "p4");
    try {
      cfg = orthocenter_from_circumcenter(spec, tri, p4, tol);
    } catch (const PreconditionViolation& e) {
      err << "warning: p4 is not a circumcenter (residual " << fmt(e.residual())
          << "); using the plain antitriangle\n";
      cfg = antitriangle(tri.a, tri.b, tri.c, p4);
    }
  } else {
    const CircumcenterSet set = circumcenters(spec, tri);
    if (set.empty()) throw NumericalFailure("no circumcenter found");
    candidates = set.size();
    if (set.possibly_continuum) {
      err << "warning: circumcenter set looks like a continuum; using the first representative\n";
    }
    cfg = orthocenter_from_circumcenter(spec, tri, set.centers.front(), tol);
  }

  Json j;
  j["norm"] = io::to_json(spec);
  j["config"] = io::to_json(cfg);
  if (candidates > 0) j["circumcenter_candidates"] = candidates;
  if (cfg.lambda) {
    const SixPointCircle six = six_point_circle(spec, cfg);
    j["six_point_circle"] = {{"center", io::to_json(six.center)},
                             {"radius", six.radius},
                             {"max_defect", six.max_defect}};
    j["three_circles_defect"] = three_circles_check(spec, cfg);
  } else {
    j["six_point_circle"] = nullptr;
    j["three_circles_defect"] = nullptr;
  }
  const std::string text = j.dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
  } else {
    io::write_text_file(a.out, text);
  }
  if (!a.svg.empty()) io::write_text_file(a.svg, svg::render_construction(spec, cfg, render));
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const Json scene = io::read_json_file(path);
  const NormSpec spec = scene_norm(scene);
  if (!scene.contains("points") || !scene["points"].is_array() || scene["points"].size() != 4) {
    throw ConfigError("scene: \"points\" must hold four points");
  }
  std::array<Vec2, 4> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    pts[i] = io::parse_point(scene["points"][i], "points[" + std::to_string(i) + "]");
  }
  const SystemCheck c = is_orthocentric_system(spec, pts, scene.value("tol", kDefaultTol));
  switch (c.verdict) {
    case SystemVerdict::orthocentric: {
      const auto& w = *c.witness;
      out << "orthocentric: p" << w.orthocenter_index + 1
          << " is the orthocenter of the other three for circumcenter " << fmt(w.circumcenter)
          << " (residual " << fmt(w.residual) << ")\n";
      return kOk;
    }
    case SystemVerdict::not_orthocentric:
      out << "not orthocentric";
      if (!c.reason.empty()) out << ": " << c.reason;
      out << '\n';
      return kFalse;
    case SystemVerdict::indeterminate:
      out << "indeterminate";
      if (!c.reason.empty()) out << ": " << c.reason;
      out << '\n';
      return kNumerical;
  }
  return kNumerical;
}

struct DetectArgs {
  std::string norm;
  long long samples = -1;
  std::uint64_t seed = 0;
  std::string out;
  std::string csv;
  double tau = 1e-7;
  bool serial = false;
};

int cmd_detect(const DetectArgs& a, std::ostream& out) {
  const NormSpec spec = load_norm(a.norm);
  if (a.samples < 1) throw ConfigError("--samples must be >= 1");
  if (!(a.tau > 0.0)) throw ConfigError("--tau must be positive");
  const DetectorReport r = euclideanity_report(spec, static_cast<std::size_t>(a.samples), a.seed,
                                               a.serial ? Exec::serial : Exec::parallel);
  if (!a.out.empty()) {
    Json j = io::to_json(r);
    j["tau"] = a.tau;
    j["consistent_with_euclidean"] = consistent_with_euclidean(r, a.tau);
    io::write_text_file(a.out, j.dump(2) + "\n");
  }
  if (!a.csv.empty()) {
    std::ostringstream os;
    io::write_csv(os, r);
    io::write_text_file(a.csv, os.str());
  }
  for (const auto& d : r.detectors) out << d.name << ": " << verdict(d, a.tau) << '\n';
  return kOk;
}

struct PlotArgs {
  std::string norm;
  double phi = 0.3;
  double x_len = 1.0;
  double radius = 1.0;
  std::string arc = "plus";
  std::string svg;
  int samples = 512;
  int width = 800;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  const NormSpec spec = load_norm(a.norm);
  if (a.arc != "plus" && a.arc != "minus") throw ConfigError("--arc must be plus or minus");
  if (a.samples < 256) throw ConfigError("--circle-samples must be >= 256");
  if (a.width <= 0) throw ConfigError("--width must be positive");
  const Vec2 x{a.x_len * std::cos(a.phi), a.x_len * std::sin(a.phi)};
  const Vec2 y = isosceles_partner(spec, x, a.radius);
  const Lemma1Instance in = lemma1_construct(spec, x, y, a.arc == "plus" ? Arc::plus : Arc::minus);
  svg::RenderOptions r;
  r.circle_samples = a.samples;
  r.width_px = a.width;
  const std::string text = svg::render_lemma1(spec, in, r);
  if (a.svg.empty()) {
    out << text;
  } else {
    io::write_text_file(a.svg, text);
    out << "x = " << fmt(in.x) << ", y = " << fmt(in.y) << ", lambda = " << fmt(in.lambda)
        << ", x3 = " << fmt(in.x3) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthocentric systems in Minkowski planes", "ortho"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Orthocentric configuration of a triangle");
  construct->add_option("--scene", ca.scene, "Scene JSON (norm, triangle, optional p4)")
      ->required();
  construct->add_option("--svg", ca.svg, "Write an SVG diagram");
  construct->add_option("--out", ca.out, "Write the configuration JSON (default: stdout)");

  std::string quad;
  auto* verify = app.add_subcommand("verify", "Check whether four points form an orthocentric system");
  verify->add_option("--scene", quad, "Scene JSON (norm, points)")->required();

  DetectArgs da;
  auto* detect = app.add_subcommand("detect", "Run the Euclideanity detectors");
  detect->add_option("--norm", da.norm, "Norm JSON file or inline JSON")->required();
  detect->add_option("--samples", da.samples, "Number of sampled pairs")->required();
  detect->add_option("--seed", da.seed, "Random seed")->capture_default_str();
  detect->add_option("--out", da.out, "Write report JSON");
  detect->add_option("--csv", da.csv, "Write report CSV");
  detect->add_option("--tau", da.tau, "Verdict threshold")->capture_default_str();
  detect->add_flag("--serial", da.serial, "Use the serial reference loop");

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "Draw an isosceles-orthogonal construction");
  plot->add_option("--norm", pa.norm, "Norm JSON file or inline JSON")->required();
  plot->add_option("--phi", pa.phi, "Polar angle of x")->capture_default_str();
  plot->add_option("--x-length", pa.x_len, "Euclidean length of x")->capture_default_str();
  plot->add_option("--radius", pa.radius, "Norm of y")->capture_default_str();
  plot->add_option("--arc", pa.arc, "plus or minus")->capture_default_str();
  plot->add_option("--circle-samples", pa.samples, "Samples per circle")->capture_default_str();
  plot->add_option("--width", pa.width, "Canvas width in pixels")->capture_default_str();
  plot->add_option("--svg", pa.svg, "Output file (default: stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*construct) return cmd_construct(ca, out, err);
    if (*verify) return cmd_verify(quad, out);
    if (*detect) return cmd_detect(da, out);
    if (*plot) return cmd_plot(pa, out);
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const PreconditionViolation& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const DegenerateInput& e) {
    err << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kInvalid;
}

}  // namespace ortho::cli
