#include "ortho/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace ortho::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void Canvas::polyline(std::vector<Vec2> pts, bool closed, const std::string& color, double width,
                      const std::string& dash) {
  paths_.push_back({std::move(pts), closed, color, width, dash});
}

void Canvas::circle(const NormSpec& spec, const Circle& c, int samples, const std::string& color,
                    double width, const std::string& dash) {
  const int n = std::max(samples, 256);
  std::vector<Vec2> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.push_back(circle_point(spec, c, 2.0 * std::numbers::pi * i / n));
  }
  polyline(std::move(pts), true, color, width, dash);
}

void Canvas::dot(const Vec2& p, const std::string& color, const std::string& label) {
  dots_.push_back({p, color, label});
}

std::string Canvas::str(int width_px, double stroke) const {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  bool first = true;
  auto grow = [&](const Vec2& p) {
    if (first) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
      first = false;
      return;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (const auto& path : paths_) std::for_each(path.pts.begin(), path.pts.end(), grow);
  for (const auto& d : dots_) grow(d.p);
  double w = std::max(x1 - x0, 1e-9);
  double h = std::max(y1 - y0, 1e-9);
  const double mx = 0.1 * w;
  const double my = 0.1 * h;
  x0 -= mx;
  w += 2.0 * mx;
  y1 += my;
  h += 2.0 * my;
  const double lw = 0.003 * std::max(w, h) * stroke;
  const int height_px = std::max(1, static_cast<int>(std::lround(width_px * h / w)));

  // Plane y points up, SVG y points down: emit -y.
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
     << height_px << "\" viewBox=\"" << num(x0) << ' ' << num(-y1) << ' ' << num(w) << ' '
     << num(h) << "\">\n"
     << "<rect x=\"" << num(x0) << "\" y=\"" << num(-y1) << "\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";
  for (const auto& path : paths_) {
    os << (path.closed ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < path.pts.size(); ++i) {
      if (i) os << ' ';
      os << num(path.pts[i].x) << ',' << num(-path.pts[i].y);
    }
    os << "\" fill=\"none\" stroke=\"" << xml_escape(path.color) << "\" stroke-width=\""
       << num(lw * path.width) << '"';
    if (!path.dash.empty()) os << " stroke-dasharray=\"" << xml_escape(path.dash) << '"';
    os << "/>\n";
  }
  const double r = 2.5 * lw;
  for (const auto& d : dots_) {
    os << "<circle cx=\"" << num(d.p.x) << "\" cy=\"" << num(-d.p.y) << "\" r=\"" << num(r)
       << "\" fill=\"" << xml_escape(d.color) << "\"/>\n";
    if (!d.label.empty()) {
      os << "<text x=\"" << num(d.p.x + 1.5 * r) << "\" y=\"" << num(-d.p.y - 1.5 * r)
         << "\" font-size=\"" << num(12.0 * lw) << "\" font-family=\"sans-serif\">"
         << xml_escape(d.label) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_construction(const NormSpec& spec, const OrthocentricConfig& cfg,
                                const RenderOptions& opt) {
  Canvas cv;
  if (opt.unit_circle) cv.circle(spec, {{}, 1.0}, opt.circle_samples, "#999999", 0.7, "2,2");
  if (opt.triangles) {
    cv.polyline({cfg.x[0], cfg.x[1], cfg.x[2]}, true, "#1f4e9c", 1.2);
    cv.polyline({cfg.p[0], cfg.p[1], cfg.p[2]}, true, "#b03a2e", 1.2);
  }
  if (cfg.lambda) {
    if (opt.circles) {
      cv.circle(spec, {cfg.p4(), *cfg.lambda}, opt.circle_samples, "#1f4e9c", 0.8);
      cv.circle(spec, {cfg.x4(), *cfg.lambda}, opt.circle_samples, "#b03a2e", 0.8);
    }
    if (opt.six_point) {
      cv.circle(spec, {cfg.q, 0.5 * *cfg.lambda}, opt.circle_samples, "#1e8449", 1.0, "4,2");
    }
  }
  const char* xs[] = {"x1", "x2", "x3", "x4"};
  const char* ps[] = {"p1", "p2", "p3", "p4"};
  for (int i = 0; i < 4; ++i) {
    cv.dot(cfg.x[i], "#1f4e9c", xs[i]);
    cv.dot(cfg.p[i], "#b03a2e", ps[i]);
  }
  if (opt.six_point) {
    for (int i = 0; i < 3; ++i) {
      cv.dot(cfg.m[i], "#1e8449");
      cv.dot(cfg.d[i], "#1e8449");
    }
  }
  cv.dot(cfg.q, "#000000", "q");
  return cv.str(opt.width_px, opt.stroke);
}

std::string render_lemma1(const NormSpec& spec, const Lemma1Instance& in,
                          const RenderOptions& opt) {
  Canvas cv;
  if (opt.unit_circle) cv.circle(spec, {{}, 1.0}, opt.circle_samples, "#999999", 0.7, "2,2");
  cv.circle(spec, {in.p4, in.lambda}, opt.circle_samples, "#1f4e9c", 0.8);
  cv.circle(spec, {in.x4, in.lambda}, opt.circle_samples, "#b03a2e", 0.8);
  cv.circle(spec, {{}, 0.5 * in.lambda}, opt.circle_samples, "#1e8449", 0.8, "4,2");
  if (opt.triangles) {
    cv.polyline({in.x1, in.x2, in.x3}, true, "#1f4e9c", 1.2);
    cv.polyline({in.p1, in.p2, in.p3}, true, "#b03a2e", 1.2);
  }
  cv.dot(in.x1, "#1f4e9c", "x1");
  cv.dot(in.x2, "#1f4e9c", "x2");
  cv.dot(in.x3, "#1f4e9c", "x3");
  cv.dot(in.x4, "#1f4e9c", "x4");
  cv.dot(in.p1, "#b03a2e", "p1");
  cv.dot(in.p2, "#b03a2e", "p2");
  cv.dot(in.p3, "#b03a2e", "p3");
  cv.dot(in.p4, "#b03a2e", "p4");
  cv.dot(in.q, "#000000", "q");
  return cv.str(opt.width_px, opt.stroke);
}

}  // namespace ortho::svg
