#pragma once

#include <string>
#include <vector>

#include "ortho/detectors.hpp"
#include "ortho/norm.hpp"
#include "ortho/orthocentric.hpp"

namespace ortho::svg {

struct RenderOptions {
  int width_px = 800;
  int circle_samples = 512;  ///< clamped to at least 256
  double stroke = 1.0;       ///< multiplier on the automatic stroke width
  bool unit_circle = true;
  bool triangles = true;
  bool circles = true;       ///< C(x4, lambda) and C(p4, lambda)
  bool six_point = true;
};

/// Collects primitives in plane coordinates and emits a standalone SVG whose
/// viewBox is their bounding box plus a 10% margin (y axis pointing up).
class Canvas {
 public:
  void polyline(std::vector<Vec2> pts, bool closed, const std::string& color, double width = 1.0,
                const std::string& dash = {});
  void circle(const NormSpec& spec, const Circle& c, int samples, const std::string& color,
              double width = 1.0, const std::string& dash = {});
  void dot(const Vec2& p, const std::string& color, const std::string& label = {});

  std::string str(int width_px, double stroke = 1.0) const;

 private:
  struct Path {
    std::vector<Vec2> pts;
    bool closed;
    std::string color;
    double width;
    std::string dash;
  };
  struct Dot {
    Vec2 p;
    std::string color;
    std::string label;
  };
  std::vector<Path> paths_;
  std::vector<Dot> dots_;
};

/// Base triangle, antitriangle, C(x4, lambda), C(p4, lambda), the six-point
/// circle and the unit circle of the norm.
std::string render_construction(const NormSpec& spec, const OrthocentricConfig& cfg,
                                const RenderOptions& opt = {});

/// Circles C(p4, lambda) and C(x4, lambda) of an isosceles construction with both
/// orthocentric quadruples.
std::string render_lemma1(const NormSpec& spec, const Lemma1Instance& inst,
                          const RenderOptions& opt = {});

}  // namespace ortho::svg
