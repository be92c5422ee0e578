#include "ortho/orthocentric.hpp"

#include <algorithm>
#include <cmath>

#include "ortho/errors.hpp"

namespace ortho {

OrthocentricConfig antitriangle(const Vec2& x1, const Vec2& x2, const Vec2& x3, const Vec2& p4) {
  OrthocentricConfig c;
  c.x[0] = x1;
  c.x[1] = x2;
  c.x[2] = x3;
  c.p[3] = p4;
  c.m[0] = midpoint(x2, x3);
  c.m[1] = midpoint(x1, x3);
  c.m[2] = midpoint(x1, x2);
  for (int i = 0; i < 3; ++i) c.p[i] = point_symmetry(c.m[i], p4);
  c.q = (x1 + x2 + x3 - p4) * 0.5;
  c.x[3] = point_symmetry(c.q, p4);
  c.d[0] = midpoint(c.p[1], c.p[2]);
  c.d[1] = midpoint(c.p[0], c.p[2]);
  c.d[2] = midpoint(c.p[0], c.p[1]);
  c.g = (x1 + x2 + x3) / 3.0;
  c.g1 = (c.p[0] + c.p[1] + c.p[2]) / 3.0;
  const Triangle t{x1, x2, x3};
  c.degenerate = t.has_duplicates() || t.collinear();
  return c;
}

OrthocentricConfig orthocenter_from_circumcenter(const NormSpec& spec, const Triangle& tri,
                                                 const Vec2& p4, double tol) {
  const double lambda = circumradius(spec, tri, p4, tol);
  auto cfg = antitriangle(tri.a, tri.b, tri.c, p4);
  cfg.lambda = lambda;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::fabs(spec(cfg.x4() - cfg.p[i]) - lambda));
  }
  cfg.certified = !cfg.degenerate && worst <= tol * (1.0 + lambda);
  return cfg;
}

namespace {

double require_lambda(const OrthocentricConfig& cfg, const char* who) {
  if (!cfg.lambda) {
    throw PreconditionViolation(std::string(who) + ": p4 has not been verified as a circumcenter",
                                0.0);
  }
  if (cfg.degenerate) {
    throw PreconditionViolation(std::string(who) + ": degenerate base triangle", 0.0);
  }
  return *cfg.lambda;
}

}  // namespace

double three_circles_check(const NormSpec& spec, const OrthocentricConfig& cfg) {
  const double lambda = require_lambda(cfg, "three_circles_check");
  double worst = 0.0;
  auto track = [&](const Vec2& a, const Vec2& b) {
    worst = std::max(worst, std::fabs(spec(a - b) - lambda));
  };
  for (int i = 0; i < 3; ++i) {
    track(cfg.x[i], cfg.p4());   // p4 lies on all three circles C(x_i, lambda)
    track(cfg.x4(), cfg.p[i]);   // p1, p2, p3 lie on C(x4, lambda)
    for (int k = 0; k < 3; ++k) {
      if (k != i) track(cfg.x[i], cfg.p[k]);  // pairwise intersections
    }
  }
  return worst;
}

SixPointCircle six_point_circle(const NormSpec& spec, const OrthocentricConfig& cfg) {
  const double lambda = require_lambda(cfg, "six_point_circle");
  SixPointCircle s{cfg.q, 0.5 * lambda, 0.0};
  for (int i = 0; i < 3; ++i) {
    s.max_defect = std::max(s.max_defect, std::fabs(spec(cfg.q - cfg.m[i]) - s.radius));
    s.max_defect = std::max(s.max_defect, std::fabs(spec(cfg.q - cfg.d[i]) - s.radius));
  }
  return s;
}

SystemCheck is_orthocentric_system(const NormSpec& spec, const std::array<Vec2, 4>& pts,
                                   double tol) {
  SystemCheck out;
  double diam = 0.0;
  for (const auto& p : pts) {
    if (!p.finite()) {
      out.reason = "non-finite point";
      return out;
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) diam = std::max(diam, euclidean_length(pts[i] - pts[j]));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (euclidean_length(pts[i] - pts[j]) <= 1e-12 * (1.0 + diam)) {
        out.reason = "degenerate: repeated point";
        return out;
      }
    }
  }

  bool near_miss = false;
  for (int i = 0; i < 4; ++i) {
    std::array<Vec2, 3> rest{};
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) rest[k++] = pts[j];
    }
    const Triangle tri{rest[0], rest[1], rest[2]};
    const Vec2 c = (rest[0] + rest[1] + rest[2] - pts[i]) * 0.5;
    const double r = spec(c - tri.a);
    const double res = max_residual(spec, tri, c);
    if (res <= tol * (1.0 + r)) {
      out.verdict = SystemVerdict::orthocentric;
      out.witness = SystemWitness{i, c, res};
      return out;
    }
    if (res <= 1e3 * tol * (1.0 + r)) near_miss = true;
  }
  if (near_miss) {
    out.reason = "residual within three orders of magnitude of the tolerance";
    return out;
  }
  out.verdict = SystemVerdict::not_orthocentric;
  out.reason = "no point is an orthocenter of the other three";
  return out;
}

}  // namespace ortho
