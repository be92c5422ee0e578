#include "ortho/norm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

double lp_value(double p, const Vec2& v) {
  const double ax = std::fabs(v.x);
  const double ay = std::fabs(v.y);
  if (p == 1.0) return ax + ay;
  if (p == kInf) return std::max(ax, ay);
  if (p == 2.0) return std::hypot(ax, ay);
  const double m = std::max(ax, ay);
  if (m == 0.0) return 0.0;
  // Factor out the larger coordinate so pow never overflows.
  const double s = std::pow(ax / m, p) + std::pow(ay / m, p);
  return m * std::pow(s, 1.0 / p);
}

double signed_area(std::span<const Vec2> poly) {
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    a += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return 0.5 * a;
}

std::string format_p(double p) {
  if (p == kInf) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

Vec2 random_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> log_mag(std::log(1e-3), std::log(1e3));
  const double t = angle(rng);
  const double r = std::exp(log_mag(rng));
  return {r * std::cos(t), r * std::sin(t)};
}

void check_custom_gauge(const NormSpec::Gauge& g, const std::string& name,
                        const GaugeCheckOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> scale(-10.0, 10.0);
  auto fail = [&](const std::string& what) {
    throw ConfigError("custom gauge '" + name + "': " + what);
  };
  if (g(Vec2{}) != 0.0) fail("gauge of the zero vector is not 0");
  for (std::size_t i = 0; i < opt.pairs; ++i) {
    const Vec2 u = random_vector(rng);
    const Vec2 v = random_vector(rng);
    const double gu = g(u);
    const double gv = g(v);
    if (!std::isfinite(gu) || !std::isfinite(gv)) fail("non-finite value");
    if (!(gu > 0.0) || !(gv > 0.0)) fail("not strictly positive on a nonzero vector");
    if (std::fabs(g(-u) - gu) > opt.tol * gu) fail("not symmetric");
    const double t = scale(rng);
    if (std::fabs(g(u * t) - std::fabs(t) * gu) > opt.tol * std::fabs(t) * gu) {
      fail("not positively homogeneous");
    }
    if (g(u + v) > gu + gv + opt.tol * (gu + gv)) fail("violates the triangle inequality");
  }
}

}  // namespace

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0)) {
    throw ConfigError("lp norm requires 1 <= p <= inf, got p = " + format_p(p));
  }
  NormSpec n;
  n.kind_ = Kind::lp;
  n.p_ = p;
  n.id_ = "lp(" + format_p(p) + ")";
  return n;
}

NormSpec NormSpec::polygonal(std::vector<Vec2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 4 || n % 2 != 0) {
    throw ConfigError("polygonal norm needs an even number (>= 4) of vertices");
  }
  for (const auto& v : vertices) {
    if (!v.finite()) throw ConfigError("polygonal norm: non-finite vertex");
  }
  if (signed_area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());

  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const Vec2 s = vertices[i] + vertices[i + half];
    if (std::fabs(s.x) > 1e-12 || std::fabs(s.y) > 1e-12) {
      throw ConfigError("polygonal norm: vertex set is not centrally symmetric");
    }
  }
  for (std::size_t i = 0; i < half; ++i) vertices[i + half] = -vertices[i];

  std::vector<Vec2> facets;
  facets.reserve(half);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n];
    const Vec2& c = vertices[(i + 2) % n];
    if (cross(b - a, c - b) < -1e-12) throw ConfigError("polygonal norm: polygon is not convex");
    const Vec2 e = b - a;
    const Vec2 outward{e.y, -e.x};
    const double h = dot(outward, a);
    if (!(h > 0.0)) {
      throw ConfigError("polygonal norm: origin is not interior to the polygon");
    }
    if (i < half) facets.push_back(outward / h);
  }

  NormSpec out;
  out.kind_ = Kind::polygonal;
  out.vertices_ = std::move(vertices);
  out.facets_ = std::move(facets);
  out.id_ = "polygonal(" + std::to_string(n) + ")";
  return out;
}

NormSpec NormSpec::custom(Gauge gauge, std::string name, const GaugeCheckOptions& check) {
  if (!gauge) throw ConfigError("custom norm: empty gauge");
  check_custom_gauge(gauge, name, check);
  NormSpec out;
  out.kind_ = Kind::custom;
  out.gauge_ = std::move(gauge);
  out.id_ = std::move(name);
  return out;
}

double NormSpec::operator()(const Vec2& v) const {
  switch (kind_) {
    case Kind::lp:
      return lp_value(p_, v);
    case Kind::polygonal: {
      // The ray from O through v leaves the polygon through the facet that
      // maximizes dot(a_i, v); that maximum is the scaling factor.
      double g = 0.0;
      for (const auto& a : facets_) g = std::max(g, std::fabs(dot(a, v)));
      return g;
    }
    case Kind::custom:
      return gauge_(v);
  }
  return 0.0;
}

Vec2 unit_direction(const NormSpec& spec, double theta) {
  const Vec2 u{std::cos(theta), std::sin(theta)};
  return u / spec(u);
}

Vec2 circle_point(const NormSpec& spec, const Circle& c, double theta) {
  return c.center + unit_direction(spec, theta) * c.radius;
}

double strict_convexity_defect(const NormSpec& spec, std::size_t samples, std::uint64_t seed,
                               double min_separation) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> gap(min_separation, std::numbers::pi - min_separation);
  double worst = kInf;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = angle(rng);
    const Vec2 u = unit_direction(spec, t);
    const Vec2 v = unit_direction(spec, t + gap(rng));
    worst = std::min(worst, 1.0 - spec(midpoint(u, v)));
  }
  return worst;
}

bool strict_convexity_probe(const NormSpec& spec, std::size_t samples, double tol) {
  return strict_convexity_defect(spec, samples) > tol;
}

}  // namespace ortho
