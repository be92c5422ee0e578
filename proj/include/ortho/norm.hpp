#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ortho/vec2.hpp"

namespace ortho {

/// Default absolute/relative tolerance for norm-equality predicates.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Options for the sampled sanity checks run on custom gauges at construction.
struct GaugeCheckOptions {
  std::size_t pairs = 10'000;
  double tol = 1e-9;
  std::uint64_t seed = 0x5eed;
};

/// A symmetric convex gauge: the norm of a Minkowski plane.
///
/// Three variants are supported. `lp(p)` with 1 <= p <= inf uses closed forms
/// (p = 1 and p = inf are exact, not limits). `polygonal` takes the boundary
/// vertices of a centrally symmetric convex polygon; they are reordered
/// counterclockwise, checked for symmetry (v_i = -v_{i+n/2} within 1e-12) and
/// then symmetrized exactly so that ||-v|| == ||v|| bit for bit. `custom` wraps
/// a black-box gauge and samples it for symmetry, homogeneity, positivity and
/// the triangle inequality; violations raise ConfigError.
///
/// Instances are immutable and safe to share between threads.
class NormSpec {
 public:
  enum class Kind { lp, polygonal, custom };
  using Gauge = std::function<double(const Vec2&)>;

  static NormSpec lp(double p);
  static NormSpec euclidean() { return lp(2.0); }
  static NormSpec polygonal(std::vector<Vec2> vertices);
  static NormSpec custom(Gauge gauge, std::string name, const GaugeCheckOptions& check = {});

  /// Minkowski functional of the unit ball at v.
  double operator()(const Vec2& v) const;

  Kind kind() const { return kind_; }
  /// Exponent of an lp norm (kInf for the maximum norm). Meaningless for other kinds.
  double p() const { return p_; }
  /// Counterclockwise unit-ball vertices of a polygonal norm.
  std::span<const Vec2> vertices() const { return vertices_; }
  /// Short human-readable identifier, e.g. "lp(1.5)", "lp(inf)", "polygonal(4)".
  const std::string& id() const { return id_; }

 private:
  NormSpec() = default;

  Kind kind_ = Kind::lp;
  double p_ = 2.0;
  std::vector<Vec2> vertices_;
  // Facet normals of the first half of the edges, scaled so that the facet is
  // {w : dot(a, w) = 1}. The gauge is max_i |dot(a_i, v)|.
  std::vector<Vec2> facets_;
  Gauge gauge_;
  std::string id_;
};

inline double norm(const NormSpec& spec, const Vec2& v) { return spec(v); }

inline double distance(const NormSpec& spec, const Vec2& a, const Vec2& b) {
  return spec(a - b);
}

/// Circle C(center, radius) = center + radius * (unit circle of the norm).
struct Circle {
  Vec2 center;
  double radius = 1.0;
};

/// Unit-norm vector in Euclidean direction theta.
Vec2 unit_direction(const NormSpec& spec, double theta);

/// center + radius * u(theta), with u(theta) the unit-norm vector in Euclidean
/// direction theta. Continuous and 2*pi periodic in theta.
Vec2 circle_point(const NormSpec& spec, const Circle& c, double theta);

/// Largest midpoint norm ||(u+v)/2|| over sampled pairs of unit vectors at
/// least `min_separation` radians apart, reported as 1 - max. Zero (or
/// negative) means a flat piece of the unit circle was hit.
double strict_convexity_defect(const NormSpec& spec, std::size_t samples,
                               std::uint64_t seed = 0x5eed, double min_separation = 0.05);

/// False as soon as a sampled chord midpoint lies within `tol` of the unit
/// circle. True is only a probabilistic certificate.
bool strict_convexity_probe(const NormSpec& spec, std::size_t samples = 4096,
                            double tol = kDefaultTol);

}  // namespace ortho
