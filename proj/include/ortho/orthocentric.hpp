#pragma once

#include <array>
#include <optional>
#include <string>

#include "ortho/circumcenter.hpp"
#include "ortho/norm.hpp"
#include "ortho/vec2.hpp"

namespace ortho {

/// S_p(w) = 2p - w, the point reflection through p. An isometry of every norm.
constexpr Vec2 point_symmetry(const Vec2& p, const Vec2& w) { return p * 2.0 - w; }

/// H_{g,-2}(w) = 3g - 2w. Sends a circumcenter to its associated orthocenter
/// when g is the barycenter.
constexpr Vec2 homothety_minus2(const Vec2& g, const Vec2& w) { return g * 3.0 - w * 2.0; }

/// A triangle x1 x2 x3, a reference point p4 and everything derived from them.
///
/// The construction is norm-free affine algebra: m_i are side midpoints,
/// p_i = S_{m_i}(p4) is the p4-antitriangle, q is the common midpoint of the
/// segments [x_i, p_i], x4 = S_q(p4) is the orthocenter associated with p4, d_i
/// are the antitriangle side midpoints and g, g1 the two barycenters. `lambda`
/// is only set once p4 has been verified as a circumcenter.
struct OrthocentricConfig {
  std::array<Vec2, 4> x{};  ///< x[0..2] = x1..x3, x[3] = x4
  std::array<Vec2, 4> p{};  ///< p[0..2] = p1..p3, p[3] = p4
  std::array<Vec2, 3> m{};
  std::array<Vec2, 3> d{};
  Vec2 q;
  Vec2 g;
  Vec2 g1;
  std::optional<double> lambda;
  bool degenerate = false;  ///< base triangle collinear or with repeated vertices
  bool certified = false;   ///< x4 verified as circumcenter of the antitriangle

  Triangle base() const { return {x[0], x[1], x[2]}; }
  Triangle anti() const { return {p[0], p[1], p[2]}; }
  const Vec2& x4() const { return x[3]; }
  const Vec2& p4() const { return p[3]; }
};

OrthocentricConfig antitriangle(const Vec2& x1, const Vec2& x2, const Vec2& x3, const Vec2& p4);

/// Builds the configuration for a verified circumcenter p4 and certifies that
/// x4 is a circumcenter of the p4-antitriangle with the same radius.
/// Throws PreconditionViolation (carrying the residual) if p4 is not a
/// circumcenter within tol * (1 + radius).
OrthocentricConfig orthocenter_from_circumcenter(const NormSpec& spec, const Triangle& tri,
                                                 const Vec2& p4, double tol = kDefaultTol);

/// Largest deviation from lambda among all distances the three-circles property
/// asserts: ||x_i - p4||, ||x_i - p_k|| (i != k), ||x4 - p_i||, in particular
/// ||x1 - p2|| = ||x2 - p1|| = ||p3 - x4|| = lambda.
/// Throws PreconditionViolation if lambda is unset or the config is degenerate.
double three_circles_check(const NormSpec& spec, const OrthocentricConfig& cfg);

struct SixPointCircle {
  Vec2 center;
  double radius = 0.0;
  double max_defect = 0.0;
};

/// Circle C(q, lambda/2) and the largest deviation of m1..m3, d1..d3 from it.
SixPointCircle six_point_circle(const NormSpec& spec, const OrthocentricConfig& cfg);

enum class SystemVerdict { orthocentric, not_orthocentric, indeterminate };

struct SystemWitness {
  int orthocenter_index = -1;  ///< 0-based index of the point that is an orthocenter
  Vec2 circumcenter;           ///< circumcenter of the other three it is associated with
  double residual = 0.0;
};

struct SystemCheck {
  SystemVerdict verdict = SystemVerdict::indeterminate;
  std::optional<SystemWitness> witness;
  std::string reason;
};

/// Decides whether {p1, p2, p3, p4} is an orthocentric system of the norm.
///
/// For each i the only circumcenter of the other three points whose associated
/// orthocenter can be p_i is c = (p_j + p_k + p_l - p_i) / 2 (inverse of the
/// Euler homothety), so membership of c in the circumcenter set is tested
/// directly. This stays exact when the circumcenter set is a continuum.
/// Repeated points or non-finite input give `indeterminate`.
SystemCheck is_orthocentric_system(const NormSpec& spec, const std::array<Vec2, 4>& pts,
                                   double tol = kDefaultTol);

}  // namespace ortho
