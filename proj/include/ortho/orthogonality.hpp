#pragma once

#include "ortho/norm.hpp"
#include "ortho/vec2.hpp"

namespace ortho {

enum class OrthoKind { isosceles, birkhoff };

/// Defect-valued orthogonality relation. `value` is 0 when the relation holds.
struct OrthoDefect {
  double value = 0.0;
  OrthoKind kind = OrthoKind::isosceles;
};

/// | ||x+y|| - ||x-y|| |. Zero exactly when x is isosceles orthogonal to y.
double isosceles_defect(const NormSpec& spec, const Vec2& x, const Vec2& y);

/// Minimizer of t -> ||x + t y|| together with the minimum.
struct BirkhoffMin {
  double t = 0.0;
  double value = 0.0;
  double bracket = 0.0;  ///< search interval was [-bracket, bracket]
};

/// Golden-section minimization of the convex function t -> ||x + t y|| over
/// |t| <= 2||x||/||y|| + 1. Requires y != 0.
BirkhoffMin birkhoff_line_min(const NormSpec& spec, const Vec2& x, const Vec2& y);

/// ||x|| - min_t ||x + t y|| (>= 0). Zero exactly when x is Birkhoff orthogonal
/// to y. By convention the defect is 0 for y = 0.
double birkhoff_defect(const NormSpec& spec, const Vec2& x, const Vec2& y);

OrthoDefect orthogonality_defect(const NormSpec& spec, OrthoKind kind, const Vec2& x,
                                 const Vec2& y);

/// A y with ||y|| = r and x isosceles orthogonal to y.
///
/// g(theta) = ||x + y(theta)|| - ||x - y(theta)|| is continuous with
/// g(theta + pi) = -g(theta), so [0, pi] always brackets a root. The first sign
/// change of a 64-cell sweep from theta = 0 is refined by bisection, so the
/// partner with the smallest polar angle in [0, pi] is returned; -y is the other
/// one. Throws DegenerateInput for x = 0 or r <= 0 and NumericalFailure if the
/// refined root still has defect above `tol * (||x|| + r)`.
Vec2 isosceles_partner(const NormSpec& spec, const Vec2& x, double r, double tol = kDefaultTol);

}  // namespace ortho
