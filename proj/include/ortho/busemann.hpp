#pragma once

#include "ortho/norm.hpp"
#include "ortho/vec2.hpp"

namespace ortho {

/// Ray [origin, through> starting at `origin` and passing through `through`.
struct Ray {
  Vec2 origin;
  Vec2 through;

  Vec2 direction() const { return through - origin; }
};

/// Busemann angular bisector of [p,a> and [p,b>: the ray from p through
/// p + ((a-p)/||a-p|| + (b-p)/||b-p||) / 2. When ||a-p|| = ||b-p|| it passes
/// through (a+b)/2.
/// Throws DegenerateInput if a or b equals p and UndefinedBisector for opposite rays.
Ray busemann_bisector(const NormSpec& spec, const Vec2& p, const Vec2& a, const Vec2& b);

/// Euclidean distance from `point` to the line through line_p and line_q.
/// Collinearity is affine, so the auxiliary Euclidean metric only fixes the
/// units of the report. Throws DegenerateInput when line_p == line_q.
double line_membership_defect(const Vec2& point, const Vec2& line_p, const Vec2& line_q);

/// Signed version: positive when `point` is to the left of line_p -> line_q.
double signed_line_offset(const Vec2& point, const Vec2& line_p, const Vec2& line_q);

}  // namespace ortho
