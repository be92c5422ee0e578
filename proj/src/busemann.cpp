#include "ortho/busemann.hpp"

#include <cmath>

#include "ortho/errors.hpp"

namespace ortho {

Ray busemann_bisector(const NormSpec& spec, const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 u = a - p;
  const Vec2 v = b - p;
  const double nu = spec(u);
  const double nv = spec(v);
  if (!(nu > 0.0) || !(nv > 0.0)) throw DegenerateInput("busemann_bisector: ray of zero length");
  const Vec2 dir = (u / nu + v / nv) * 0.5;
  // Both summands have norm 1, so a sum this small means opposite directions.
  if (spec(dir) <= 1e-12) throw UndefinedBisector("busemann_bisector: rays are opposite");
  return {p, p + dir};
}

double signed_line_offset(const Vec2& point, const Vec2& line_p, const Vec2& line_q) {
  const Vec2 dir = line_q - line_p;
  const double len = euclidean_length(dir);
  if (!(len > 0.0)) throw DegenerateInput("line_membership_defect: degenerate line");
  return cross(dir, point - line_p) / len;
}

double line_membership_defect(const Vec2& point, const Vec2& line_p, const Vec2& line_q) {
  return std::fabs(signed_line_offset(point, line_p, line_q));
}

}  // namespace ortho
