#include "ortho/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ortho/errors.hpp"
#include "ortho/scalar_search.hpp"

namespace ortho {

double isosceles_defect(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  return std::fabs(spec(x + y) - spec(x - y));
}

BirkhoffMin birkhoff_line_min(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  const double ny = spec(y);
  if (!(ny > 0.0)) throw DegenerateInput("birkhoff_line_min: direction y is zero");
  // Beyond this bracket ||x + t y|| >= |t| ||y|| - ||x|| > ||x||.
  const double bound = 2.0 * spec(x) / ny + 1.0;
  const auto m =
      golden_section_min([&](double t) { return spec(x + y * t); }, -bound, bound, 1e-12);
  return {m.arg, m.value, bound};
}

double birkhoff_defect(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  if (!x.finite() || !y.finite()) throw std::invalid_argument("birkhoff_defect: non-finite input");
  if (y == Vec2{} || x == Vec2{}) return 0.0;
  const double nx = spec(x);
  const auto m = birkhoff_line_min(spec, x, y);
  return std::max(0.0, nx - m.value);
}

OrthoDefect orthogonality_defect(const NormSpec& spec, OrthoKind kind, const Vec2& x,
                                 const Vec2& y) {
  return {kind == OrthoKind::isosceles ? isosceles_defect(spec, x, y)
                                       : birkhoff_defect(spec, x, y),
          kind};
}

Vec2 isosceles_partner(const NormSpec& spec, const Vec2& x, double r, double tol) {
  if (x == Vec2{}) throw DegenerateInput("isosceles_partner: x is the zero vector");
  if (!(r > 0.0)) throw DegenerateInput("isosceles_partner: radius must be positive");

  const Circle c{{}, r};
  auto g = [&](double theta) {
    const Vec2 y = circle_point(spec, c, theta);
    return spec(x + y) - spec(x - y);
  };

  constexpr int kCells = 64;
  const double step = std::numbers::pi / kCells;
  double lo = 0.0;
  double glo = g(lo);
  for (int i = 1; i <= kCells; ++i) {
    // Last node is exactly pi so the antisymmetry guarantees a bracket.
    const double hi = i == kCells ? std::numbers::pi : i * step;
    const double ghi = g(hi);
    if (glo == 0.0 || ghi == 0.0 || std::signbit(glo) != std::signbit(ghi)) {
      const auto root = bisect(g, lo, hi);
      if (!root) break;
      const Vec2 y = circle_point(spec, c, root->arg);
      if (isosceles_defect(spec, x, y) > tol * (spec(x) + r)) {
        throw NumericalFailure("isosceles_partner: bisection did not reach tolerance");
      }
      return y;
    }
    lo = hi;
    glo = ghi;
  }
  throw NumericalFailure("isosceles_partner: no sign change found over [0, pi]");
}

}  // namespace ortho
