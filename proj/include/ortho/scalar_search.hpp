#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace ortho {

struct ScalarMin {
  double arg;
  double value;
};

/// Golden-section search for the minimum of a convex (or unimodal) function on
/// [lo, hi], run until the bracket is narrower than `width`. Derivative free, so
/// piecewise-linear functions (polygonal norms) are handled like smooth ones.
template <class F>
ScalarMin golden_section_min(F&& f, double lo, double hi, double width = 1e-12,
                             int max_iter = 400) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double m = 0.5 * (a + b);
  ScalarMin best{m, f(m)};
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

struct Root {
  double arg;
  double value;
};

/// Bisection on [lo, hi] for a continuous f with f(lo), f(hi) of opposite sign
/// (or one of them zero). Returns nullopt when the bracket has no sign change.
/// The returned point is whichever final bracket end has the smaller |f|.
template <class F>
std::optional<Root> bisect(F&& f, double lo, double hi, double width = 1e-15,
                           int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return Root{lo, flo};
  if (fhi == 0.0) return Root{hi, fhi};
  if (std::signbit(flo) == std::signbit(fhi)) return std::nullopt;
  for (int it = 0; it < max_iter && std::fabs(hi - lo) > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return Root{mid, fm};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return std::fabs(flo) <= std::fabs(fhi) ? Root{lo, flo} : Root{hi, fhi};
}

}  // namespace ortho
