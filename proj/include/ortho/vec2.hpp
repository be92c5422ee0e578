#pragma once

#include <cmath>
#include <ostream>

namespace ortho {

/// Point or vector of the plane. Every construction in the library is an
/// affine combination of these.
struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

  Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
  Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

  constexpr bool operator==(const Vec2&) const = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-D cross product; positive when b is counterclockwise of a.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Auxiliary Euclidean length. Only used for reporting and for metric-free
/// affine predicates (collinearity, clustering radii), never as "the" norm.
inline double euclidean_length(const Vec2& v) { return std::hypot(v.x, v.y); }

constexpr Vec2 midpoint(const Vec2& a, const Vec2& b) { return (a + b) * 0.5; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << '(' << v.x << ", " << v.y << ')';
}

}  // namespace ortho
