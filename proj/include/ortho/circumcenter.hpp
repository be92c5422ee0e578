#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ortho/exec.hpp"
#include "ortho/norm.hpp"
#include "ortho/vec2.hpp"

namespace ortho {

struct Triangle {
  Vec2 a, b, c;

  Vec2 vertex(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
  Vec2 barycenter() const { return (a + b + c) / 3.0; }
  /// Largest Euclidean side length.
  double diameter() const;
  /// Twice the signed area.
  double cross2() const { return cross(b - a, c - a); }
  /// |cross| <= 1e-12 * diameter^2 (scale-relative collinearity).
  bool collinear() const;
  /// Some pair of vertices coincides within 1e-12 * (1 + diameter).
  bool has_duplicates() const;
};

/// (||x-a|| - ||x-b||, ||x-a|| - ||x-c||). Both vanish exactly on the
/// circumcenter set.
std::array<double, 2> bisector_residual(const NormSpec& spec, const Triangle& tri, const Vec2& x);

/// max of the absolute residual components.
double max_residual(const NormSpec& spec, const Triangle& tri, const Vec2& x);

struct CircumcenterSearch {
  int grid = 16;              ///< grid x grid Newton starts
  double inflate = 2.0;       ///< bounding box grown by inflate * diameter on each side
  int max_iter = 60;          ///< Newton iterations per start
  int max_halvings = 40;      ///< step damping limit
  double accept_tol = 1e-9;   ///< absolute, per residual component
  double dedup_factor = 1e-6; ///< cluster radius = dedup_factor * diameter
};

struct CircumcenterSet {
  std::vector<Vec2> centers;
  std::vector<double> radius_at;
  std::vector<double> residual_at;
  /// >= 3 mutually distant centers: the set is probably a continuum (flat
  /// bisector pieces of a non-strictly convex norm) and only representatives
  /// are listed.
  bool possibly_continuum = false;
  /// Input is collinear and nothing was found.
  bool degenerate_collinear = false;
  int starts = 0;
  int converged = 0;
  int singular = 0;

  bool empty() const { return centers.empty(); }
  std::size_t size() const { return centers.size(); }
};

/// Damped Newton with a central finite-difference Jacobian on the bisector
/// residual, started from a single point. Returns the converged point if its
/// residual is within `accept_tol`; a singular Jacobian abandons the start.
struct NewtonOutcome {
  std::optional<Vec2> root;
  double residual = 0.0;
  int iterations = 0;
  bool singular = false;
};
NewtonOutcome circumcenter_newton(const NormSpec& spec, const Triangle& tri, Vec2 start,
                                  const CircumcenterSearch& opt = {});

/// Multi-start search for C(abc) = {x : ||x-a|| = ||x-b|| = ||x-c||}.
///
/// Starts form a grid over the triangle's bounding box; converged roots are
/// sorted lexicographically and clustered greedily, so the result does not
/// depend on the execution policy. The set may be empty (no circumcenter, e.g.
/// collinear points in a strictly convex norm) or have several entries.
/// Throws DegenerateInput when two vertices coincide.
CircumcenterSet circumcenters(const NormSpec& spec, const Triangle& tri,
                              const CircumcenterSearch& opt = {}, Exec exec = Exec::parallel);

/// ||center - a||. Throws PreconditionViolation when `center` is not a
/// circumcenter within tol * (1 + radius).
double circumradius(const NormSpec& spec, const Triangle& tri, const Vec2& center,
                    double tol = kDefaultTol);

}  // namespace ortho
