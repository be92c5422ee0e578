#include "ortho/circumcenter.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ortho/errors.hpp"

namespace ortho {

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double Triangle::diameter() const {
  return std::max({euclidean_length(b - a), euclidean_length(c - a), euclidean_length(c - b)});
}

bool Triangle::collinear() const {
  const double d = diameter();
  return std::fabs(cross2()) <= 1e-12 * d * d;
}

bool Triangle::has_duplicates() const {
  const double eps = 1e-12 * (1.0 + diameter());
  return euclidean_length(a - b) <= eps || euclidean_length(a - c) <= eps ||
         euclidean_length(b - c) <= eps;
}

std::array<double, 2> bisector_residual(const NormSpec& spec, const Triangle& tri,
                                        const Vec2& x) {
  const double da = spec(x - tri.a);
  return {da - spec(x - tri.b), da - spec(x - tri.c)};
}

double max_residual(const NormSpec& spec, const Triangle& tri, const Vec2& x) {
  const auto r = bisector_residual(spec, tri, x);
  return std::max(std::fabs(r[0]), std::fabs(r[1]));
}

NewtonOutcome circumcenter_newton(const NormSpec& spec, const Triangle& tri, Vec2 x,
                                  const CircumcenterSearch& opt) {
  const double diam = tri.diameter();
  const double h = 1e-6 * diam;
  const double far = 1e6 * (1.0 + diam);
  const Vec2 anchor = tri.barycenter();
  const double stop = 1e-3 * opt.accept_tol;

  NewtonOutcome out;
  auto F = [&](const Vec2& p) { return bisector_residual(spec, tri, p); };
  auto size = [](const std::array<double, 2>& r) {
    return std::max(std::fabs(r[0]), std::fabs(r[1]));
  };

  auto r = F(x);
  double rn = size(r);
  for (; out.iterations < opt.max_iter && rn > stop; ++out.iterations) {
    const auto fxp = F(x + Vec2{h, 0.0});
    const auto fxm = F(x - Vec2{h, 0.0});
    const auto fyp = F(x + Vec2{0.0, h});
    const auto fym = F(x - Vec2{0.0, h});
    const double j00 = (fxp[0] - fxm[0]) / (2.0 * h);
    const double j10 = (fxp[1] - fxm[1]) / (2.0 * h);
    const double j01 = (fyp[0] - fym[0]) / (2.0 * h);
    const double j11 = (fyp[1] - fym[1]) / (2.0 * h);
    const double det = j00 * j11 - j01 * j10;
    const double jmax = std::max({std::fabs(j00), std::fabs(j01), std::fabs(j10), std::fabs(j11)});
    if (!(jmax > 0.0) || !std::isfinite(det)) {
      out.singular = true;
      break;
    }
    Vec2 step;
    if (std::fabs(det) > 1e-10 * jmax * jmax) {
      step = {-(j11 * r[0] - j01 * r[1]) / det, -(-j10 * r[0] + j00 * r[1]) / det};
    } else {
      // Rank-deficient (flat bisector pieces of polygonal balls): minimum-norm
      // least-squares step from the slightly regularized normal equations.
      const double mu = 1e-12 * jmax * jmax;
      const double a = j00 * j00 + j10 * j10 + mu;
      const double b = j00 * j01 + j10 * j11;
      const double d = j01 * j01 + j11 * j11 + mu;
      const double g0 = j00 * r[0] + j10 * r[1];
      const double g1 = j01 * r[0] + j11 * r[1];
      const double nd = a * d - b * b;
      step = {-(d * g0 - b * g1) / nd, -(a * g1 - b * g0) / nd};
    }

    double damp = 1.0;
    bool improved = false;
    for (int k = 0; k <= opt.max_halvings; ++k, damp *= 0.5) {
      const Vec2 trial = x + step * damp;
      const auto rt = F(trial);
      const double rtn = size(rt);
      if (rtn < rn) {
        x = trial;
        r = rt;
        rn = rtn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if (euclidean_length(x - anchor) > far) break;
  }
  out.residual = rn;
  if (rn <= opt.accept_tol && x.finite()) out.root = x;
  return out;
}

namespace {

std::vector<Vec2> start_grid(const Triangle& tri, const CircumcenterSearch& opt) {
  const double diam = tri.diameter();
  const double margin = opt.inflate * diam;
  const double x0 = std::min({tri.a.x, tri.b.x, tri.c.x}) - margin;
  const double x1 = std::max({tri.a.x, tri.b.x, tri.c.x}) + margin;
  const double y0 = std::min({tri.a.y, tri.b.y, tri.c.y}) - margin;
  const double y1 = std::max({tri.a.y, tri.b.y, tri.c.y}) + margin;
  const int n = std::max(1, opt.grid);
  std::vector<Vec2> starts;
  starts.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Cell centers, so no start sits on a vertex or an axis of symmetry.
      const double u = (i + 0.5) / n;
      const double v = (j + 0.5) / n;
      starts.push_back({x0 + u * (x1 - x0), y0 + v * (y1 - y0)});
    }
  }
  return starts;
}

void newton_starts_serial(const NormSpec& spec, const Triangle& tri,
                          const std::vector<Vec2>& starts, const CircumcenterSearch& opt,
                          std::vector<NewtonOutcome>& out) {
  for (std::size_t i = 0; i < starts.size(); ++i) {
    out[i] = circumcenter_newton(spec, tri, starts[i], opt);
  }
}

void newton_starts_parallel(const NormSpec& spec, const Triangle& tri,
                            const std::vector<Vec2>& starts, const CircumcenterSearch& opt,
                            std::vector<NewtonOutcome>& out) {
  const long n = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    out[i] = circumcenter_newton(spec, tri, starts[i], opt);
  }
}

}  // namespace

CircumcenterSet circumcenters(const NormSpec& spec, const Triangle& tri,
                              const CircumcenterSearch& opt, Exec exec) {
  if (!tri.a.finite() || !tri.b.finite() || !tri.c.finite()) {
    throw DegenerateInput("circumcenters: non-finite vertex");
  }
  if (tri.has_duplicates()) throw DegenerateInput("circumcenters: coincident vertices");

  const auto starts = start_grid(tri, opt);
  std::vector<NewtonOutcome> outcomes(starts.size());
  if (exec == Exec::parallel) {
    newton_starts_parallel(spec, tri, starts, opt, outcomes);
  } else {
    newton_starts_serial(spec, tri, starts, opt, outcomes);
  }

  CircumcenterSet set;
  set.starts = static_cast<int>(starts.size());
  struct Hit {
    Vec2 p;
    double residual;
  };
  std::vector<Hit> hits;
  for (const auto& o : outcomes) {
    if (o.singular) ++set.singular;
    if (o.root) hits.push_back({*o.root, o.residual});
  }
  set.converged = static_cast<int>(hits.size());
  std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) {
    return l.p.x != r.p.x ? l.p.x < r.p.x : l.p.y < r.p.y;
  });

  const double radius = opt.dedup_factor * tri.diameter();
  std::vector<Hit> reps;
  for (const auto& h : hits) {
    auto near = std::find_if(reps.begin(), reps.end(), [&](const Hit& r) {
      return euclidean_length(r.p - h.p) < radius;
    });
    if (near == reps.end()) {
      reps.push_back(h);
    } else if (h.residual < near->residual) {
      *near = h;
    }
  }

  for (const auto& r : reps) {
    set.centers.push_back(r.p);
    set.radius_at.push_back(spec(r.p - tri.a));
    set.residual_at.push_back(r.residual);
  }
  set.possibly_continuum = reps.size() >= 3;
  set.degenerate_collinear = set.empty() && tri.collinear();
  return set;
}

double circumradius(const NormSpec& spec, const Triangle& tri, const Vec2& center, double tol) {
  const double r = spec(center - tri.a);
  const double res = max_residual(spec, tri, center);
  if (res > tol * (1.0 + r)) {
    throw PreconditionViolation("circumradius: point is not a circumcenter", res);
  }
  return r;
}

}  // namespace ortho
