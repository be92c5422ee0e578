#include "ortho/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "ortho/busemann.hpp"
#include "ortho/errors.hpp"
#include "ortho/orthocentric.hpp"
#include "ortho/orthogonality.hpp"
#include "ortho/scalar_search.hpp"

namespace ortho {

namespace {

constexpr double kPi = std::numbers::pi;

double polar_angle(const Vec2& v) { return std::atan2(v.y, v.x); }

/// Representative of a in (-pi, pi].
double wrap(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a == -kPi ? kPi : a;
}

/// Signed angular span from `from` to `to` passing through `via`, all three
/// directions lying in a cone narrower than pi.
double span_through(double from, double via, double to) {
  return wrap(via - from) + wrap(to - via);
}

Lemma1Instance complete(const Vec2& x, const Vec2& y, double lambda, const Vec2& x3, Arc arc) {
  Lemma1Instance in;
  in.x = x;
  in.y = y;
  in.lambda = lambda;
  in.x1 = x;
  in.x2 = -x;
  in.x3 = x3;
  in.p3 = -y;
  in.p4 = y;
  in.q = midpoint(in.p3, x3);
  in.p1 = point_symmetry(in.q, in.x1);
  in.p2 = point_symmetry(in.q, in.x2);
  in.x4 = point_symmetry(in.q, in.p4);
  in.arc = arc;
  return in;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double Lemma1Defects::max() const {
  return std::max({isosceles, on_circle, equidistant, q_radius, memberships});
}

Lemma1Defects lemma1_defects(const NormSpec& spec, const Lemma1Instance& in) {
  Lemma1Defects d;
  d.isosceles = isosceles_defect(spec, in.x, in.y);
  d.on_circle = std::fabs(spec(in.x3 - in.p4) - in.lambda);
  d.equidistant = std::fabs(spec(in.x1 - in.x3) - spec(in.x2 - in.x3));
  d.q_radius = std::fabs(spec(in.q) - 0.5 * in.lambda);
  d.memberships = std::max({std::fabs(spec(in.x1 - in.p2) - in.lambda),
                            std::fabs(spec(in.x2 - in.p1) - in.lambda),
                            std::fabs(spec(in.p3 - in.x4) - in.lambda)});
  return d;
}

Lemma1Instance lemma1_construct(const NormSpec& spec, const Vec2& x, const Vec2& y, Arc arc,
                                double tol) {
  if (x == Vec2{} || y == Vec2{}) throw DegenerateInput("lemma1_construct: zero vector");
  const double lambda = spec(x + y);
  const double iso = isosceles_defect(spec, x, y);
  if (iso > tol * (1.0 + lambda)) {
    throw PreconditionViolation("lemma1_construct: x is not isosceles orthogonal to y", iso);
  }
  const Vec2 p4 = y;
  const Vec2 x1 = x;
  const Vec2 x2 = -x;

  // The chord <x1, x2> passes through O, so seen from p4 its midpoint is at -y.
  const double from = polar_angle(x1 - p4);
  const double minor = span_through(from, polar_angle(-y), polar_angle(x2 - p4));
  const double span = arc == Arc::minus ? minor : minor - std::copysign(2.0 * kPi, minor);

  const Circle circle{p4, lambda};
  auto point_at = [&](double t) { return circle_point(spec, circle, from + t * span); };
  auto f = [&](double t) {
    const Vec2 p = point_at(t);
    return spec(x2 - p) - spec(x1 - p);
  };
  const auto root = bisect(f, 0.0, 1.0);
  if (!root) throw NumericalFailure("lemma1_construct: no sign change on the arc");

  auto inst = complete(x, y, lambda, point_at(root->arg), arc);
  const double worst = lemma1_defects(spec, inst).max();
  if (worst > tol * (1.0 + lambda)) {
    throw NumericalFailure("lemma1_construct: instance fails its invariants");
  }
  return inst;
}

std::optional<Lemma1Instance> lemma1_bisector_instance(const NormSpec& spec, const Vec2& x,
                                                       const Vec2& y, double tol) {
  if (x == Vec2{} || y == Vec2{}) return std::nullopt;
  const double lambda = spec(x + y);
  const Vec2 p4 = y;
  // Arc between S_{p4}(x1) and S_{p4}(x2) beyond their chord, seen from p4 in
  // the direction of y (||y|| <= lambda keeps y on that side).
  const double from = polar_angle(point_symmetry(p4, x) - p4);
  const double span =
      span_through(from, polar_angle(y), polar_angle(point_symmetry(p4, -x) - p4));
  const Circle circle{p4, lambda};
  auto point_at = [&](double t) { return circle_point(spec, circle, from + t * span); };

  bool undefined = false;
  auto offset = [&](double t) {
    const auto in = complete(x, y, lambda, point_at(t), Arc::plus);
    try {
      const Ray r = busemann_bisector(spec, in.p3, in.p1, in.p2);
      return signed_line_offset(in.p4, in.p3, r.through);
    } catch (const std::exception&) {
      undefined = true;
      return 0.0;
    }
  };
  const auto root = bisect(offset, 0.0, 1.0);
  if (!root || undefined) return std::nullopt;
  auto inst = complete(x, y, lambda, point_at(root->arg), Arc::plus);
  if (std::fabs(root->value) > tol * (1.0 + lambda)) return std::nullopt;
  const auto d = lemma1_defects(spec, inst);
  if (std::max({d.on_circle, d.q_radius, d.memberships}) > tol * (1.0 + lambda)) {
    return std::nullopt;
  }
  return inst;
}

Separation lemma1_separation(const Lemma1Instance& in, double tol) {
  const Vec2 a = point_symmetry(in.x1, in.p3);
  const Vec2 b = point_symmetry(in.x2, in.p3);
  const double scale = tol * (1.0 + euclidean_length(b - a));
  const double s3 = signed_line_offset(in.p3, a, b);
  // <p1, p2> is parallel to L1, so one point fixes its side.
  const double s1 = signed_line_offset(in.p1, a, b);
  Separation s;
  s.coincident = std::fabs(s1) <= scale;
  s.separated = !s.coincident && std::fabs(s3) > scale && (s1 > 0.0) != (s3 > 0.0);
  return s;
}

double detector_T2(const NormSpec& spec, const Lemma1Instance& in) {
  const std::array<std::pair<Vec2, Vec2>, 3> pairs{{
      {in.p1 - in.p2, in.p3 - in.p4},
      {in.p1 - in.p3, in.p2 - in.p4},
      {in.p2 - in.p3, in.p1 - in.p4},
  }};
  double worst = 0.0;
  for (const auto& [side, altitude] : pairs) {
    const double len = spec(side);
    if (!(len > 0.0)) continue;
    worst = std::max(worst, birkhoff_defect(spec, side, altitude) / len);
  }
  return worst;
}

std::optional<double> detector_T3(const NormSpec&, const Lemma1Instance& in) {
  const Vec2 mid = midpoint(in.p1, in.p2);
  if (euclidean_length(mid - in.p3) <= 1e-12 * (1.0 + in.lambda)) return std::nullopt;
  return line_membership_defect(in.p4, in.p3, mid) / in.lambda;
}

double detector_T4(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  const double lambda = spec(x + y);
  const Vec2 u = y * (lambda / spec(y));
  const Vec2 p1 = u - x;
  const Vec2 p2 = u + x;
  const Vec2 p3 = -y;
  return std::fabs(spec(p3 - p1) - spec(p3 - p2)) / lambda;
}

std::optional<double> detector_T5a(const NormSpec& spec, const Lemma1Instance& in) {
  try {
    const Ray r = busemann_bisector(spec, in.p3, in.p1, in.p2);
    return line_membership_defect(in.p4, in.p3, r.through) / in.lambda;
  } catch (const UndefinedBisector&) {
    return std::nullopt;
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

std::optional<double> detector_T5b(const NormSpec& spec, const Vec2& x, const Vec2& y) {
  const auto in = lemma1_bisector_instance(spec, x, y);
  if (!in) return std::nullopt;
  return std::fabs(spec(in->p3 - in->p1) - spec(in->p3 - in->p2)) / in->lambda;
}

SamplePair sample_pair(const NormSpec& spec, std::uint64_t seed, std::size_t index,
                       const ReportOptions& opt) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> log_mag(std::log(opt.magnitude_lo),
                                                 std::log(opt.magnitude_hi));
  const double phi = angle(rng);
  const double mx = std::exp(log_mag(rng));
  const double r = std::exp(log_mag(rng));
  const bool flip = (rng() & 1U) != 0;
  const Vec2 x{mx * std::cos(phi), mx * std::sin(phi)};
  Vec2 y = isosceles_partner(spec, x, r, opt.tol);
  if (flip) y = -y;
  return {x, y};
}

namespace {

struct SampleResult {
  bool failed = false;
  std::array<std::optional<double>, 5> value;
};

std::optional<double> max_of(std::optional<double> a, std::optional<double> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

SampleResult evaluate_sample(const NormSpec& spec, std::uint64_t seed, std::size_t index,
                             const ReportOptions& opt) {
  SampleResult res;
  SamplePair pr;
  try {
    pr = sample_pair(spec, seed, index, opt);
  } catch (const std::exception&) {
    res.failed = true;
    return res;
  }
  std::array<std::optional<Lemma1Instance>, 2> inst;
  const std::array<Arc, 2> arcs{Arc::plus, Arc::minus};
  for (std::size_t k = 0; k < 2; ++k) {
    try {
      inst[k] = lemma1_construct(spec, pr.x, pr.y, arcs[k], opt.tol);
    } catch (const std::exception&) {
    }
  }
  if (!inst[0] && !inst[1]) {
    res.failed = true;
    return res;
  }
  for (const auto& in : inst) {
    if (!in) continue;
    res.value[0] = max_of(res.value[0], detector_T2(spec, *in));
    res.value[1] = max_of(res.value[1], detector_T3(spec, *in));
    res.value[3] = max_of(res.value[3], detector_T5a(spec, *in));
  }
  res.value[2] = detector_T4(spec, pr.x, pr.y);
  res.value[4] = detector_T5b(spec, pr.x, pr.y);
  return res;
}

void evaluate_serial(const NormSpec& spec, std::uint64_t seed, const ReportOptions& opt,
                     std::vector<SampleResult>& out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = evaluate_sample(spec, seed, i, opt);
}

void evaluate_parallel(const NormSpec& spec, std::uint64_t seed, const ReportOptions& opt,
                       std::vector<SampleResult>& out) {
  const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    out[i] = evaluate_sample(spec, seed, static_cast<std::size_t>(i), opt);
  }
}

}  // namespace

DetectorReport euclideanity_report(const NormSpec& spec, std::size_t n, std::uint64_t seed,
                                   Exec exec, const ReportOptions& opt) {
  if (n == 0) throw std::invalid_argument("euclideanity_report: need at least one sample");
  std::vector<SampleResult> results(n);
  if (exec == Exec::parallel) {
    evaluate_parallel(spec, seed, opt, results);
  } else {
    evaluate_serial(spec, seed, opt, results);
  }

  DetectorReport rep;
  rep.norm_id = spec.id();
  rep.samples = n;
  rep.seed = seed;
  std::array<double, 5> sum{};
  for (std::size_t k = 0; k < 5; ++k) rep.detectors[k].name = kDetectorNames[k];
  // Aggregation runs in sample order so the sums do not depend on scheduling.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = results[i];
    if (r.failed) {
      ++rep.failed;
      continue;
    }
    for (std::size_t k = 0; k < 5; ++k) {
      auto& st = rep.detectors[k];
      if (!r.value[k]) {
        ++st.excluded;
        continue;
      }
      const double v = *r.value[k];
      if (st.n == 0 || v > st.max) {
        st.max = v;
        st.worst_sample = static_cast<long>(i);
      }
      sum[k] += v;
      ++st.n;
    }
  }
  if (static_cast<double>(rep.failed) > opt.failure_quota * static_cast<double>(n)) {
    throw NumericalFailure("euclideanity_report: " + std::to_string(rep.failed) + " of " +
                           std::to_string(n) + " sample constructions failed");
  }
  for (std::size_t k = 0; k < 5; ++k) {
    auto& st = rep.detectors[k];
    if (st.n > 0) st.mean = sum[k] / static_cast<double>(st.n);
  }
  return rep;
}

bool consistent_with_euclidean(const DetectorReport& report, double tau) {
  return std::all_of(report.detectors.begin(), report.detectors.end(),
                     [&](const DetectorStats& s) { return s.max <= tau; });
}

std::string verdict(const DetectorStats& stats, double tau) {
  char buf[128];
  if (stats.max <= tau) {
    std::snprintf(buf, sizeof buf, "consistent with Euclidean (max defect <= %g)", tau);
  } else {
    std::snprintf(buf, sizeof buf, "non-Euclidean signature (max defect %.3e >= %g)", stats.max,
                  tau);
  }
  return buf;
}

}  // namespace ortho
