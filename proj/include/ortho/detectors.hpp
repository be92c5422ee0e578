#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ortho/exec.hpp"
#include "ortho/norm.hpp"
#include "ortho/vec2.hpp"

namespace ortho {

/// Which arc of C(p4, lambda) between x1 and x2 carries x3. `plus` is the arc
/// on the same side of the chord <x1, x2> as the center p4; `minus` the other.
enum class Arc { plus, minus };

/// Orthocentric system built from an isosceles-orthogonal pair x, y:
/// p4 = y, p3 = -y, x1 = x, x2 = -x, lambda = ||x + y||, x3 on C(p4, lambda)
/// equidistant from x1 and x2, q = (p3 + x3)/2, p1 = S_q(x1), p2 = S_q(x2),
/// x4 = S_q(p4).
struct Lemma1Instance {
  Vec2 x, y;
  double lambda = 0.0;
  Vec2 x1, x2, x3, x4;
  Vec2 p1, p2, p3, p4;
  Vec2 q;
  Arc arc = Arc::plus;
};

/// Worst deviation in each invariant group of a Lemma1Instance.
struct Lemma1Defects {
  double isosceles = 0.0;     ///< x isosceles orthogonal to y
  double on_circle = 0.0;     ///< ||x3 - p4|| = lambda
  double equidistant = 0.0;   ///< ||x1 - x3|| = ||x2 - x3||
  double q_radius = 0.0;      ///< ||q|| = lambda / 2
  double memberships = 0.0;   ///< ||x1 - p2|| = ||x2 - p1|| = ||p3 - x4|| = lambda

  double max() const;
};

Lemma1Defects lemma1_defects(const NormSpec& spec, const Lemma1Instance& inst);

/// Finds x3 on the chosen arc by bisection on f = ||x2 - x3|| - ||x1 - x3||,
/// which is positive at x1 and negative at x2, then fills in the rest and
/// checks every invariant group at tol * (1 + lambda).
/// Throws DegenerateInput for zero x or y, PreconditionViolation when x, y are
/// not isosceles orthogonal, NumericalFailure when no root is found.
Lemma1Instance lemma1_construct(const NormSpec& spec, const Vec2& x, const Vec2& y,
                                Arc arc = Arc::plus, double tol = kDefaultTol);

/// Instance whose p4 lies on the line of the Busemann bisector of [p3,p1>,
/// [p3,p2>. x3 moves on the arc of C(p4, lambda) from S_{p4}(x1) to S_{p4}(x2)
/// away from p4; at the ends p2 (resp. p1) coincides with p4, so the signed
/// offset of p4 from the bisector line changes sign and is bisected.
/// Returns nullopt if no sign change or no convergence.
std::optional<Lemma1Instance> lemma1_bisector_instance(const NormSpec& spec, const Vec2& x,
                                                       const Vec2& y, double tol = kDefaultTol);

/// Side of L1 = <S_{x1}(p3), S_{x2}(p3)> on which p3 and the line <p1, p2> fall.
struct Separation {
  bool separated = false;  ///< p3 and <p1,p2> strictly on opposite sides of L1
  bool coincident = false; ///< <p1,p2> = L1
};
Separation lemma1_separation(const Lemma1Instance& inst, double tol = kDefaultTol);

/// Largest Birkhoff defect of a side of p1p2p3 against the segment from the
/// opposite vertex to p4, each normalized by the side length:
/// (p1-p2) vs (p3-p4), (p1-p3) vs (p2-p4), (p2-p3) vs (p1-p4).
double detector_T2(const NormSpec& spec, const Lemma1Instance& inst);

/// Distance of p4 from <p3, (p1+p2)/2> over lambda. nullopt when the line is
/// degenerate (p3 = (p1+p2)/2).
std::optional<double> detector_T3(const NormSpec& spec, const Lemma1Instance& inst);

/// With p1 = lambda y/||y|| - x, p2 = lambda y/||y|| + x, p3 = -y (the only
/// antitriangle with p4 on <p3, (p1+p2)/2>), returns | ||p3-p1|| - ||p3-p2|| | / lambda.
double detector_T4(const NormSpec& spec, const Vec2& x, const Vec2& y);

/// Distance of p4 from the line carrying the Busemann bisector of [p3,p1>,
/// [p3,p2>, over lambda. nullopt when the bisector is undefined.
std::optional<double> detector_T5a(const NormSpec& spec, const Lemma1Instance& inst);

/// | ||p3-p1|| - ||p3-p2|| | / lambda on the bisector-aligned instance.
/// nullopt if that instance cannot be constructed.
std::optional<double> detector_T5b(const NormSpec& spec, const Vec2& x, const Vec2& y);

inline constexpr std::array<const char*, 5> kDetectorNames{"T2", "T3", "T4", "T5a", "T5b"};

struct DetectorStats {
  std::string name;
  double max = 0.0;
  double mean = 0.0;
  std::size_t n = 0;
  std::size_t excluded = 0;
  long worst_sample = -1;
};

struct DetectorReport {
  std::string norm_id;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t failed = 0;  ///< samples whose isosceles pair or construction failed
  std::array<DetectorStats, 5> detectors;
};

struct ReportOptions {
  double magnitude_lo = 0.1;
  double magnitude_hi = 10.0;
  double tol = kDefaultTol;
  double failure_quota = 0.5;
};

/// One sampled isosceles pair. Deterministic in (seed, index).
struct SamplePair {
  Vec2 x, y;
};
SamplePair sample_pair(const NormSpec& spec, std::uint64_t seed, std::size_t index,
                       const ReportOptions& opt = {});

/// Samples n isosceles-orthogonal pairs (directions uniform, magnitudes
/// log-uniform), builds isosceles constructions on both arcs and aggregates the five
/// detectors. Results depend only on (spec, n, seed), not on `exec`.
/// Throws NumericalFailure if more than `failure_quota` of the samples fail.
DetectorReport euclideanity_report(const NormSpec& spec, std::size_t n, std::uint64_t seed,
                                   Exec exec = Exec::parallel, const ReportOptions& opt = {});

/// Every detector's max is at most tau.
bool consistent_with_euclidean(const DetectorReport& report, double tau = 1e-7);

/// "consistent with Euclidean (max defect <= 1e-07)" or
/// "non-Euclidean signature (max defect 3.1e-02 >= 1e-07)".
std::string verdict(const DetectorStats& stats, double tau = 1e-7);

}  // namespace ortho
