#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracles.hpp"
#include "ortho/errors.hpp"
#include "ortho/detectors.hpp"
#include "ortho/orthogonality.hpp"

using namespace ortho;
using doctest::Approx;

namespace {

const double kR2 = std::sqrt(2.0);

void check_vec(const Vec2& a, const Vec2& b, double tol = 1e-9) {
  CHECK(std::fabs(a.x - b.x) <= tol);
  CHECK(std::fabs(a.y - b.y) <= tol);
}

}  // namespace

TEST_CASE("lemma1_construct euclidean") {
  const NormSpec e = NormSpec::lp(2);
  const Lemma1Instance in = lemma1_construct(e, {1, 0}, {0, 1}, Arc::plus);
  CHECK(in.lambda == Approx(kR2));
  check_vec(in.x3, {0, 1 + kR2});
  check_vec(in.q, {0, kR2 / 2});
  check_vec(in.p1, {-1, kR2});
  check_vec(in.p2, {1, kR2});
  check_vec(in.p3, {0, -1});
  check_vec(in.x4, {0, kR2 - 1});
  CHECK(lemma1_defects(e, in).max() <= 1e-12);

  const Lemma1Instance m = lemma1_construct(e, {1, 0}, {0, 1}, Arc::minus);
  check_vec(m.x3, {0, 1 - kR2});
  CHECK(lemma1_defects(e, m).max() <= 1e-12);
}

TEST_CASE("lemma1_construct max norm") {
  const NormSpec inf = NormSpec::lp(kInf);
  const Lemma1Instance in = lemma1_construct(inf, {1, 0}, {0, 1}, Arc::plus);
  CHECK(in.lambda == 1.0);
  check_vec(in.x3, {0, 2});
  check_vec(in.q, {0, 0.5});
  check_vec(in.p1, {-1, 1});
  check_vec(in.p2, {1, 1});
  check_vec(in.x4, {0, 0});
  CHECK(inf(in.x1 - in.p2) == Approx(1.0));
  CHECK(inf(in.x2 - in.p1) == Approx(1.0));
  CHECK(inf(in.p3 - in.x4) == Approx(1.0));

  CHECK(detector_T2(inf, in) <= 1e-9);
  REQUIRE(detector_T3(inf, in));
  CHECK(*detector_T3(inf, in) <= 1e-9);
  CHECK(detector_T4(inf, {1, 0}, {0, 1}) <= 1e-12);
  const auto t5b = detector_T5b(inf, {1, 0}, {0, 1});
  REQUIRE(t5b);
  CHECK(*t5b <= 1e-9);
}

TEST_CASE("lemma1_construct errors") {
  const NormSpec e = NormSpec::lp(2);
  CHECK_THROWS_AS(lemma1_construct(e, {0, 0}, {0, 1}), DegenerateInput);
  CHECK_THROWS_AS(lemma1_construct(e, {1, 0}, {0, 0}), DegenerateInput);
  CHECK_THROWS_AS(lemma1_construct(e, {1, 0}, {1, 1}), PreconditionViolation);
}

TEST_CASE("euclidean detectors vanish") {
  const NormSpec e = NormSpec::lp(2);
  const Lemma1Instance in = lemma1_construct(e, {1, 0}, {0, 1}, Arc::plus);
  CHECK(detector_T2(e, in) <= 1e-8);
  CHECK(detector_T3(e, in).value() <= 1e-9);
  CHECK(detector_T4(e, {1, 0}, {0, 1}) <= 1e-12);
  CHECK(detector_T5a(e, in).value() <= 1e-9);
  CHECK(detector_T5b(e, {1, 0}, {0, 1}).value() <= 1e-9);
}

TEST_CASE("non-euclidean generic samples are detected") {
  for (double p : {1.3, 1.5, 3.0, 4.0}) {
    const NormSpec s = NormSpec::lp(p);
    const Vec2 x{std::cos(0.3), std::sin(0.3)};
    const Vec2 y = isosceles_partner(s, x, 1.0);
    const Lemma1Instance in = lemma1_construct(s, x, y, Arc::plus);
    const double t4 = detector_T4(s, x, y);
    const double t2 = detector_T2(s, in);
    const double t3 = detector_T3(s, in).value_or(0);
    CHECK(std::max({t2, t3, t4}) > 1e-4);
  }
}

TEST_CASE("detector invariances") {
  const NormSpec specs[] = {NormSpec::lp(1.5), NormSpec::lp(4), NormSpec::lp(kInf)};
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> uc(0.2, 5);
  for (const auto& s : specs) {
    for (int i = 0; i < 40; ++i) {
      const SamplePair pr = sample_pair(s, 99, static_cast<std::size_t>(i));
      const double c = uc(rng);
      const Lemma1Instance a = lemma1_construct(s, pr.x, pr.y, Arc::plus);
      const Lemma1Instance b = lemma1_construct(s, pr.x * c, pr.y * c, Arc::plus);
      const Lemma1Instance n = lemma1_construct(s, -pr.x, -pr.y, Arc::plus);
      CHECK(std::fabs(detector_T2(s, a) - detector_T2(s, b)) <= 1e-8);
      CHECK(std::fabs(detector_T2(s, a) - detector_T2(s, n)) <= 1e-8);
      CHECK(std::fabs(detector_T4(s, pr.x, pr.y) - detector_T4(s, pr.x * c, pr.y * c)) <= 1e-8);
      CHECK(std::fabs(detector_T4(s, pr.x, pr.y) - detector_T4(s, -pr.x, -pr.y)) <= 1e-8);
      const auto t3a = detector_T3(s, a), t3b = detector_T3(s, b), t3n = detector_T3(s, n);
      if (t3a && t3b && t3n) {
        CHECK(std::fabs(*t3a - *t3b) <= 1e-8);
        CHECK(std::fabs(*t3a - *t3n) <= 1e-8);
      }
      const auto t5a = detector_T5a(s, a), t5b = detector_T5a(s, b);
      if (t5a && t5b) CHECK(std::fabs(*t5a - *t5b) <= 1e-8);
      const auto u = detector_T5b(s, pr.x, pr.y), v = detector_T5b(s, pr.x * c, pr.y * c);
      if (u && v) CHECK(std::fabs(*u - *v) <= 1e-8);
      for (const auto* in : {&a, &b, &n}) CHECK(lemma1_defects(s, *in).max() <= 1e-8 * (1 + in->lambda));
    }
  }
}

TEST_CASE("T5a equals T3 in the equal-norm case") {
  const NormSpec specs[] = {NormSpec::lp(1.5), NormSpec::lp(3), NormSpec::lp(kInf)};
  int hits = 0;
  for (const auto& s : specs) {
    for (int i = 0; i < 200; ++i) {
      const SamplePair pr = sample_pair(s, 7, static_cast<std::size_t>(i));
      for (Arc arc : {Arc::plus, Arc::minus}) {
        Lemma1Instance in;
        try {
          in = lemma1_construct(s, pr.x, pr.y, arc);
        } catch (const std::exception&) {
          continue;
        }
        if (std::fabs(s(in.p1 - in.p3) - s(in.p2 - in.p3)) > 1e-12 * in.lambda) continue;
        const auto a = detector_T5a(s, in), b = detector_T3(s, in);
        if (!a || !b) continue;
        ++hits;
        CHECK(std::fabs(*a - *b) <= 1e-9);
      }
    }
    // The symmetric instance always has equal norms.
    const Lemma1Instance sym = lemma1_construct(s, {1, 0}, isosceles_partner(s, {1, 0}, 1), Arc::plus);
    const auto a = detector_T5a(s, sym), b = detector_T3(s, sym);
    if (a && b && std::fabs(s(sym.p1 - sym.p3) - s(sym.p2 - sym.p3)) <= 1e-12) {
      ++hits;
      CHECK(std::fabs(*a - *b) <= 1e-9);
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("bisector-aligned instance") {
  const NormSpec s = NormSpec::lp(1.5);
  const Vec2 x{std::cos(0.4), std::sin(0.4)};
  const Vec2 y = isosceles_partner(s, x, 1.3);
  const auto in = lemma1_bisector_instance(s, x, y);
  REQUIRE(in);
  const auto t5a = detector_T5a(s, *in);
  REQUIRE(t5a);
  CHECK(*t5a <= 1e-8);
  CHECK(std::fabs(s(in->x3 - in->p4) - in->lambda) <= 1e-9 * (1 + in->lambda));
}

TEST_CASE("separation diagnostic") {
  const NormSpec e = NormSpec::lp(2);
  // On the plus arc q lies on the arc the separation statement assumes: L1 is
  // y = 1, p3 = (0,-1) and <p1,p2> is y = sqrt(2).
  const Separation plus = lemma1_separation(lemma1_construct(e, {1, 0}, {0, 1}, Arc::plus));
  CHECK(plus.separated);
  CHECK_FALSE(plus.coincident);
  // On the other arc <p1,p2> is y = -sqrt(2), on the same side as p3.
  const Separation minus = lemma1_separation(lemma1_construct(e, {1, 0}, {0, 1}, Arc::minus));
  CHECK_FALSE(minus.separated);
  CHECK_FALSE(minus.coincident);
}

TEST_CASE("euclideanity_report") {
  SUBCASE("euclidean") {
    const DetectorReport r = euclideanity_report(NormSpec::lp(2), 300, 0);
    CHECK(r.failed == 0);
    for (const auto& d : r.detectors) {
      CHECK(d.max <= 1e-7);
      CHECK(d.n > 0);
    }
    CHECK(consistent_with_euclidean(r));
    CHECK(verdict(r.detectors[0]) == "consistent with Euclidean (max defect <= 1e-07)");
  }
  SUBCASE("l1.5 is flagged") {
    const DetectorReport r = euclideanity_report(NormSpec::lp(1.5), 300, 0);
    double worst = 0;
    for (const auto& d : r.detectors) worst = std::max(worst, d.max);
    CHECK(worst >= 1e-3);
    CHECK_FALSE(consistent_with_euclidean(r));
    CHECK(verdict(r.detectors[2]).rfind("non-Euclidean signature", 0) == 0);
  }
  SUBCASE("determinism and execution policy") {
    for (double p : {1.0, 1.5, kInf}) {
      const NormSpec s = NormSpec::lp(p);
      const DetectorReport a = euclideanity_report(s, 1, 5, Exec::serial);
      const DetectorReport b = euclideanity_report(s, 1, 5, Exec::serial);
      const DetectorReport c = euclideanity_report(s, 64, 5, Exec::serial);
      const DetectorReport d = euclideanity_report(s, 64, 5, Exec::parallel);
      for (int k = 0; k < 5; ++k) {
        CHECK(a.detectors[k].max == b.detectors[k].max);
        CHECK(a.detectors[k].mean == b.detectors[k].mean);
        CHECK(c.detectors[k].max == d.detectors[k].max);
        CHECK(c.detectors[k].mean == d.detectors[k].mean);
        CHECK(c.detectors[k].n == d.detectors[k].n);
        CHECK(c.detectors[k].worst_sample == d.detectors[k].worst_sample);
      }
      CHECK(c.failed == d.failed);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(euclideanity_report(NormSpec::lp(2), 0, 0), std::invalid_argument);
  }
}
