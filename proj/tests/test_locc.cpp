#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "trient/errors.hpp"
#include "trient/locc.hpp"

using namespace trient;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

PureState case1_w() {
  return PureState::from_kets({{"100", std::sqrt(3.0) / 2}, {"010", std::sqrt(2.0) / 4}, {"001", std::sqrt(2.0) / 4}});
}

LocalMeasurement case1_measurement() {
  CMatrix x1 = CMatrix::Zero(2, 2), x2 = CMatrix::Zero(2, 2);
  x1(0, 0) = std::sqrt(3.0) / 2;
  x1(1, 1) = std::sqrt(2.0) / 2;
  x2(0, 0) = 0.5;
  x2(1, 1) = std::sqrt(2.0) / 2;
  return LocalMeasurement(0, {x1, x2});
}

}  // namespace

TEST_SUITE("locc") {
  TEST_CASE("measurement construction") {
    CHECK_THROWS_AS(LocalMeasurement(0, {CMatrix::Identity(2, 2) * 0.5}), ValidationError);
    CHECK(case1_measurement().completeness_residual() < 1e-15);

    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
      const MeasurementParams p{uniform(rng, -pi, pi), uniform(rng, -pi, pi), uniform(rng, -pi, pi), uniform(rng, -pi, pi)};
      CHECK(measurement_from_params(p).completeness_residual() < 1e-14);
    }
    CHECK_THROWS_AS(measurement_from_params(MeasurementParams{4.0, 0, 0, 0}), ArgumentError);

    // phi1 = phi2 = pi/2 leaves X1 = V and X2 = 0.
    const MeasurementParams p{pi / 2, pi / 2, 0.3, 0.7};
    const LocalMeasurement m = measurement_from_params(p);
    CMatrix v(2, 2);
    v << std::cos(0.3), -std::polar(1.0, 0.7) * std::sin(0.3), std::sin(0.3), std::polar(1.0, 0.7) * std::cos(0.3);
    CHECK((m.kraus()[0] - v).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(m.kraus()[1].cwiseAbs().maxCoeff() < 1e-15);
    const LoccOutcome out = apply_measurement(ghz_state(0.4), m);
    CHECK(out.probabilities.size() == 1);
    CHECK(out.probabilities[0] == Approx(1.0));
  }

  TEST_CASE("standard form") {
    const StandardFormState s{0.1, 0.2, 0.3, 0.4, 0.5};
    CHECK(s.l0() == Approx(std::sqrt(0.7)));
    const PureState st = s.to_state();
    CHECK(st.amplitudes()[0].real() == Approx(std::sqrt(0.7)));
    CHECK(std::abs(st.amplitudes()[4] - std::polar(0.1, 0.5)) < 1e-15);
    CHECK(st.amplitudes()[5].real() == Approx(0.2));
    CHECK(st.amplitudes()[6].real() == Approx(0.3));
    CHECK(st.amplitudes()[7].real() == Approx(0.4));
    CHECK_THROWS_AS((StandardFormState{0.8, 0.8, 0, 0, 0}.l0()), ArgumentError);
    CHECK_THROWS_AS((StandardFormState{-0.1, 0, 0, 0, 0}.l0()), ArgumentError);
  }

  TEST_CASE("W-class branch states") {
    const LoccOutcome out = apply_measurement(case1_w(), case1_measurement());
    REQUIRE(out.probabilities.size() == 2);
    CHECK(out.probabilities[0] == Approx(9.0 / 16).epsilon(1e-14));
    CHECK(out.probabilities[1] == Approx(7.0 / 16).epsilon(1e-14));
    const CVector& a = out.post_states[0].amplitudes();
    CHECK(std::abs(a[4]) == Approx(std::sqrt(6.0) / 3).epsilon(1e-14));
    CHECK(std::abs(a[2]) == Approx(std::sqrt(6.0) / 6).epsilon(1e-14));
    CHECK(std::abs(a[1]) == Approx(std::sqrt(6.0) / 6).epsilon(1e-14));
    const auto l = local_lambdas(out.post_states[0]);
    CHECK(l[0] == Approx(1.0 / 3).epsilon(1e-14));
    CHECK(l[1] == Approx(1.0 / 6).epsilon(1e-14));
  }

  TEST_CASE("identity measurement has zero gap") {
    Rng rng(3);
    const PureState s = haar_state({2, 2, 2}, rng);
    const MonotonicityGap g =
        monotonicity_gap(s, LocalMeasurement::identity(1), MeasureSpec{MeasureKind::VonNeumann, 0.5}, false);
    REQUIRE(g.gap.has_value());
    CHECK(std::abs(*g.gap) < 1e-14);
    CHECK(g.branches.size() == 1);
  }

  TEST_CASE("branch averages agree with a direct computation") {
    Rng rng(4);
    const MeasureSpec spec{MeasureKind::ConcurrenceSquared, 0.25};
    for (int i = 0; i < 20; ++i) {
      const PureState s = haar_state({2, 2, 2}, rng);
      const LocalMeasurement m(static_cast<int>(i % 3), random_two_outcome_measurement(rng));
      const MonotonicityGap g = monotonicity_gap(s, m, spec, false);
      REQUIRE(g.gap.has_value());
      double avg = 0.0;
      const LoccOutcome out = apply_measurement(s, m);
      for (std::size_t k = 0; k < out.probabilities.size(); ++k) {
        std::array<double, 3> sides{};
        for (int p = 0; p < 3; ++p) {
          const double l = oracle::smaller_eigenvalue(oracle::reduced(out.post_states[k].amplitudes(), {2, 2, 2}, p));
          sides[static_cast<std::size_t>(p)] = std::pow(4 * l * (1 - l), 0.25);
        }
        avg += out.probabilities[k] * oracle::heron(sides[0], sides[1], sides[2]);
      }
      CHECK(g.area_before - avg == Approx(*g.gap).epsilon(1e-9));
      CHECK(*g.gap >= -1e-9);
    }
  }

  TEST_CASE("convexity intervals") {
    const auto c2 = convexity_interval(MeasureSpec{MeasureKind::ConcurrenceSquared, 2.0});
    REQUIRE(c2.u_alpha.has_value());
    CHECK(*c2.u_alpha == Approx(0.5 - std::sqrt(3.0) / 6).epsilon(1e-10));
    const auto w = convexity_interval(MeasureSpec{MeasureKind::SchmidtWeight, 1.5});
    REQUIRE(w.u_alpha.has_value());
    CHECK(*w.u_alpha == Approx(0.5));
    CHECK_FALSE(convexity_interval(MeasureSpec{MeasureKind::VonNeumann, 1.0}).u_alpha.has_value());
    CHECK_FALSE(convexity_interval(MeasureSpec{MeasureKind::Impurity, 0.7}).u_alpha.has_value());
    for (MeasureKind k : {MeasureKind::VonNeumann, MeasureKind::Tsallis, MeasureKind::Renyi2}) {
      const auto iv = convexity_interval(MeasureSpec{k, 1.5, 2.0});
      REQUIRE(iv.u_alpha.has_value());
      CHECK(*iv.u_alpha > 0.0);
      CHECK(convexity_sign(MeasureSpec{k, 1.5, 2.0}, 0.5 * *iv.u_alpha) > 0.0);
    }
  }

  TEST_CASE("triangle violation witnesses above alpha = 1") {
    const ViolationWitness w = triangle_violation_witness(MeasureSpec{MeasureKind::SchmidtWeight, 1.5}, 0.1);
    CHECK(w.slack == Approx(2 * std::pow(0.2, 1.5) - std::pow(0.4, 1.5)).epsilon(1e-12));
    CHECK(w.slack == Approx(-0.0741).epsilon(1e-3));
    for (MeasureKind k : {MeasureKind::ConcurrenceSquared, MeasureKind::VonNeumann, MeasureKind::Renyi2}) {
      CHECK(triangle_violation_witness(MeasureSpec{k, 1.2}).slack < -1e-8);
      CHECK(triangle_violation_witness(MeasureSpec{k, 1.1}).slack < 0.0);
    }
    CHECK_THROWS_AS(triangle_violation_witness(MeasureSpec{MeasureKind::VonNeumann, 1.0}), ArgumentError);
  }

  TEST_CASE("sign carrier limits") {
    CHECK(case2_limit(0.75) == Approx(0.5 * (1 - std::pow(4.0, 0.25))).epsilon(1e-14));
    CHECK(case2_limit(0.75) == Approx(-0.2071).epsilon(1e-3));
    const Case2Profile prof = case2_profile(ViolationProbe{MeasureSpec{MeasureKind::ConcurrenceSquared, 0.6}, 1e-8, {0.9, 0.95, 1.0}});
    REQUIRE(prof.points.size() == 3);
    for (const ProfilePoint& p : prof.points) CHECK(p.value < 0.0);
    CHECK_THROWS_AS(case2_profile(ViolationProbe{MeasureSpec{MeasureKind::ConcurrenceSquared, 0.5}, 1e-8, {0.95}}), ArgumentError);
    CHECK_THROWS_AS(case2_profile(ViolationProbe{MeasureSpec{MeasureKind::ConcurrenceSquared, 0.75}, 0.0, {0.95}}), ArgumentError);
  }

  TEST_CASE("sign carrier matches the derivative of g squared") {
    for (MeasureKind k : {MeasureKind::ConcurrenceSquared, MeasureKind::VonNeumann, MeasureKind::SchmidtWeight}) {
      const MeasureSpec spec{k, 0.75};
      const double beta = 1e-3, p2 = 0.95, h = 1e-6;
      const double fd = (case2_g_squared(spec, beta, p2 + h) - case2_g_squared(spec, beta, p2 - h)) / (2 * h);
      const double e = measure_of_lambda(spec, 2 * beta / p2);
      const double want = std::pow(e, 4 * 0.75) / 8 * case2_sign_carrier(spec, beta, p2);
      CHECK(fd == Approx(want).epsilon(1e-5));
    }
  }

  TEST_CASE("realized violations between one half and one") {
    const Case2Violation c2 = case2_violation(MeasureSpec{MeasureKind::ConcurrenceSquared, 0.75}, 1e-4);
    CHECK(c2.gap < -1e-8);
    CHECK(c2.p2 >= c2.p_alpha_beta);
    const MonotonicityGap g = monotonicity_gap(c2.state, c2.measurement, MeasureSpec{MeasureKind::ConcurrenceSquared, 0.75});
    REQUIRE(g.gap.has_value());
    CHECK(*g.gap == Approx(c2.gap).epsilon(1e-9));

    CHECK(case2_violation(MeasureSpec{MeasureKind::VonNeumann, 0.9}, 1e-6).gap < 0.0);
    CHECK_THROWS_AS(case2_violation(MeasureSpec{MeasureKind::VonNeumann, 1.0}, 1e-3), ArgumentError);
    CHECK_THROWS_AS(case2_violation(MeasureSpec{MeasureKind::VonNeumann, 0.5}, 1e-3), SearchFailed);
  }

  TEST_CASE("random violation search") {
    const MeasureSpec half{MeasureKind::ConcurrenceSquared, 0.5};
    const ViolationSearchResult a = random_violation_search(half, 5, 400);
    CHECK(a.gap >= -1e-9);
    CHECK(a.evaluations > 0);

    const MeasureSpec w{MeasureKind::SchmidtWeight, 1.0};
    const ViolationSearchResult b = random_violation_search(w, 5, 2000);
    const ViolationSearchResult c = random_violation_search(w, 5, 2000);
    CHECK(b.gap == c.gap);
    CHECK(b.gap == Approx(standard_form_gap(w, b.state, b.params)).epsilon(1e-12));
    CHECK(b.gap < -1e-3);
  }
}
