#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trient/convex_roof.hpp"
#include "trient/errors.hpp"
#include "trient/triangle.hpp"

using namespace trient;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

DensityOperator noisy_ghz(double p) {
  const CVector g = ghz_state(pi / 4).amplitudes();
  CMatrix m = p * g * g.adjoint() + (1 - p) / 8 * CMatrix::Identity(8, 8);
  return DensityOperator(m, {2, 2, 2});
}

}  // namespace

TEST_SUITE("convex_roof") {
  const MeasureSpec c2{MeasureKind::ConcurrenceSquared, 0.5};

  TEST_CASE("rank one reduces to the pure-state area") {
    const PureState psi = ghz_state(pi / 8);
    const ConvexRoofEstimate e = convex_roof_area_estimate(DensityOperator::from_pure(psi), c2, 50, 1, true);
    CHECK(e.rank == 1);
    CHECK(e.value == Approx(triangle_area(psi, c2, true).value()).epsilon(1e-12));
    CHECK(e.value == Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("mixture of product states has zero area") {
    CMatrix m = CMatrix::Zero(8, 8);
    m(0, 0) = 0.25;
    m(7, 7) = 0.75;
    const ConvexRoofEstimate e = convex_roof_area_estimate(DensityOperator(m, {2, 2, 2}), c2, 20, 1, true);
    CHECK(e.rank == 2);
    CHECK(std::abs(e.value) < 1e-12);
  }

  TEST_CASE("noisy GHZ") {
    const DensityOperator rho = noisy_ghz(0.99);
    const ConvexRoofEstimate small = convex_roof_area_estimate(rho, c2, 50, 3, true);
    const ConvexRoofEstimate large = convex_roof_area_estimate(rho, c2, 400, 3, true);
    CHECK(small.rank == 8);
    CHECK(large.value <= small.value);
    CHECK(large.value > 0.0);
    CHECK(large.value < 1.0);
    CHECK(large.evaluations == 400);
    const ConvexRoofEstimate again = convex_roof_area_estimate(rho, c2, 400, 3, true);
    CHECK(again.value == large.value);
    // Regression value for this seed and budget.
    CHECK(large.value == Approx(0.98950370837700796).epsilon(1e-9));
  }

  TEST_CASE("argument errors") {
    const CMatrix mixed = CMatrix::Identity(27, 27) / 27.0;
    CHECK_THROWS_AS(convex_roof_area_estimate(DensityOperator(mixed, {3, 3, 3}), c2, 10, 1), UnsupportedError);
    const CMatrix four = CMatrix::Identity(16, 16) / 16.0;
    CHECK_THROWS_AS(convex_roof_area_estimate(DensityOperator(four, {2, 2, 2, 2}), c2, 10, 1), ArgumentError);
    CHECK_THROWS_AS(convex_roof_area_estimate(noisy_ghz(0.5), c2, 0, 1), ArgumentError);
  }
}
