#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "trient/errors.hpp"
#include "trient/hybrid.hpp"

using namespace trient;
using doctest::Approx;

TEST_SUITE("hybrid") {
  TEST_CASE("mode impurity matches a truncated Fock computation") {
    for (double a1 = -2.0; a1 <= 2.0; a1 += 0.5) {
      for (double a2 = -2.0; a2 <= 2.0; a2 += 0.5) {
        const HybridImpurities h = hybrid_impurities(HybridState{.alpha1 = a1, .alpha2 = a2});
        CHECK(h.impurity[2] == Approx(oracle::fock_mode_impurity(a1, a2, 0.5, 0.5)).epsilon(1e-10));
        CHECK(h.impurity[0] == Approx(0.5).epsilon(1e-14));
        CHECK(h.impurity[1] == Approx(0.5).epsilon(1e-14));
      }
    }
    const double c0 = 0.6, c1 = 0.8;
    const HybridImpurities u = hybrid_impurities(HybridState{c0, c1, 0.3, -1.1});
    CHECK(u.impurity[0] == Approx(2 * 0.36 * 0.64).epsilon(1e-14));
    CHECK(u.impurity[2] == Approx(oracle::fock_mode_impurity(0.3, -1.1, 0.36, 0.64)).epsilon(1e-10));
  }

  TEST_CASE("closed-form points") {
    const HybridImpurities same = hybrid_impurities(HybridState{.alpha1 = 0.7, .alpha2 = 0.7});
    CHECK(same.overlap == Approx(1.0));
    CHECK(std::abs(same.impurity[2]) < 1e-14);

    const HybridImpurities unit = hybrid_impurities(HybridState{.alpha1 = 0.0, .alpha2 = 1.0});
    CHECK(unit.overlap == Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(unit.impurity[2] == Approx(0.5 * (1 - std::exp(-1.0))).epsilon(1e-14));
    CHECK(unit.mode_spectrum[0] + unit.mode_spectrum[1] == Approx(1.0));
    CHECK(unit.mode_spectrum[0] >= unit.mode_spectrum[1]);

    const HybridImpurities far = hybrid_impurities(HybridState{.alpha1 = -10.0, .alpha2 = 10.0});
    CHECK(far.impurity[2] == Approx(0.5).epsilon(1e-14));
    CHECK(coherent_overlap(1.0, -1.0) == Approx(std::exp(-2.0)));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(hybrid_impurities(HybridState{1.0, 1.0, 0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(hybrid_impurities(HybridState{.alpha1 = std::nan(""), .alpha2 = 0.0}), ValidationError);
    CHECK_THROWS_AS(hybrid_area_sweep(1, -2, 2, 0.5), ArgumentError);
    CHECK_THROWS_AS(hybrid_area_sweep(5, 2, 2, 0.5), ArgumentError);
  }

  TEST_CASE("area sweep") {
    const HybridSweep s = hybrid_area_sweep(21, -2.0, 2.0, 0.5);
    REQUIRE(s.points.size() == 441);
    CHECK(s.all_hold());
    CHECK(s.max_diagonal_area() < 1e-10);
    CHECK(s.max_area() <= 0.5 + 1e-10);
    CHECK(s.max_area() > 0.4);
    for (int i = 0; i < 21; ++i) {
      for (int j = 0; j < 21; ++j) {
        CHECK(s.points[static_cast<std::size_t>(i * 21 + j)].area ==
              Approx(s.points[static_cast<std::size_t>(j * 21 + i)].area).epsilon(1e-14));
      }
    }
    const HybridSweepPoint& corner = s.points.front();
    CHECK(corner.alpha1 == -2.0);
    CHECK(corner.alpha2 == -2.0);
    CHECK(s.points[20].alpha2 == 2.0);
  }
}
