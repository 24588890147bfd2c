#include <cmath>

#include "doctest.h"
#include "trient/errors.hpp"
#include "trient/gaussian.hpp"

using namespace trient;
using doctest::Approx;

namespace {

// Purity of the thermal marginal of a two-mode squeezed vacuum, summed in
// the Fock basis.
double tmsv_fock_purity(double r) {
  const double x = std::pow(std::tanh(r), 2);
  double purity = 0.0, w = 1 - x;
  for (int n = 0; n < 2000; ++n) {
    purity += w * w;
    w *= x;
  }
  return purity;
}

}  // namespace

TEST_SUITE("gaussian") {
  TEST_CASE("vacuum") {
    const GaussianCovariance v = GaussianCovariance::vacuum();
    CHECK(v.is_pure());
    for (int p = 0; p < 3; ++p) {
      CHECK(gaussian_impurity(v, {p}) == Approx(0.0));
      CHECK(gaussian_renyi2(v, {p}) == Approx(0.0));
    }
    CHECK(symplectic_form(2).cols() == 4);
    CHECK(symplectic_form(1)(0, 1) == 1.0);
    CHECK(symplectic_form(1)(1, 0) == -1.0);
  }

  TEST_CASE("two-mode squeezed vacuum") {
    const double r = std::acosh(2.0) / 2;
    const GaussianCovariance cm = tmsv_with_vacuum(r);
    CHECK(cm.is_pure());
    CHECK(cm.det({0}) == Approx(4.0).epsilon(1e-12));
    CHECK(cm.det({1}) == Approx(4.0).epsilon(1e-12));
    CHECK(cm.det({2}) == Approx(1.0).epsilon(1e-12));
    CHECK(cm.det({0, 1}) == Approx(1.0).epsilon(1e-12));
    CHECK(gaussian_impurity(cm, {0}) == Approx(0.5).epsilon(1e-12));
    CHECK(gaussian_renyi2(cm, {0}) == Approx(2.0).epsilon(1e-12));
    for (double s : {0.1, 0.5, 1.2}) {
      const GaussianCovariance t = tmsv_with_vacuum(s);
      CHECK(gaussian_impurity(t, {1}) == Approx(1 - tmsv_fock_purity(s)).epsilon(1e-10));
      CHECK(gaussian_renyi2(t, {1}) == Approx(-2 * std::log2(tmsv_fock_purity(s))).epsilon(1e-10));
    }
  }

  TEST_CASE("random pure covariance matrices") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const GaussianCovariance cm = random_pure_tripartite_cm({1, 1, 1}, seed);
      CHECK(cm.sigma().determinant() == Approx(1.0).epsilon(1e-8));
      CHECK(cm.is_pure());
      const GaussianDetReport r = gaussian_det_relations(cm);
      CHECK(r.complements_equal());
      CHECK(r.products_hold());
      CHECK(r.impurity_triangle_holds());
      CHECK(r.renyi2_triangle_holds());
      CHECK(r.impurity_chain_holds());
      for (double d : r.det_single) CHECK(d >= 1 - 1e-9);
    }
    const GaussianCovariance a = random_pure_tripartite_cm({1, 2, 1}, 9);
    const GaussianCovariance b = random_pure_tripartite_cm({1, 2, 1}, 9);
    CHECK(a.sigma() == b.sigma());
    CHECK(a.sigma().rows() == 8);
    CHECK(gaussian_det_relations(a).complements_equal());
  }

  TEST_CASE("validation") {
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(6, 6);
    bad(0, 0) = 0.5;
    bad(1, 1) = 0.5;
    CHECK_THROWS_AS(GaussianCovariance({1, 1, 1}, bad), ValidationError);

    Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(6, 6);
    asym(0, 2) = 0.1;
    CHECK_THROWS_AS(GaussianCovariance({1, 1, 1}, asym), ValidationError);
    CHECK_THROWS_AS(GaussianCovariance({1, 1, 1}, Eigen::MatrixXd::Identity(4, 4)), ValidationError);

    const GaussianCovariance mixed({1, 1, 1}, Eigen::MatrixXd::Identity(6, 6) * 2.0);
    CHECK_FALSE(mixed.is_pure());
    CHECK_THROWS_AS(gaussian_det_relations(mixed), ValidationError);
    CHECK(gaussian_impurity(mixed, {0}) == Approx(0.5));
  }
}
