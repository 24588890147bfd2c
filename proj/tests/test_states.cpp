#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "trient/errors.hpp"
#include "trient/random.hpp"
#include "trient/states.hpp"

using namespace trient;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("states") {
  TEST_CASE("pure state validation") {
    CVector v(8);
    v.setZero();
    v[0] = 1.0;
    CHECK_NOTHROW(PureState({2, 2, 2}, v));
    CHECK_THROWS_AS(PureState({2, 2}, v), ValidationError);
    CHECK_THROWS_AS(PureState({2, 4}, v * 2.0), ValidationError);
    CHECK_THROWS_AS(PureState({1, 8}, v), ValidationError);
    CHECK_THROWS_AS(PureState::normalized({2, 2, 2}, CVector::Zero(8)), ValidationError);
    CHECK(PureState::normalized({2, 2, 2}, v * 3.0).amplitudes()[0].real() == Approx(1.0));
  }

  TEST_CASE("ket construction uses party 0 as the leading digit") {
    const PureState s = PureState::from_kets({{"100", 1.0}});
    CHECK(std::abs(s.amplitudes()[4] - Complex(1.0)) < 1e-15);
    const PureState q = PureState::from_kets({{"310", 1.0}}, {4, 2, 2});
    CHECK(std::abs(q.amplitudes()[3 * 4 + 1 * 2 + 0] - Complex(1.0)) < 1e-15);
    CHECK_THROWS_AS(PureState::from_kets({{"12", 1.0}}), ArgumentError);
  }

  TEST_CASE("partial trace of product and GHZ states") {
    const DensityOperator a = partial_trace(product_zero_state(3), {0});
    CHECK(std::abs(a.matrix()(0, 0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(a.matrix()(1, 1)) < 1e-15);

    const DensityOperator g = partial_trace(ghz_state(pi / 4), {0});
    CHECK(std::abs(g.matrix()(0, 0) - Complex(0.5)) < 1e-15);
    CHECK(std::abs(g.matrix()(1, 1) - Complex(0.5)) < 1e-15);
    CHECK(std::abs(g.matrix()(0, 1)) < 1e-15);
  }

  TEST_CASE("partial trace matches explicit index summation") {
    const PureState psi2 = ghz_state(pi / 8);
    const DensityOperator rho = partial_trace(psi2, {0});
    const CMatrix want = oracle::reduced(psi2.amplitudes(), psi2.dims(), 0);
    CHECK((rho.matrix() - want).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(rho.matrix()(0, 0).real() == Approx(std::pow(std::cos(pi / 8), 2)).epsilon(1e-15));
    CHECK(rho.matrix()(1, 1).real() == Approx(std::pow(std::sin(pi / 8), 2)).epsilon(1e-15));

    Rng rng(11);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, std::vector<int>{3, 2, 4}, std::vector<int>{2, 2, 2, 2}}) {
      const PureState s = haar_state(dims, rng);
      for (int p = 0; p < static_cast<int>(dims.size()); ++p) {
        const CMatrix got = partial_trace(s, {p}).matrix();
        CHECK((got - oracle::reduced(s.amplitudes(), dims, p)).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }

  TEST_CASE("partial trace argument errors") {
    const PureState s = ghz_state(0.3);
    CHECK_THROWS_AS(partial_trace(s, {}), ArgumentError);
    CHECK_THROWS_AS(partial_trace(s, {0, 1, 2}), ArgumentError);
    CHECK_THROWS_AS(partial_trace(s, {0, 0}), ArgumentError);
    CHECK_THROWS_AS(partial_trace(s, {3}), ArgumentError);
    CHECK(partial_trace(s, {2, 0}).dim() == 4);
  }

  TEST_CASE("eigen spectrum") {
    const SchmidtProfile half = eigen_spectrum(CMatrix(CMatrix::Identity(2, 2) * 0.5));
    CHECK(half.lambda_min == Approx(0.5));
    CHECK(half.spectrum[0] == Approx(0.5));
    CMatrix pure = CMatrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    CHECK(eigen_spectrum(pure).lambda_min == 0.0);
    CHECK(eigen_spectrum(pure).spectrum[0] == 1.0);

    const SchmidtProfile p = eigen_spectrum(partial_trace(ghz_state(pi / 8), {0}));
    CHECK(p.lambda_min == Approx(std::pow(std::sin(pi / 8), 2)).epsilon(1e-14));
    CHECK(p.lambda_min == Approx(0.146446609406726).epsilon(1e-12));

    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 0) = 1.0;
    bad(0, 1) = 0.1;
    CHECK_THROWS_AS(eigen_spectrum(bad), ValidationError);
  }

  TEST_CASE("qubit smallest eigenvalue agrees with the quadratic formula") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const PureState s = haar_state({2, 2, 2}, rng);
      const auto lambdas = local_lambdas(s);
      for (int p = 0; p < 3; ++p) {
        const double want = oracle::smaller_eigenvalue(oracle::reduced(s.amplitudes(), s.dims(), p));
        CHECK(std::abs(lambdas[static_cast<std::size_t>(p)] - want) < 1e-13);
      }
    }
  }

  TEST_CASE("density operator validation") {
    CMatrix m = CMatrix::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(DensityOperator{m});
    CHECK_THROWS_AS(DensityOperator{CMatrix(m * 2.0)}, ValidationError);
    CMatrix neg = CMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityOperator{neg}, ValidationError);
    CMatrix nh = m;
    nh(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityOperator{nh}, ValidationError);
  }

  TEST_CASE("impurity") {
    CMatrix pure = CMatrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    CHECK(impurity(DensityOperator(pure)) == Approx(0.0));
    CHECK(impurity(DensityOperator(CMatrix(CMatrix::Identity(2, 2) * 0.5))) == Approx(0.5));
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 0.25;
    d(1, 1) = 0.75;
    CHECK(impurity(DensityOperator(d)) == Approx(0.375).epsilon(1e-15));
  }

  TEST_CASE("haar states are normalized and seed deterministic") {
    Rng a(5), b(5);
    const PureState s = haar_state({2, 3, 2}, a);
    const PureState t = haar_state({2, 3, 2}, b);
    CHECK(s.amplitudes().norm() == Approx(1.0).epsilon(1e-14));
    CHECK((s.amplitudes() - t.amplitudes()).norm() == 0.0);
  }

  TEST_CASE("haar unitary is unitary") {
    Rng rng(9);
    const CMatrix u = haar_unitary(5, rng);
    CHECK((u.adjoint() * u - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-13);
    const auto kraus = random_two_outcome_measurement(rng);
    const CMatrix sum = kraus[0].adjoint() * kraus[0] + kraus[1].adjoint() * kraus[1];
    CHECK((sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-13);
  }
}
