#include <cmath>

#include "doctest.h"
#include "sfqm/errors.hpp"
#include "sfqm/kinematics.hpp"

using namespace sfqm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("quadratic real-barrier limit collapses exactly") {
  // E=4, Vr=5, Vi=0, alpha=2: kappa~ = i*kappa with kappa = sqrt(Vr-E) = 1.
  ForbiddenKinematics kin = forbidden_kinematics(4.0, {5.0, 0.0, 0.0}, 2.0);
  CHECK(kin.U == 1.0);
  CHECK(kin.theta == 0.0);
  CHECK(kin.chi == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kin.eta == 0.0);
  CHECK(kin.lambda1 == 0.0);  // exact: the rotation coefficient is exactly 0
  CHECK(kin.lambda2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kin.lambda == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(kin.dlambda1_dE == 0.0);  // exact: lambda1 vanishes identically here
  CHECK(kin.dlambda2_dE == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("real barrier at alpha = 2 reduces to sqrt(2m(Vr-E))/hbar") {
  for (double E : {0.5, 1.5, 2.5, 3.5, 4.5}) {
    ForbiddenKinematics kin = forbidden_kinematics(E, {5.0, 0.0, 0.0}, 2.0);
    CHECK(kin.lambda1 == 0.0);
    CHECK(kin.lambda2 == doctest::Approx(std::sqrt(5.0 - E)).epsilon(1e-12));
  }
}

TEST_CASE("strong absorption reference point") {
  // mpmath, 50 digits: E=4, Vr=5, Vi=20, alpha=1.95
  ForbiddenKinematics kin = forbidden_kinematics(4.0, {5.0, 20.0, 0.0}, 1.95);
  CHECK(kin.U == doctest::Approx(401.0).epsilon(1e-15));
  CHECK(kin.theta == doctest::Approx(-1.5208379310729539).epsilon(1e-15));
  CHECK(kin.chi == doctest::Approx(4.4628325578167901).epsilon(1e-14));
  CHECK(kin.eta == doctest::Approx(-4.4141747463791046).epsilon(1e-14));
  CHECK(kin.gamma == doctest::Approx(39.401813130680586).epsilon(1e-14));
  CHECK(kin.lambda == doctest::Approx(-0.83115626795735353).epsilon(1e-14));
  CHECK(kin.lambda1 == doctest::Approx(4.2308946940973812).epsilon(1e-14));
  CHECK(kin.lambda2 == doctest::Approx(4.636954088422616).epsilon(1e-14));
  CHECK(kin.dchi_dE == doctest::Approx(-0.11860902549446753).epsilon(1e-13));
  CHECK(kin.deta_dE == doctest::Approx(-0.10850115277186099).epsilon(1e-13));
  CHECK(kin.dlambda1_dE == doctest::Approx(0.11318906205557253).epsilon(1e-13));
  CHECK(kin.dlambda2_dE ==
        doctest::Approx(-0.11414393243860892).epsilon(1e-13));
  CHECK(kin.dlambda_dE ==
        doctest::Approx(0.025577082933691414).epsilon(1e-13));
}

TEST_CASE("theta saturates toward -pi/2 as absorption dominates") {
  // Same angle whenever Vi/(Vr-E) matches; here Vi=20, Vr-E=1.
  ForbiddenKinematics kin = forbidden_kinematics(4.0, {5.0, 20.0, 0.0}, 2.0);
  CHECK(kin.theta == doctest::Approx(-1.5208379310729539).epsilon(1e-15));
  CHECK(kin.theta > -kPi / 2);
}

TEST_CASE("branch invariants hold across the parameter box") {
  for (double E : {0.5, 1.0, 2.5, 4.0, 4.9}) {
    for (double alpha : {2.0, 1.98, 1.9, 1.7, 1.5, 1.2}) {
      for (double Vi : {0.0, 1.0, 5.0, 20.0, 60.0}) {
        ForbiddenKinematics kin =
            forbidden_kinematics(E, {5.0, Vi, 0.0}, alpha);
        CHECK(kin.theta <= 0.0);
        CHECK(kin.theta > -kPi / 2);
        CHECK(kin.chi > 0.0);
        CHECK(kin.lambda2 > 0.0);  // decay direction is never inverted
        double A2 = std::pow(
            std::sqrt(kin.U) / diffusion_coefficient(alpha), 2.0 / alpha);
        CHECK(kin.gamma == doctest::Approx(A2).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("matching coefficients in the quadratic real limit") {
  // E=4, Vr=5, Vi=0, alpha=2: k=2, kappa=1 so P=2, Q=1/2.
  ForbiddenKinematics kin = forbidden_kinematics(4.0, {5.0, 0.0, 0.0}, 2.0);
  MuPair mu = mu_coefficients(kin, wavenumber_free(4.0, 2.0), 2.0);
  CHECK(std::abs(mu.mu1) < 1e-15);
  CHECK(mu.mu2 == doctest::Approx(-0.75).epsilon(1e-15));
}

TEST_CASE("mu2 vanishes where k equals the decay rate") {
  // alpha=2, Vi=0, E=Vr/2: k = kappa so P = Q.
  ForbiddenKinematics kin = forbidden_kinematics(2.5, {5.0, 0.0, 0.0}, 2.0);
  MuPair mu = mu_coefficients(kin, wavenumber_free(2.5, 2.0), 2.0);
  CHECK(std::abs(mu.mu2) < 1e-15);
  CHECK(std::abs(mu.dmu2_dE) > 1e-3);  // the zero is a crossing, not a flat
}

TEST_CASE("matching coefficient reference point") {
  // mpmath, 50 digits: E=4, Vr=5, Vi=25, alpha=1.9
  ForbiddenKinematics kin = forbidden_kinematics(4.0, {5.0, 25.0, 0.0}, 1.9);
  MuPair mu = mu_coefficients(kin, wavenumber_free(4.0, 1.9), 1.9);
  CHECK(mu.mu1 == doctest::Approx(1.0128865230614692).epsilon(1e-14));
  CHECK(mu.mu2 == doctest::Approx(0.6785121294000906).epsilon(1e-14));
  CHECK(mu.dmu1_dE == doctest::Approx(-0.066248620394278735).epsilon(1e-13));
  CHECK(mu.dmu2_dE == doctest::Approx(-0.1288470726871115).epsilon(1e-13));
}

TEST_CASE("analytic derivatives agree with central differences") {
  for (double E : {1.0, 2.5, 4.0, 4.5}) {
    for (double alpha : {2.0, 1.95, 1.8}) {
      for (double Vi : {0.0, 5.0, 20.0}) {
        double delta = 1e-6 * std::max(1.0, E);
        CHECK(derivative_selfcheck(E, {5.0, Vi, 0.0}, alpha, delta) < 1e-6);
      }
    }
  }
}

TEST_CASE("regime and domain guards") {
  BarrierSpec barrier{5.0, 0.0, 1.0};
  CHECK_THROWS_AS(forbidden_kinematics(5.0, barrier, 2.0), regime_error);
  CHECK_THROWS_AS(forbidden_kinematics(6.0, barrier, 2.0), regime_error);
  CHECK_THROWS_AS(forbidden_kinematics(0.0, barrier, 2.0), domain_error);
  CHECK_THROWS_AS(forbidden_kinematics(-1.0, barrier, 2.0), domain_error);
  CHECK_THROWS_AS(forbidden_kinematics(4.0, barrier, 2.2), domain_error);
  CHECK_THROWS_AS(forbidden_kinematics(4.0, barrier, 1.0), domain_error);
  CHECK_THROWS_AS(forbidden_kinematics(4.0, {5.0, -1.0, 0.0}, 2.0),
                  domain_error);
  CHECK_THROWS_AS(forbidden_kinematics(4.0, {5.0, 0.0, -1.0}, 2.0),
                  domain_error);
  CHECK_THROWS_AS(forbidden_kinematics(4.0, {-5.0, 0.0, 0.0}, 2.0),
                  domain_error);
  // Stencil would leave (0, Vr)
  CHECK_THROWS_AS(derivative_selfcheck(4.9, {5.0, 0.0, 0.0}, 2.0, 0.2),
                  domain_error);
  CHECK_THROWS_AS(derivative_selfcheck(0.1, {5.0, 0.0, 0.0}, 2.0, 0.2),
                  domain_error);
}
