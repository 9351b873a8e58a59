#include <cmath>

#include "doctest.h"
#include "sfqm/errors.hpp"
#include "sfqm/tunnel_time.hpp"

using namespace sfqm;

TEST_CASE("zero width takes zero time") {
  for (double alpha : {2.0, 1.9, 1.6}) {
    for (double Vi : {0.0, 20.0}) {
      TunnelTimeResult r = tunneling_time_closed(4.0, {5.0, Vi, 0.0}, alpha);
      CHECK(r.gamma == 0.0);
      CHECK(r.term_phase == 0.0);
      CHECK(r.H > 0.0);
    }
  }
}

TEST_CASE("standard Hartman saturation value") {
  // E=4, Vr=5, alpha=2, Vi=0: the plateau is 2m/(hbar k kappa) = 1/2.
  TunnelTimeResult r = tunneling_time_closed(4.0, {5.0, 0.0, 12.0}, 2.0);
  CHECK(std::abs(r.gamma - 0.5) < 1e-6);
  // mpmath, 50 digits
  CHECK(r.gamma == doctest::Approx(0.49999999955453412).epsilon(1e-12));
}

TEST_CASE("traversal time reference points") {
  // mpmath, 50 digits
  CHECK(tunneling_time_closed(4.0, {5.0, 20.0, 5.0}, 1.95).gamma ==
        doctest::Approx(0.10780035469584749).epsilon(1e-12));
  CHECK(tunneling_time_closed(4.0, {5.0, 0.0, 3.0}, 2.0).gamma ==
        doctest::Approx(0.49217191318366037).epsilon(1e-12));
  CHECK(tunneling_time_closed(4.0, {5.0, 20.0, 6.0}, 2.0).gamma ==
        doctest::Approx(0.51807636007998206).epsilon(1e-12));
  // Absorption can drive the delay negative; the sign is physical.
  CHECK(tunneling_time_closed(2.5, {5.0, 5.0, 2.0}, 1.8).gamma ==
        doctest::Approx(-0.78894297414805289).epsilon(1e-12));
}

TEST_CASE("closed form agrees with the numeric phase derivative") {
  for (double E : {1.0, 2.5, 4.0, 4.5}) {
    for (double alpha : {2.0, 1.95, 1.8}) {
      for (double Vi : {0.0, 5.0, 20.0}) {
        for (double d : {1.0, 5.0}) {
          BarrierSpec barrier{5.0, Vi, d};
          double closed = tunneling_time_closed(E, barrier, alpha).gamma;
          double numeric = tunneling_time_numeric(E, barrier, alpha);
          CHECK(std::abs(closed - numeric) /
                    std::max(std::abs(closed), 1e-12) <
                1e-6);
        }
      }
    }
  }
}

TEST_CASE("decomposition identity and positivity of H") {
  for (double d : {0.5, 2.0, 10.0, 200.0}) {
    TunnelTimeResult r = tunneling_time_closed(4.0, {5.0, 20.0, d}, 1.9);
    CHECK(r.gamma ==
          doctest::Approx(r.term_phase + r.term_fractional + r.term_free)
              .epsilon(1e-15));
    CHECK(r.H > 0.0);
    CHECK(std::isfinite(r.J));
    double kfree = std::sqrt(4.0);  // sqrt(2 m E), m = 1/2
    CHECK(r.term_free == doctest::Approx(d * 0.5 / kfree).epsilon(1e-15));
  }
}

TEST_CASE("standard phase time matches its own reference values") {
  // mpmath, 50 digits
  CHECK(tunneling_time_standard(4.0, 5.0, 3.0) ==
        doctest::Approx(0.49217191318366037).epsilon(1e-12));
  CHECK(tunneling_time_standard(4.0, 5.0, 12.0) ==
        doctest::Approx(0.49999999955453412).epsilon(1e-12));
  CHECK(std::abs(tunneling_time_standard(4.0, 5.0, 30.0) - 0.5) < 1e-9);
  CHECK(tunneling_time_standard(4.0, 5.0, 0.0) == 0.0);
}

TEST_CASE("quadratic real-barrier limit reduces to the standard result") {
  for (double E : {1.0, 2.5, 4.4}) {
    for (double d : {0.5, 2.0, 8.0}) {
      double closed = tunneling_time_closed(E, {5.0, 0.0, d}, 2.0).gamma;
      double standard = tunneling_time_standard(E, 5.0, d);
      CHECK(std::abs(closed - standard) /
                std::max(std::abs(standard), 1e-12) <
            1e-10);
    }
  }
}

TEST_CASE("slope vanishes exactly in the standard closed system") {
  SlopeResult s = asymptotic_slope(4.0, {5.0, 0.0, 0.0}, 2.0);
  CHECK(s.slope == 0.0);  // exact cancellation, not just small
  CHECK(s.intercept == doctest::Approx(0.5).epsilon(1e-12));
  for (double E : {1.0, 2.5, 4.5}) {
    CHECK(asymptotic_slope(E, {5.0, 0.0, 0.0}, 2.0).slope == 0.0);
  }
}

TEST_CASE("slope reference values and signs") {
  // mpmath, 50 digits, E=4, Vr=5 throughout
  SlopeResult s1 = asymptotic_slope(4.0, {5.0, 20.0, 0.0}, 1.95);
  CHECK(s1.slope == doctest::Approx(0.010867438790904877).epsilon(1e-12));
  CHECK(s1.intercept == doctest::Approx(0.053463160741323101).epsilon(1e-12));

  SlopeResult s2 = asymptotic_slope(4.0, {5.0, 0.0, 0.0}, 1.9);
  CHECK(s2.slope == doctest::Approx(-0.17462761326625227).epsilon(1e-12));
  CHECK(s2.intercept == doctest::Approx(0.45180933893865657).epsilon(1e-12));
  CHECK(s2.slope < 0.0);  // fractional dispersion destroys the plateau

  SlopeResult s3 = asymptotic_slope(4.0, {5.0, 20.0, 0.0}, 2.0);
  CHECK(s3.slope == doctest::Approx(0.077009619007836714).epsilon(1e-12));
  CHECK(s3.intercept == doctest::Approx(0.056018646032961769).epsilon(1e-12));
  CHECK(s3.slope > 0.0);  // absorption makes the delay grow with width
}

TEST_CASE("large-width traversal time follows the asymptote") {
  for (double alpha : {2.0, 1.95, 1.9}) {
    for (double Vi : {0.0, 20.0}) {
      BarrierSpec probe{5.0, Vi, 0.0};
      SlopeResult s = asymptotic_slope(4.0, probe, alpha);
      double lambda2 = forbidden_kinematics(4.0, probe, alpha).lambda2;
      for (double exponent : {25.0, 60.0, 400.0}) {
        double d = exponent / lambda2;
        double gamma = tunneling_time_closed(4.0, {5.0, Vi, d}, alpha).gamma;
        CHECK(std::abs(gamma - (s.slope * d + s.intercept)) < 1e-6);
      }
    }
  }
}

TEST_CASE("numeric stencil guards") {
  CHECK_THROWS_AS(tunneling_time_numeric(4.0, {5.0, 0.0, 1.0}, 2.0, 1.5),
                  domain_error);
  CHECK_THROWS_AS(
      tunneling_time_numeric(4.9999999, {5.0, 0.0, 1.0}, 2.0),
      domain_error);
  CHECK_THROWS_AS(tunneling_time_standard(5.0, 5.0, 1.0), domain_error);
  CHECK_THROWS_AS(tunneling_time_standard(6.0, 5.0, 1.0), domain_error);
  CHECK_THROWS_AS(tunneling_time_standard(0.0, 5.0, 1.0), domain_error);
  CHECK_THROWS_AS(tunneling_time_closed(4.0, {5.0, 0.0, -2.0}, 2.0),
                  domain_error);
}
