#include "sfqm/tunnel_time.hpp"

#include <algorithm>
#include <cmath>

#include "sfqm/errors.hpp"
#include "sfqm/transmission.hpp"

namespace sfqm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

double free_wavenumber_quadratic(double E, const UnitSystem& units) {
  return std::sqrt(2.0 * units.mass * E) / units.hbar;
}

}  // namespace

TunnelTimeResult tunneling_time_closed(double E, const BarrierSpec& barrier,
                                       double alpha,
                                       const UnitSystem& units) {
  ForbiddenKinematics kin = forbidden_kinematics(E, barrier, alpha, units);
  double D = diffusion_coefficient(alpha, units);
  double k = wavenumber_free(E, alpha, units);
  MuPair mu = mu_coefficients(kin, k, alpha);

  double d = barrier.d;
  double a2 = 2.0 * d * kin.lambda1;
  double b = d * kin.lambda2;

  // Everything is multiplied by e^(-2 d lambda2): the trig terms carry E2,
  // cosh and sinh become (1 +- e^(-4b))/2. The ratio J/H is unchanged and
  // both factors stay finite for any opacity.
  double E2 = std::exp(-2.0 * b);
  double E4 = std::exp(-4.0 * b);
  double ch2 = 0.5 * (1.0 + E4);
  double sh2 = 0.5 * (1.0 - E4);
  double c2 = std::cos(a2) * E2;
  double s2 = std::sin(a2) * E2;

  double m1 = mu.mu1, m2 = mu.mu2;
  double m1p = mu.dmu1_dE, m2p = mu.dmu2_dE;
  double l1p = kin.dlambda1_dE, l2p = kin.dlambda2_dE;
  double msq = m1 * m1 + m2 * m2;

  TunnelTimeResult out;
  out.J = 0.5 * ((m1 * m2p - m2 * (m1p + 2.0 * d * l2p)) * c2 +
                 (m1p * m2 - m1 * m2p + 2.0 * d * m1 * l1p) * ch2 +
                 (m1p - d * l2p * (msq - 1.0)) * s2 +
                 (-m2p + d * l1p * (msq + 1.0)) * sh2);
  out.H = 0.5 * ((msq + 1.0) * ch2 - (msq - 1.0) * c2) + m2 * s2 + m1 * sh2;

  double kfree = free_wavenumber_quadratic(E, units);
  out.term_phase = units.hbar * out.J / out.H;
  out.term_fractional = -d * std::pow(k, 1.0 - alpha) /
                        (alpha * D * std::pow(units.hbar, alpha - 1.0));
  out.term_free = d * units.mass / (units.hbar * kfree);
  out.gamma = out.term_phase + out.term_fractional + out.term_free;
  return out;
}

double tunneling_time_numeric(double E, const BarrierSpec& barrier,
                              double alpha, double h,
                              const UnitSystem& units) {
  barrier.validate();
  Query{E, alpha}.validate();
  if (h <= 0.0) h = 1.0e-6 * std::max(1.0, E);
  if (!(E - h > 0.0) || !(E + h < barrier.Vr)) {
    throw domain_error("phase stencil (E-h, E+h) must stay inside (0, V_r)");
  }

  double lo = transmission_forbidden(E - h, barrier, alpha, units).phase_net;
  double mid = transmission_forbidden(E, barrier, alpha, units).phase_net;
  double hi = transmission_forbidden(E + h, barrier, alpha, units).phase_net;
  // Pull both ends onto the middle point's branch before differencing.
  lo -= kTwoPi * std::round((lo - mid) / kTwoPi);
  hi -= kTwoPi * std::round((hi - mid) / kTwoPi);
  double dphi = (hi - lo) / (2.0 * h);

  double kfree = free_wavenumber_quadratic(E, units);
  return units.hbar * dphi +
         barrier.d * units.mass / (units.hbar * kfree);
}

double tunneling_time_standard(double E, double V, double d,
                               const UnitSystem& units) {
  units.validate();
  if (!std::isfinite(E) || !std::isfinite(V) || E <= 0.0 || E >= V) {
    throw domain_error("standard phase time needs 0 < E < V");
  }
  if (!std::isfinite(d) || d < 0.0) {
    throw domain_error("barrier width d must be finite and >= 0");
  }

  double m = units.mass;
  double hbar = units.hbar;
  double k = std::sqrt(2.0 * m * E) / hbar;
  double kappa = std::sqrt(2.0 * m * (V - E)) / hbar;

  // Phase time of atan(g tanh(kappa d)) with g = (k^2 - kappa^2)/(2 k kappa);
  // the flight corrections cancel identically at quadratic dispersion.
  double g = (k * k - kappa * kappa) / (2.0 * k * kappa);
  double k2 = k * k, q2 = kappa * kappa;
  double gp = (2.0 * m / (hbar * hbar)) * (k2 + q2) * (k2 + q2) /
              (4.0 * k2 * k * q2 * kappa);
  double kap = -m / (hbar * hbar * kappa);
  double th = std::tanh(kappa * d);
  double sech2 = 1.0 - th * th;
  double F = g * th;
  double Fp = gp * th + g * d * kap * sech2;
  return hbar * Fp / (1.0 + F * F);
}

SlopeResult asymptotic_slope(double E, const BarrierSpec& barrier, double alpha,
                             const UnitSystem& units) {
  ForbiddenKinematics kin = forbidden_kinematics(E, barrier, alpha, units);
  double D = diffusion_coefficient(alpha, units);
  double k = wavenumber_free(E, alpha, units);
  MuPair mu = mu_coefficients(kin, k, alpha);
  double kfree = free_wavenumber_quadratic(E, units);

  SlopeResult out;
  out.slope = units.hbar * kin.dlambda1_dE -
              std::pow(k, 1.0 - alpha) /
                  (alpha * D * std::pow(units.hbar, alpha - 1.0)) +
              units.mass / (units.hbar * kfree);
  double m1 = mu.mu1, m2 = mu.mu2;
  out.intercept = units.hbar *
                  (mu.dmu1_dE * m2 - mu.dmu2_dE * (m1 + 1.0)) /
                  ((1.0 + m1) * (1.0 + m1) + m2 * m2);
  return out;
}

}  // namespace sfqm
