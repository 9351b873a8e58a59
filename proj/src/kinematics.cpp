#include "sfqm/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "sfqm/errors.hpp"

namespace sfqm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// cos(pi/alpha) and sin(pi/alpha) via the half-angle shift
//   cos(pi/alpha) = sin(pi (alpha-2) / (2 alpha)),
//   sin(pi/alpha) = cos(pi (alpha-2) / (2 alpha)).
// Written this way the argument is exactly 0 at alpha = 2, so the quadratic
// limit collapses exactly in floating point (the naive cos(pi/2) is ~6e-17
// and would leak into lambda1 and the large-d slope).
struct PiOverAlpha {
  double cos_;
  double sin_;
};

PiOverAlpha pi_over_alpha_trig(double alpha) {
  double t = kPi * (alpha - 2.0) / (2.0 * alpha);
  return {std::sin(t), std::cos(t)};
}

}  // namespace

void BarrierSpec::validate() const {
  if (!std::isfinite(Vr) || Vr <= 0.0) {
    throw domain_error("barrier height V_r must be finite and positive");
  }
  if (!std::isfinite(Vi) || Vi < 0.0) {
    throw domain_error("absorption strength V_i must be finite and >= 0");
  }
  if (!std::isfinite(d) || d < 0.0) {
    throw domain_error("barrier width d must be finite and >= 0");
  }
}

ForbiddenKinematics forbidden_kinematics(double E, const BarrierSpec& barrier,
                                         double alpha,
                                         const UnitSystem& units) {
  barrier.validate();
  Query{E, alpha}.validate();
  if (E >= barrier.Vr) {
    throw regime_error(
        "E >= V_r: evanescent-regime kinematics need E < V_r "
        "(use the propagating-regime operation)");
  }

  double D = diffusion_coefficient(alpha, units);
  double Dh = D * std::pow(units.hbar, alpha);

  ForbiddenKinematics kin;
  kin.E = E;
  double dist = barrier.Vr - E;  // > 0 here
  kin.U = dist * dist + barrier.Vi * barrier.Vi;
  kin.theta = -std::atan(barrier.Vi / dist);

  double A = std::pow(std::sqrt(kin.U) / Dh, 1.0 / alpha);
  double phase = kin.theta / alpha;
  kin.chi = A * std::cos(phase);
  kin.eta = A * std::sin(phase);
  kin.gamma = kin.chi * kin.chi + kin.eta * kin.eta;
  if (!(kin.gamma > 0.0) || !std::isfinite(kin.gamma)) {
    throw domain_error(
        "degenerate branch point: |V - E| vanished (E too close to V_r with "
        "V_i = 0)");
  }
  kin.lambda = -kPi / alpha - std::atan(kin.eta / kin.chi);

  auto [cpa, spa] = pi_over_alpha_trig(alpha);
  kin.lambda1 = kin.chi * cpa - kin.eta * spa;
  kin.lambda2 = kin.eta * cpa + kin.chi * spa;

  // Energy derivatives, chained through U -> (A, theta) -> (chi, eta).
  double dU = -2.0 * dist;
  double dtheta = -barrier.Vi / kin.U;
  double dA = A * dU / (2.0 * alpha * kin.U);
  kin.dchi_dE = dA * std::cos(phase) - A * std::sin(phase) * dtheta / alpha;
  kin.deta_dE = dA * std::sin(phase) + A * std::cos(phase) * dtheta / alpha;
  kin.dlambda_dE =
      -(kin.deta_dE * kin.chi - kin.eta * kin.dchi_dE) / kin.gamma;
  kin.dlambda1_dE = kin.dchi_dE * cpa - kin.deta_dE * spa;
  kin.dlambda2_dE = kin.deta_dE * cpa + kin.dchi_dE * spa;
  return kin;
}

MuPair mu_coefficients(const ForbiddenKinematics& kin, double k_alpha,
                       double alpha) {
  if (!(kin.gamma > 0.0)) {
    throw domain_error("matching coefficients undefined at gamma = 0");
  }
  if (!std::isfinite(k_alpha) || k_alpha <= 0.0) {
    throw domain_error("free wavenumber must be finite and positive");
  }

  double P = std::pow(k_alpha / std::sqrt(kin.gamma), alpha - 1.0);
  double Q = 1.0 / P;
  double s = kin.lambda * (alpha - 1.0);
  double cs = std::cos(s);
  double sn = std::sin(s);

  MuPair mu;
  mu.mu1 = 0.5 * (P + Q) * cs;
  mu.mu2 = 0.5 * (P - Q) * sn;

  // d ln P / dE: dk/dE = k/(alpha E) and d ln sqrt(gamma) / dE =
  // (chi chi' + eta eta')/gamma.
  double srate =
      (alpha - 1.0) *
      (1.0 / (alpha * kin.E) -
       (kin.chi * kin.dchi_dE + kin.eta * kin.deta_dE) / kin.gamma);
  double sweep = (alpha - 1.0) * kin.dlambda_dE;
  mu.dmu1_dE = 0.5 * srate * (P - Q) * cs - 0.5 * (P + Q) * sweep * sn;
  mu.dmu2_dE = 0.5 * srate * (P + Q) * sn + 0.5 * (P - Q) * sweep * cs;
  return mu;
}

double derivative_selfcheck(double E, const BarrierSpec& barrier, double alpha,
                            double delta, const UnitSystem& units) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw domain_error("finite-difference step must be positive");
  }
  if (!(E - delta > 0.0) || !(E + delta < barrier.Vr)) {
    throw domain_error(
        "finite-difference stencil leaves (0, V_r); shrink delta");
  }

  ForbiddenKinematics mid = forbidden_kinematics(E, barrier, alpha, units);
  ForbiddenKinematics lo =
      forbidden_kinematics(E - delta, barrier, alpha, units);
  ForbiddenKinematics hi =
      forbidden_kinematics(E + delta, barrier, alpha, units);
  MuPair mu_mid =
      mu_coefficients(mid, wavenumber_free(E, alpha, units), alpha);
  MuPair mu_lo = mu_coefficients(
      lo, wavenumber_free(E - delta, alpha, units), alpha);
  MuPair mu_hi = mu_coefficients(
      hi, wavenumber_free(E + delta, alpha, units), alpha);

  auto central = [delta](double plus, double minus) {
    return (plus - minus) / (2.0 * delta);
  };
  auto rel = [](double analytic, double numeric) {
    return std::abs(analytic - numeric) /
           std::max(std::abs(analytic), 1.0e-300);
  };

  double worst = 0.0;
  worst = std::max(worst, rel(mid.dchi_dE, central(hi.chi, lo.chi)));
  worst = std::max(worst, rel(mid.deta_dE, central(hi.eta, lo.eta)));
  worst = std::max(worst, rel(mid.dlambda1_dE, central(hi.lambda1, lo.lambda1)));
  worst = std::max(worst, rel(mid.dlambda2_dE, central(hi.lambda2, lo.lambda2)));
  worst = std::max(worst, rel(mu_mid.dmu1_dE, central(mu_hi.mu1, mu_lo.mu1)));
  worst = std::max(worst, rel(mu_mid.dmu2_dE, central(mu_hi.mu2, mu_lo.mu2)));
  return worst;
}

}  // namespace sfqm
