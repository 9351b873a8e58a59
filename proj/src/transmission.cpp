#include "sfqm/transmission.hpp"

#include <cmath>
#include <complex>

#include "sfqm/errors.hpp"

namespace sfqm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// Hyperbolic growth is factored out of the transfer-matrix entries past this
// exponent to keep xi and zeta representable (e^709 overflows a double).
constexpr double kScaleThreshold = 600.0;

}  // namespace

TransmissionResult transmission_forbidden(double E, const BarrierSpec& barrier,
                                          double alpha,
                                          const UnitSystem& units) {
  ForbiddenKinematics kin = forbidden_kinematics(E, barrier, alpha, units);
  double k = wavenumber_free(E, alpha, units);
  MuPair mu = mu_coefficients(kin, k, alpha);

  double a = barrier.d * kin.lambda1;
  double b = barrier.d * kin.lambda2;
  double ca = std::cos(a);
  double sa = std::sin(a);

  TransmissionResult out;
  double ch, sh;
  if (b <= kScaleThreshold) {
    ch = std::cosh(b);
    sh = std::sinh(b);
    out.log_scale = 0.0;
  } else {
    // cosh(b) e^-b and sinh(b) e^-b; both stay in [0.5, 1].
    double em2 = std::exp(-2.0 * b);
    ch = 0.5 * (1.0 + em2);
    sh = 0.5 * (1.0 - em2);
    out.log_scale = b;
  }
  out.xi = ca * (ch + mu.mu1 * sh) + mu.mu2 * sa * ch;
  out.zeta = sa * (sh + mu.mu1 * ch) - mu.mu2 * ca * sh;

  double phi = std::atan2(out.zeta, out.xi);
  out.phase_net = phi - k * barrier.d;
  // Evaluated in log form: xi^2 + zeta^2 can overflow even when xi itself
  // does not (hypot avoids the squares).
  out.modulus =
      std::exp(-out.log_scale - std::log(std::hypot(out.xi, out.zeta)));
  out.t_re = out.modulus * std::cos(out.phase_net);
  out.t_im = out.modulus * std::sin(out.phase_net);
  return out;
}

TransmissionResult transmission_allowed(double E, const BarrierSpec& barrier,
                                        double alpha,
                                        const UnitSystem& units) {
  barrier.validate();
  Query{E, alpha}.validate();
  if (E <= barrier.Vr) {
    throw regime_error(
        "E <= V_r: propagating-regime transmission needs E > V_r "
        "(use the evanescent-regime operation)");
  }

  double D = diffusion_coefficient(alpha, units);
  double Dh = D * std::pow(units.hbar, alpha);
  double k = wavenumber_free(E, alpha, units);

  std::complex<double> reduced(E - barrier.Vr, barrier.Vi);
  std::complex<double> kappa = std::pow(reduced / Dh, 1.0 / alpha);
  std::complex<double> rho =
      std::pow(std::complex<double>(k, 0.0) / kappa, alpha - 1.0);
  std::complex<double> mu = 0.5 * (rho + 1.0 / rho);

  // Im(kappa) >= 0 on the principal branch here, so only e^{+Im(kappa) d}
  // can grow; factor it out past the overflow guard.
  std::complex<double> z = kappa * barrier.d;
  double y = z.imag();
  double scale = (y > kScaleThreshold) ? y : 0.0;
  std::complex<double> iz(-z.imag(), z.real());
  std::complex<double> ep = std::exp(iz - scale);    // e^{ iz - scale}
  std::complex<double> em = std::exp(-iz - scale);   // e^{-iz - scale}
  std::complex<double> cosz = 0.5 * (ep + em);
  std::complex<double> sinz =
      std::complex<double>(0.0, -0.5) * (ep - em);
  std::complex<double> W = cosz - std::complex<double>(0.0, 1.0) * mu * sinz;

  TransmissionResult out;
  out.log_scale = scale;
  out.xi = W.real();
  out.zeta = -W.imag();
  double phi = std::atan2(out.zeta, out.xi);
  out.phase_net = phi - k * barrier.d;
  out.modulus =
      std::exp(-scale - std::log(std::hypot(out.xi, out.zeta)));
  out.t_re = out.modulus * std::cos(out.phase_net);
  out.t_im = out.modulus * std::sin(out.phase_net);
  return out;
}

std::vector<double> phase_profile(std::span<const double> E_grid,
                                  const BarrierSpec& barrier, double alpha,
                                  const UnitSystem& units) {
  barrier.validate();
  for (std::size_t i = 1; i < E_grid.size(); ++i) {
    if (!(E_grid[i] > E_grid[i - 1])) {
      throw domain_error("energy grid must be strictly increasing");
    }
  }
  bool below = false;
  bool above = false;
  for (double E : E_grid) {
    if (E < barrier.Vr) below = true;
    else if (E > barrier.Vr) above = true;
    else throw regime_error("energy grid touches V_r");
  }
  if (below && above) {
    throw regime_error("energy grid straddles V_r; split it at the barrier top");
  }

  std::vector<double> phases;
  phases.reserve(E_grid.size());
  for (double E : E_grid) {
    TransmissionResult t = below
                               ? transmission_forbidden(E, barrier, alpha, units)
                               : transmission_allowed(E, barrier, alpha, units);
    phases.push_back(t.phase_net);
  }
  // Unwrap: shift each point by the multiple of 2 pi that keeps the step from
  // its predecessor inside (-pi, pi].
  for (std::size_t i = 1; i < phases.size(); ++i) {
    double step = phases[i] - phases[i - 1];
    step -= kTwoPi * std::round(step / kTwoPi);
    phases[i] = phases[i - 1] + step;
  }
  return phases;
}

}  // namespace sfqm
