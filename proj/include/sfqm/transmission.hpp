#pragma once

#include <span>
#include <vector>

#include "sfqm/kinematics.hpp"

namespace sfqm {

// Transmission amplitude through the barrier, written as
//   T = e^(-i k_alpha d) / (xi - i zeta),
// so |T| = 1 / sqrt(xi^2 + zeta^2) and the net phase (transmitted minus free
// flight) is phase_net = atan2(zeta, xi) - k_alpha d.
//
// For an opaque barrier xi and zeta grow like e^(lambda2 d); past
// lambda2 * d = 600 they are returned divided by e^(log_scale) with
// log_scale = lambda2 * d (otherwise log_scale = 0). modulus and phase_net
// are always the unscaled physical values; modulus underflows to 0 for
// astronomically opaque barriers instead of overflowing.
struct TransmissionResult {
  double xi = 0.0;
  double zeta = 0.0;
  double log_scale = 0.0;
  double t_re = 0.0;
  double t_im = 0.0;
  double modulus = 0.0;
  double phase_net = 0.0;
};

// Evanescent regime, E < V_r. Throws regime_error at E >= V_r.
TransmissionResult transmission_forbidden(double E, const BarrierSpec& barrier,
                                          double alpha,
                                          const UnitSystem& units = {});

// Propagating regime, E > V_r. The inside wavenumber is the principal branch
// of ((E - V_r + i V_i)/(D_alpha hbar^alpha))^(1/alpha); the matching
// coefficient becomes complex, mu~ = (rho + 1/rho)/2 with
// rho = (k_alpha/kappa_alpha)^(alpha-1). Throws regime_error at E <= V_r.
TransmissionResult transmission_allowed(double E, const BarrierSpec& barrier,
                                        double alpha,
                                        const UnitSystem& units = {});

// phase_net along a strictly increasing energy grid lying entirely on one
// side of V_r, unwrapped so adjacent points never jump by more than pi.
// A grid touching or straddling V_r raises regime_error.
std::vector<double> phase_profile(std::span<const double> E_grid,
                                  const BarrierSpec& barrier, double alpha,
                                  const UnitSystem& units = {});

}  // namespace sfqm
