#pragma once

#include "sfqm/kinematics.hpp"

namespace sfqm {

// Stationary-phase traversal time for the evanescent regime, decomposed as
//   gamma = hbar * dphi/dE  -  d * k_alpha^(1-alpha)/(alpha D_alpha hbar^(alpha-1))
//           +  d * m / (hbar * k),   k = sqrt(2 m E)/hbar,
// i.e. phase delay of the structure, minus the barrier-free fractional flight
// over d, plus the quadratic-dispersion flight that defines arrival at the far
// face. dphi/dE is evaluated in closed form as J/H.
//
// J and H are stored scaled by e^(-2 d lambda2) (their ratio is what matters;
// the scaling keeps both finite for arbitrarily opaque barriers). H > 0.
struct TunnelTimeResult {
  double gamma = 0.0;
  double term_phase = 0.0;       // hbar * J/H
  double term_fractional = 0.0;  // -d k_alpha^(1-alpha)/(alpha D_alpha hbar^(alpha-1))
  double term_free = 0.0;        // +d m/(hbar k)
  double J = 0.0;
  double H = 0.0;
};

// Large-d behaviour of gamma: gamma -> slope * d + intercept, with
//   slope = hbar * dlambda1/dE - k_alpha^(1-alpha)/(alpha D_alpha hbar^(alpha-1))
//           + m/(hbar k),
//   intercept = [mu1' mu2 - mu2' (mu1 + 1)] / [(1 + mu1)^2 + mu2^2] * hbar.
// slope = 0 identically at alpha = 2, V_i = 0: the Hartman saturation.
struct SlopeResult {
  double slope = 0.0;
  double intercept = 0.0;
};

// Closed-form gamma. Preconditions as forbidden_kinematics; d >= 0.
TunnelTimeResult tunneling_time_closed(double E, const BarrierSpec& barrier,
                                       double alpha,
                                       const UnitSystem& units = {});

// Independent check: gamma from a central difference of the net transmission
// phase at step h (h <= 0 picks 1e-6 * max(1, E)), using a three-point unwrap
// so the difference never crosses a branch cut. Requires (E-h, E+h) within
// (0, V_r).
double tunneling_time_numeric(double E, const BarrierSpec& barrier,
                              double alpha, double h = 0.0,
                              const UnitSystem& units = {});

// Standard quantum mechanics limit (alpha = 2, real barrier V), evaluated
// from the explicit phase-time formula for a rectangular barrier. Requires
// 0 < E < V. Saturates at 2m/(hbar k kappa) as d grows (Hartman effect).
double tunneling_time_standard(double E, double V, double d,
                               const UnitSystem& units = {});

// Asymptotic slope and intercept of gamma(d) at fixed E, alpha, V.
SlopeResult asymptotic_slope(double E, const BarrierSpec& barrier, double alpha,
                             const UnitSystem& units = {});

}  // namespace sfqm
