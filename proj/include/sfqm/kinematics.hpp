#pragma once

#include "sfqm/model.hpp"

namespace sfqm {

// Rectangular barrier of width d with a complex potential V = V_r - i*V_i.
// V_i > 0 models absorption inside the barrier; V_i = 0 is the closed system.
struct BarrierSpec {
  double Vr = 0.0;
  double Vi = 0.0;
  double d = 0.0;

  // Throws domain_error unless Vr > 0, Vi >= 0, d >= 0 (all finite).
  void validate() const;
};

// Branch quantities of the evanescent (E < V_r) regime, plus their analytic
// energy derivatives. The inside-the-barrier root is taken on the principal
// branch of ((E - V_r + i V_i)/(D_alpha hbar^alpha))^(1/alpha) and split as
//
//   kappa~ = e^(i pi/alpha) (chi + i eta) = lambda1 + i lambda2,
//
// with polar pieces U = (V_r - E)^2 + V_i^2, theta = -atan(V_i/(V_r - E)),
// A = (sqrt(U)/(D_alpha hbar^alpha))^(1/alpha), chi = A cos(theta/alpha),
// eta = A sin(theta/alpha). lambda2 > 0 always holds here: lambda2 =
// A sin((pi+theta)/alpha) and (pi+theta)/alpha lies inside (0, pi).
struct ForbiddenKinematics {
  double E = 0.0;       // energy the derivatives refer to
  double U = 0.0;       // squared distance |V - E|^2 in the complex plane
  double theta = 0.0;   // phase of (E - V), in (-pi/2, 0]
  double chi = 0.0;     // Re of the pre-rotation root, > 0
  double eta = 0.0;     // Im of the pre-rotation root, <= 0
  double gamma = 0.0;   // chi^2 + eta^2 = A^2 = |kappa~|^2
  double lambda = 0.0;  // arg of the decaying exponent, -pi/alpha - atan(eta/chi)
  double lambda1 = 0.0;  // Re kappa~ (oscillation inside the barrier)
  double lambda2 = 0.0;  // Im kappa~ (decay inside the barrier), > 0

  double dchi_dE = 0.0;
  double deta_dE = 0.0;
  double dlambda_dE = 0.0;
  double dlambda1_dE = 0.0;
  double dlambda2_dE = 0.0;
};

// Matching coefficients of the transfer matrix across the barrier faces and
// their energy derivatives. With r = k_alpha / sqrt(gamma) and
// P = r^(alpha-1), Q = 1/P:
//   mu1 = (P + Q)/2 * cos(lambda (alpha-1)),
//   mu2 = (P - Q)/2 * sin(lambda (alpha-1)).
// At alpha = 2 this collapses to the textbook (k/kappa +- kappa/k)/2 pair.
struct MuPair {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double dmu1_dE = 0.0;
  double dmu2_dE = 0.0;
};

// Evaluates the branch split above. Preconditions: barrier valid, E > 0,
// alpha in (1, 2], and E < V_r strictly (otherwise regime_error). The corner
// E -> V_r with V_i = 0 degenerates (gamma -> 0) and raises domain_error.
ForbiddenKinematics forbidden_kinematics(double E, const BarrierSpec& barrier,
                                         double alpha,
                                         const UnitSystem& units = {});

// Matching coefficients for the kinematics kin, with k_alpha the free
// wavenumber at the same E and alpha. Uses dk/dE = k/(alpha E).
MuPair mu_coefficients(const ForbiddenKinematics& kin, double k_alpha,
                       double alpha);

// Central-difference check of every analytic derivative carried by
// ForbiddenKinematics and MuPair at step delta. Returns the worst
// |analytic - numeric| / max(|analytic|, 1e-300) over the six quantities.
// Requires 0 < E - delta and E + delta < V_r.
double derivative_selfcheck(double E, const BarrierSpec& barrier, double alpha,
                            double delta, const UnitSystem& units = {});

}  // namespace sfqm
