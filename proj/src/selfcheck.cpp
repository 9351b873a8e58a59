#include "sfqm/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "sfqm/kinematics.hpp"
#include "sfqm/tunnel_time.hpp"

namespace sfqm {

namespace {

// Reference grid shared with the acceptance gate: incident energies below the
// V_r = 5 barrier, Levy indices down to 1.8, weak to strong absorption.
constexpr double kE[] = {1.0, 2.0, 3.0, 4.0, 4.5};
constexpr double kAlpha[] = {2.0, 1.98, 1.95, 1.9, 1.8};
constexpr double kVi[] = {0.0, 5.0, 20.0};
constexpr double kD[] = {1.0, 3.0, 5.0};
constexpr double kVr = 5.0;
constexpr double kTol = 1.0e-6;

}  // namespace

bool run_selfcheck(std::ostream& out, const UnitSystem& units) {
  units.validate();

  double worst_deriv = 0.0;
  for (double E : kE) {
    for (double alpha : kAlpha) {
      for (double Vi : kVi) {
        double delta = 1.0e-6 * std::max(1.0, E);
        double dev = derivative_selfcheck(E, {kVr, Vi, 0.0}, alpha, delta, units);
        worst_deriv = std::max(worst_deriv, dev);
      }
    }
  }
  bool deriv_ok = worst_deriv < kTol;
  out << (deriv_ok ? "[ ok ]" : "[FAIL]")
      << " analytic derivatives vs central differences: worst " << worst_deriv
      << " (tol " << kTol << ")\n";

  double worst_gamma = 0.0;
  for (double E : kE) {
    for (double alpha : kAlpha) {
      for (double Vi : kVi) {
        for (double d : kD) {
          BarrierSpec barrier{kVr, Vi, d};
          double closed = tunneling_time_closed(E, barrier, alpha, units).gamma;
          double numeric = tunneling_time_numeric(E, barrier, alpha, 0.0, units);
          double dev = std::abs(closed - numeric) /
                       std::max(std::abs(closed), 1.0e-12);
          worst_gamma = std::max(worst_gamma, dev);
        }
      }
    }
  }
  bool gamma_ok = worst_gamma < kTol;
  out << (gamma_ok ? "[ ok ]" : "[FAIL]")
      << " closed-form traversal time vs numeric phase derivative: worst "
      << worst_gamma << " (tol " << kTol << ")\n";

  return deriv_ok && gamma_ok;
}

}  // namespace sfqm
