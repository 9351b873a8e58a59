#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfqm/tunnel_time.hpp"

namespace sfqm {

// Outcome of the search for the Levy index alpha_H where the large-d slope of
// gamma changes sign, i.e. where barrier traversal stops taking extra time per
// unit width and the Hartman saturation reappears.
struct AlphaHResult {
  // Root with |slope(alpha_H)| < 1e-8, or empty when the slope does not cross
  // zero strictly inside the bracket. A zero exactly at a bracket endpoint is
  // a boundary root and reported only through slope_lo / slope_hi.
  std::optional<double> alpha_H;

  double bracket_lo = 0.0;  // final refined bracket when found, else the query
  double bracket_hi = 0.0;
  double slope_at_root = 0.0;  // slope evaluated at alpha_H (0 when absent)
  int iterations = 0;          // bisection steps spent on the designated root
  double slope_lo = 0.0;       // slope at the query bracket endpoints
  double slope_hi = 0.0;
  // Every root found by the 41-probe scan, ascending. When several exist the
  // one closest to 2 is designated alpha_H.
  std::vector<double> roots;
};

// Scans slope(alpha) on [lo, hi] with 41 equally spaced probes, brackets each
// strict sign change and bisects. Bisection narrows each bracket below tol and
// then keeps halving until the root certificate |slope| < 1e-8 holds, so the
// result is bit-deterministic for fixed inputs. Requires 1 < lo < hi <= 2 and
// tol > 0; E, Vr as in the evanescent regime (E < Vr).
AlphaHResult find_alpha_h(double E, double Vr, double Vi, double lo = 1.5,
                          double hi = 2.0, double tol = 1.0e-6,
                          const UnitSystem& units = {});

// One find_alpha_h outcome per absorption strength.
struct HartmanRow {
  double Vi = 0.0;
  AlphaHResult result;
  bool ok = true;       // false when the search threw; message says why
  std::string message;
};

// find_alpha_h over a list of V_i values, in input order. Rows that fail
// (domain errors and the like) are flagged rather than aborting the batch.
std::vector<HartmanRow> hartman_curve(double E, double Vr,
                                      std::span<const double> Vi_values,
                                      double lo = 1.5, double hi = 2.0,
                                      double tol = 1.0e-6,
                                      const UnitSystem& units = {});

}  // namespace sfqm
