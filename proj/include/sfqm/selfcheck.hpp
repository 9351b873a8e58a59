#pragma once

#include <iosfwd>

#include "sfqm/model.hpp"

namespace sfqm {

// Internal-consistency battery: analytic derivatives against central
// differences, and the closed-form traversal time against the numeric phase
// derivative, both over the reference grid E x alpha x V_i x d at V_r = 5.
// Prints one line per check to out and returns true when everything is within
// 1e-6.
bool run_selfcheck(std::ostream& out, const UnitSystem& units = {});

}  // namespace sfqm
