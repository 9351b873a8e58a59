#pragma once

#include <iosfwd>
#include <string>

namespace sfqm {

// Natural units: hbar = c = 1 and m = 1/2, so that 2m = 1 and a free particle
// of energy E has k = sqrt(E) in the alpha = 2 limit. u is the characteristic
// speed entering the fractional kinetic term; u << c keeps the dispersion
// nonrelativistic over the energy window of interest.
struct UnitSystem {
  double hbar = 1.0;
  double c = 1.0;
  double mass = 0.5;
  double u = 1.0e-5;

  // Throws domain_error unless every constant is finite and positive.
  void validate() const;
};

// Incident-particle query: energy plus the Levy index of the kinetic term.
// alpha = 2 is the standard quadratic dispersion; alpha in (1,2) is fractional.
struct Query {
  double E = 0.0;
  double alpha = 2.0;

  // Throws domain_error unless E > 0 and alpha in (1, 2].
  void validate() const;
};

// Generalized diffusion coefficient of the fractional kinetic term,
//   D_alpha = u^(2-alpha) / (alpha * m^(alpha-1)),
// chosen so the free dispersion E = D_alpha * (hbar k)^alpha reduces to
// E = (hbar k)^2 / (2m) at alpha = 2 (D_2 = 1/(2m)).
double diffusion_coefficient(double alpha, const UnitSystem& units = {});

// Free wavenumber from the fractional dispersion,
//   k_alpha = (E / (D_alpha * hbar^alpha))^(1/alpha).
double wavenumber_free(double E, double alpha, const UnitSystem& units = {});

// Reads "key = value" unit overrides. Keys: mass, u, hbar. '#' starts a
// comment, blank lines are skipped, unknown keys raise config_error.
UnitSystem parse_units(std::istream& in, const std::string& origin);

// parse_units on a file; a missing or unreadable file raises io_error.
UnitSystem load_units(const std::string& path);

}  // namespace sfqm
