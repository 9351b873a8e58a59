#include "sfqm/model.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sfqm/errors.hpp"

namespace sfqm {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

void UnitSystem::validate() const {
  if (!positive_finite(hbar) || !positive_finite(c) || !positive_finite(mass) ||
      !positive_finite(u)) {
    throw domain_error("unit system constants must be finite and positive");
  }
}

void Query::validate() const {
  if (!std::isfinite(E) || E <= 0.0) {
    throw domain_error("energy must be finite and positive");
  }
  if (!std::isfinite(alpha) || alpha <= 1.0 || alpha > 2.0) {
    throw domain_error("Levy index must lie in (1, 2]");
  }
}

double diffusion_coefficient(double alpha, const UnitSystem& units) {
  units.validate();
  if (!std::isfinite(alpha) || alpha <= 1.0 || alpha > 2.0) {
    throw domain_error("Levy index must lie in (1, 2]");
  }
  return std::pow(units.u, 2.0 - alpha) /
         (alpha * std::pow(units.mass, alpha - 1.0));
}

double wavenumber_free(double E, double alpha, const UnitSystem& units) {
  Query{E, alpha}.validate();
  double D = diffusion_coefficient(alpha, units);
  return std::pow(E / (D * std::pow(units.hbar, alpha)), 1.0 / alpha);
}

UnitSystem parse_units(std::istream& in, const std::string& origin) {
  UnitSystem units;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) {
      throw config_error(where + ": expected key = value, got '" + line + "'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw config_error(where + ": missing value for '" + key + "'");
    }
    char* end = nullptr;
    double parsed = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || !positive_finite(parsed)) {
      throw config_error(where + ": '" + key +
                         "' needs a positive number, got '" + value + "'");
    }
    if (key == "mass") {
      units.mass = parsed;
    } else if (key == "u") {
      units.u = parsed;
    } else if (key == "hbar") {
      units.hbar = parsed;
    } else {
      throw config_error(where + ": unknown key '" + key +
                         "' (expected mass, u or hbar)");
    }
  }
  units.validate();
  return units;
}

UnitSystem load_units(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open config file '" + path + "'");
  }
  return parse_units(in, path);
}

}  // namespace sfqm
