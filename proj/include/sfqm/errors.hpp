#pragma once

#include <stdexcept>
#include <string>

namespace sfqm {

// Parameter outside its mathematical domain (E <= 0, alpha not in (1,2], ...).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Parameters individually fine but the operation belongs to the other energy
// regime (tunneling formulas need E < V_r, the propagating ones E > V_r).
class regime_error : public domain_error {
 public:
  explicit regime_error(const std::string& what) : domain_error(what) {}
};

// Bad configuration file: unknown key, unparsable or non-positive value.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure; the message carries the offending path.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfqm
