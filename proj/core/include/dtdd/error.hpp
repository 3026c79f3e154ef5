#pragma once

#include <stdexcept>
#include <string>

namespace dtdd {

/// Invalid scenario or sweep configuration. Maps to CLI exit status 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature non-convergence or a non-finite intermediate. Maps to CLI exit status 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dtdd
