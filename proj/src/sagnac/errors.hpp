#pragma once

#include <stdexcept>
#include <string>

namespace sagnac {

// Invalid physical parameter or out-of-domain argument (e.g. Omega = 0).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix inverse or denominator degenerated (optical-spring resonance,
// vanishing resolvent determinant, ...).
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// The homodyne readout quadrature is orthogonal to the signal response.
class SignalNullError : public std::runtime_error {
 public:
  explicit SignalNullError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration file / CLI argument problem (reported with exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sagnac
