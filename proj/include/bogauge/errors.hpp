#pragma once

#include <stdexcept>
#include <string>

namespace bogauge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs of an operation was violated
/// (mismatched grids, invalid sizes, non-finite symbols, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The solution left the admissible range (max-norm guard or NaN).
class BlowupError : public Error {
 public:
  BlowupError(const std::string& what, double time)
      : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Gauge construction needs mean-zero data on the torus.
class GaugeDomainError : public Error {
 public:
  using Error::Error;
};

/// A frequency envelope failed one of its axioms.
class EnvelopeAxiomError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration. `field` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace bogauge
