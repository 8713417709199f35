#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace snep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class MissingMeanOracle : public Error {
 public:
  MissingMeanOracle() : Error("game has no mean oracle") {}
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Raised by the iteration loop when an iterate acquires a non-finite coordinate.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(std::uint64_t iteration)
      : Error("iterate became non-finite at iteration " + std::to_string(iteration)),
        iteration_(iteration) {}
  std::uint64_t iteration() const noexcept { return iteration_; }

 private:
  std::uint64_t iteration_;
};

// Malformed configuration. `field` is a dotted path such as "algorithms[1].step.exponent".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ComplianceError : public Error {
 public:
  using Error::Error;
};

}  // namespace snep
