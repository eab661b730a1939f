#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

class ParameterError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ParameterError"; }
};

// Evaluation requested outside the radius where the truncation is trusted.
class RadiusError : public Error {
 public:
  RadiusError(double requested, double admissible);
  double requested() const noexcept { return requested_; }
  double admissible() const noexcept { return admissible_; }
  const char* kind() const noexcept override { return "RadiusError"; }

 private:
  double requested_;
  double admissible_;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double partial_value);
  double partial_value() const noexcept { return partial_; }
  const char* kind() const noexcept override { return "QuadratureError"; }

 private:
  double partial_;
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

class DegenerateFitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DegenerateFitError"; }
};

class UnreliableTailError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UnreliableTailError"; }
};

class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UnsupportedRegimeError"; }
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ConfigError"; }
};

}  // namespace cesaro
