#pragma once

#include <stdexcept>
#include <string>

namespace focklab {

// Requested truncation cannot hold the state within the leak tolerance.
class CutoffError : public std::runtime_error {
 public:
  explicit CutoffError(const std::string& msg) : std::runtime_error(msg) {}
};

// A channel or state parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

class IndexError : public std::out_of_range {
 public:
  explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An eigenvalue fell below the clamp threshold; the matrix is not a state.
class PositivityError : public std::runtime_error {
 public:
  explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A function handed to a concave-sum evaluator is outside the admissible class.
class FunctionClassError : public std::invalid_argument {
 public:
  explicit FunctionClassError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Witness construction requested for a pair that actually majorizes.
class NoWitnessError : public std::runtime_error {
 public:
  explicit NoWitnessError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace focklab
