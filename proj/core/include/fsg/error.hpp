#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsg {

/// Bad input: out-of-range parameter, malformed config, mismatched grids.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A trajectory produced a non-finite coefficient.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t step, double time, const std::string& what)
      : std::runtime_error(what), step_(step), time_(time) {}

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t step_;
  double time_;
};

/// File system or serialization failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsg
