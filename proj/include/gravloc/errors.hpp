#pragma once

#include <stdexcept>
#include <string>

namespace gravloc {

/// A numerical routine failed to reach its target accuracy (quadrature that
/// did not converge, a root bracket that could not be established, ...).
/// Carries the error estimate actually achieved next to the requested one.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved, double required)
      : std::runtime_error(what + " (achieved " + std::to_string(achieved) +
                           ", required " + std::to_string(required) + ")"),
        achieved_(achieved),
        required_(required) {}

  double achieved() const { return achieved_; }
  double required() const { return required_; }

 private:
  double achieved_;
  double required_;
};

}  // namespace gravloc
