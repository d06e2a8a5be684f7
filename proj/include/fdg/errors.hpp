#pragma once

#include <stdexcept>
#include <string>

namespace fdg {

/// Raised when an iterative or quadrature routine stops short of its
/// requested tolerance. `achieved()` carries the best error estimate reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace fdg
