#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace emho {

// Input outside the mathematical domain of an operation (tabulated range,
// displacement guard, grid coverage).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request beyond a hard implementation guard (polynomial degree, level count).
class capability_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numerical routine failed to meet its tolerance. Carries the best estimate
// it reached and the achieved error bound.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what,
                           double best_estimate = std::nan(""),
                           double error_estimate = std::nan(""))
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// A wavefunction violated a state precondition (e.g. normalization too far
// from 1 to repair).
class state_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; message carries "path:line:" where applicable.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emho
