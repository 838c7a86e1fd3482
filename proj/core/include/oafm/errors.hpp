#pragma once

#include <stdexcept>
#include <string>

#include "oafm/types.hpp"

namespace oafm {

/// Integrand or residual produced a NaN/inf where a finite value is required.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pivot fell below the singularity threshold during elimination.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The coefficient solve did not reach tolerance; carries the best iterate.
class NoConvergenceError : public std::runtime_error {
 public:
  NoConvergenceError(const std::string& what, SolveReport best_report)
      : std::runtime_error(what), best(std::move(best_report)) {}

  SolveReport best;
};

/// Operation needs ProblemSpec::exact but the problem does not provide one.
class MissingExactSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oafm
