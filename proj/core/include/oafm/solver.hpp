#pragma once

#include "oafm/types.hpp"

namespace oafm {

/// Solve k*c = f by Gaussian elimination with partial pivoting.
/// Throws SingularMatrixError when a pivot falls below 1e-14 * ||k||_inf.
std::vector<double> linear_solve(const Matrix& k, const std::vector<double>& f);

/// Central-difference Jacobian of the Galerkin vector at c, with per-column
/// step h * (1 + |c_j|).
Matrix numeric_jacobian(const ProblemSpec& problem, const CoefficientVector& c,
                        double t, const QuadratureRule& rule, double h);

/// Exact Jacobian for quadratic residuals, assembled from the polynomial
/// interpolation identities of the Galerkin vector (no step-size error).
Matrix quadratic_jacobian(const ProblemSpec& problem, const CoefficientVector& c,
                          double t, const QuadratureRule& rule);

/// Root of the Galerkin vector at time level t: linear-part initialization
/// followed by Newton iteration. If Newton's residual grows twice in a row,
/// falls back to frozen-coupling fixed-point iteration.
/// Throws NoConvergenceError (carrying the best iterate) when tolerance is
/// not reached.
SolveReport solve_coefficients(const ProblemSpec& problem, double t,
                               const SolveConfig& config = {});

}  // namespace oafm
