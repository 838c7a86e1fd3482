#pragma once

#include "oafm/types.hpp"

namespace oafm {

/// Ansatz and its derivatives at (x, t) for coefficients c.
/// Throws std::domain_error when x lies outside the problem domain and
/// std::invalid_argument for t < 0 or a coefficient count mismatch.
AnsatzEval eval_ansatz(const ProblemSpec& problem, const CoefficientVector& c,
                       double x, double t);

/// PDE residual of the ansatz at a single point.
double pointwise_residual(const ProblemSpec& problem, const CoefficientVector& c,
                          double x, double t);

/// Galerkin vector G_i(c; t) = integral of residual * phi_i over the domain.
/// The coefficient solve finds the root of this vector at fixed t.
std::vector<double> galerkin_vector(const ProblemSpec& problem,
                                    const CoefficientVector& c, double t,
                                    const QuadratureRule& rule);

/// Linearization of the Galerkin system at c = 0: k(i,j) = dG_i/dc_j at 0,
/// f = -G(0). Exact (up to rounding) for problems with quadratic_residual;
/// otherwise a small-step central-difference approximation.
GalerkinLinearSystem linear_init_system(const ProblemSpec& problem, double t,
                                        const QuadratureRule& rule);

}  // namespace oafm
