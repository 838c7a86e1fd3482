#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Core domain types for the Galerkin optimal-auxiliary-function solver.
// All types are immutable after construction and safe to share across threads.

namespace oafm {

/// Spatial interval [a, b] the residual is projected over.
struct SpaceDomain {
  double a = 0.0;
  double b = 1.0;
};

/// The ansatz M(x,t) = m0(x) + t * sum_j c_j phi_j(x) and the partial
/// derivatives needed by the benchmark residual operators, bundled per point.
struct AnsatzEval {
  double value = 0.0;  // M
  double dt = 0.0;     // dM/dt
  double dx = 0.0;     // dM/dx
  double dxx = 0.0;    // d2M/dx2
  double dxxt = 0.0;   // d3M/dx2dt
};

/// Convergence-control coefficients c_1..c_n at a fixed time level.
using CoefficientVector = std::vector<double>;

using ScalarFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;
using ResidualFn = std::function<double(const AnsatzEval&, double, double)>;

/// One benchmark problem: initial approximation, coordinate functions, and the
/// pointwise PDE residual operator. Derivatives are closed-form callbacks;
/// consistency with finite differences is enforced by the test suite.
struct ProblemSpec {
  std::string name;
  SpaceDomain domain;
  int n = 0;  // number of coordinate functions

  ScalarFn m0, m0_dx, m0_dxx;
  std::vector<ScalarFn> phi, phi_dx, phi_dxx;

  /// Full PDE operator applied to the ansatz at (x, t); zero for a solution.
  ResidualFn pde_residual;

  std::optional<SpaceTimeFn> exact;
  std::map<std::string, double> params;

  /// True when pde_residual is a polynomial of degree <= 2 in the
  /// coefficients at fixed (x, t). Enables exact linearization shortcuts.
  bool quadratic_residual = false;
};

/// Nodes strictly inside (a, b) with positive weights summing to b - a.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

struct SolveConfig {
  int quad_order = 32;
  double newton_tol = 1e-12;  // infinity norm on the Galerkin vector
  int max_iter = 50;
  double fd_step = 1e-7;  // Jacobian step scale
  /// Use the exact quadratic-form Jacobian instead of central differences.
  /// Only valid for problems with quadratic_residual set.
  bool use_quadratic_jacobian = false;
};

struct SolveReport {
  CoefficientVector coefficients;
  double residual_inf_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Minimal dense row-major matrix; sized for n-by-n coefficient systems.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline std::vector<double> mat_vec(const Matrix& m, const std::vector<double>& v) {
  std::vector<double> out(static_cast<size_t>(m.rows), 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = s;
  }
  return out;
}

inline double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

/// Galerkin system linearized at c = 0: k*c = f seeds the nonlinear solve.
struct GalerkinLinearSystem {
  Matrix k;
  std::vector<double> f;
};

}  // namespace oafm
