#include "oafm/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "oafm/assembly.hpp"
#include "oafm/errors.hpp"
#include "oafm/quadrature.hpp"

namespace oafm {

namespace {

double matrix_inf_norm(const Matrix& m) {
  double norm = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols; ++j) row += std::fabs(m(i, j));
    norm = std::max(norm, row);
  }
  return norm;
}

void validate_config(const SolveConfig& config) {
  if (config.quad_order < 1) throw std::invalid_argument("SolveConfig: quad_order must be >= 1");
  if (!(config.newton_tol > 0.0)) throw std::invalid_argument("SolveConfig: newton_tol must be > 0");
  if (config.max_iter < 1) throw std::invalid_argument("SolveConfig: max_iter must be >= 1");
  if (!(config.fd_step > 0.0)) throw std::invalid_argument("SolveConfig: fd_step must be > 0");
}

}  // namespace

std::vector<double> linear_solve(const Matrix& k, const std::vector<double>& f) {
  const int n = k.rows;
  if (k.cols != n) throw std::invalid_argument("linear_solve: matrix must be square");
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("linear_solve: rhs size does not match matrix");
  for (double v : k.data)
    if (!std::isfinite(v)) throw std::invalid_argument("linear_solve: non-finite matrix entry");

  const double pivot_floor = 1e-14 * matrix_inf_norm(k);
  Matrix a = k;
  std::vector<double> x = f;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    if (std::fabs(a(pivot, col)) <= pivot_floor)
      throw SingularMatrixError("linear_solve: pivot below 1e-14 * ||k|| at column " +
                                std::to_string(col));
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(x[static_cast<size_t>(col)], x[static_cast<size_t>(pivot)]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double m = a(r, col) / a(col, col);
      if (m == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= m * a(col, j);
      x[static_cast<size_t>(r)] -= m * x[static_cast<size_t>(col)];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = s / a(i, i);
  }
  return x;
}

Matrix numeric_jacobian(const ProblemSpec& problem, const CoefficientVector& c,
                        double t, const QuadratureRule& rule, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_jacobian: h must be > 0");
  const int n = problem.n;
  Matrix jac(n, n);
  CoefficientVector probe = c;
  for (int j = 0; j < n; ++j) {
    const double hj = h * (1.0 + std::fabs(c[static_cast<size_t>(j)]));
    probe[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] + hj;
    const std::vector<double> gp = galerkin_vector(problem, probe, t, rule);
    probe[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] - hj;
    const std::vector<double> gm = galerkin_vector(problem, probe, t, rule);
    probe[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    for (int i = 0; i < n; ++i)
      jac(i, j) = (gp[static_cast<size_t>(i)] - gm[static_cast<size_t>(i)]) / (2.0 * hj);
  }
  return jac;
}

Matrix quadratic_jacobian(const ProblemSpec& problem, const CoefficientVector& c,
                          double t, const QuadratureRule& rule) {
  if (!problem.quadratic_residual)
    throw std::invalid_argument(
        "quadratic_jacobian: problem does not declare a quadratic residual");
  const int n = problem.n;

  // For G(c) = -f + K c + Q(c, c) with Q bilinear symmetric:
  //   J(c) e_j = K e_j + 2 Q(c, e_j)
  //   K e_j    = (G(e_j) - G(-e_j)) / 2
  //   2 Q(c,e_j) = G(c + e_j) - G(c) - G(e_j) + G(0)
  const CoefficientVector zero(static_cast<size_t>(n), 0.0);
  const std::vector<double> g0 = galerkin_vector(problem, zero, t, rule);
  const std::vector<double> gc = galerkin_vector(problem, c, t, rule);

  Matrix jac(n, n);
  CoefficientVector probe(static_cast<size_t>(n), 0.0);
  CoefficientVector shifted = c;
  for (int j = 0; j < n; ++j) {
    probe[static_cast<size_t>(j)] = 1.0;
    const std::vector<double> ge = galerkin_vector(problem, probe, t, rule);
    probe[static_cast<size_t>(j)] = -1.0;
    const std::vector<double> gme = galerkin_vector(problem, probe, t, rule);
    probe[static_cast<size_t>(j)] = 0.0;
    shifted[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] + 1.0;
    const std::vector<double> gce = galerkin_vector(problem, shifted, t, rule);
    shifted[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    for (int i = 0; i < n; ++i) {
      const size_t ii = static_cast<size_t>(i);
      jac(i, j) = 0.5 * (ge[ii] - gme[ii]) + gce[ii] - gc[ii] - ge[ii] + g0[ii];
    }
  }
  return jac;
}

SolveReport solve_coefficients(const ProblemSpec& problem, double t,
                               const SolveConfig& config) {
  validate_config(config);
  if (!(t >= 0.0)) throw std::invalid_argument("solve_coefficients: t must be >= 0");

  const QuadratureRule rule =
      gauss_legendre_rule(config.quad_order, problem.domain.a, problem.domain.b);
  const int n = problem.n;

  const GalerkinLinearSystem sys = linear_init_system(problem, t, rule);
  CoefficientVector c = linear_solve(sys.k, sys.f);

  std::vector<double> g = galerkin_vector(problem, c, t, rule);
  double res = inf_norm(g);

  SolveReport best;
  best.coefficients = c;
  best.residual_inf_norm = res;

  int iterations = 0;
  int grow_streak = 0;
  bool diverging = false;

  while (res > config.newton_tol && iterations < config.max_iter) {
    Matrix jac = (config.use_quadratic_jacobian && problem.quadratic_residual)
                     ? quadratic_jacobian(problem, c, t, rule)
                     : numeric_jacobian(problem, c, t, rule, config.fd_step);
    std::vector<double> rhs(g.size());
    for (size_t i = 0; i < g.size(); ++i) rhs[i] = -g[i];
    const std::vector<double> delta = linear_solve(jac, rhs);
    for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] += delta[static_cast<size_t>(j)];
    ++iterations;

    g = galerkin_vector(problem, c, t, rule);
    const double next = inf_norm(g);
    grow_streak = (next > res) ? grow_streak + 1 : 0;
    res = next;
    if (res < best.residual_inf_norm) {
      best.coefficients = c;
      best.residual_inf_norm = res;
    }
    if (grow_streak >= 2) {
      diverging = true;
      break;
    }
  }

  if (diverging && res > config.newton_tol) {
    // Fixed-point fallback: refreeze the coupling terms at the current
    // iterate and re-solve the linear system, 100 rounds at most.
    const CoefficientVector zero(static_cast<size_t>(n), 0.0);
    const std::vector<double> g0 = galerkin_vector(problem, zero, t, rule);
    std::vector<std::vector<double>> g_unit(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      CoefficientVector e(static_cast<size_t>(n), 0.0);
      e[static_cast<size_t>(j)] = 1.0;
      g_unit[static_cast<size_t>(j)] = galerkin_vector(problem, e, t, rule);
    }

    c = linear_solve(sys.k, sys.f);
    for (int round = 0; round < 100; ++round) {
      g = galerkin_vector(problem, c, t, rule);
      res = inf_norm(g);
      if (res < best.residual_inf_norm) {
        best.coefficients = c;
        best.residual_inf_norm = res;
      }
      if (res <= config.newton_tol) break;

      Matrix frozen = sys.k;
      CoefficientVector shifted = c;
      for (int j = 0; j < n; ++j) {
        shifted[static_cast<size_t>(j)] += 1.0;
        const std::vector<double> gce = galerkin_vector(problem, shifted, t, rule);
        shifted[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
        for (int i = 0; i < n; ++i) {
          const size_t ii = static_cast<size_t>(i);
          frozen(i, j) += 0.5 * (gce[ii] - g[ii] - g_unit[static_cast<size_t>(j)][ii] + g0[ii]);
        }
      }
      c = linear_solve(frozen, sys.f);
      ++iterations;
    }
    g = galerkin_vector(problem, c, t, rule);
    res = inf_norm(g);
  }

  SolveReport report;
  report.coefficients = c;
  report.residual_inf_norm = res;
  report.iterations = iterations;
  report.converged = res <= config.newton_tol;

  if (!report.converged) {
    if (best.residual_inf_norm < res) {
      report.coefficients = best.coefficients;
      report.residual_inf_norm = best.residual_inf_norm;
    }
    throw NoConvergenceError(
        "solve_coefficients: no convergence for '" + problem.name + "' at t = " +
            std::to_string(t) + " after " + std::to_string(iterations) +
            " iterations, residual " + std::to_string(report.residual_inf_norm),
        report);
  }
  return report;
}

}  // namespace oafm
