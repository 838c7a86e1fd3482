#include "oafm/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oafm/errors.hpp"

namespace oafm {

namespace {

void check_inputs(const ProblemSpec& problem, const CoefficientVector& c, double t) {
  if (static_cast<int>(c.size()) != problem.n)
    throw std::invalid_argument("coefficient count does not match problem.n");
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

}  // namespace

AnsatzEval eval_ansatz(const ProblemSpec& problem, const CoefficientVector& c,
                       double x, double t) {
  check_inputs(problem, c, t);
  if (x < problem.domain.a || x > problem.domain.b)
    throw std::domain_error("eval_ansatz: x = " + std::to_string(x) +
                            " outside [" + std::to_string(problem.domain.a) + ", " +
                            std::to_string(problem.domain.b) + "]");

  double sphi = 0.0, sphi_dx = 0.0, sphi_dxx = 0.0;
  for (int j = 0; j < problem.n; ++j) {
    const double cj = c[static_cast<size_t>(j)];
    sphi += cj * problem.phi[static_cast<size_t>(j)](x);
    sphi_dx += cj * problem.phi_dx[static_cast<size_t>(j)](x);
    sphi_dxx += cj * problem.phi_dxx[static_cast<size_t>(j)](x);
  }

  AnsatzEval e;
  e.value = problem.m0(x) + t * sphi;
  e.dt = sphi;
  e.dx = problem.m0_dx(x) + t * sphi_dx;
  e.dxx = problem.m0_dxx(x) + t * sphi_dxx;
  e.dxxt = sphi_dxx;
  return e;
}

double pointwise_residual(const ProblemSpec& problem, const CoefficientVector& c,
                          double x, double t) {
  return problem.pde_residual(eval_ansatz(problem, c, x, t), x, t);
}

std::vector<double> galerkin_vector(const ProblemSpec& problem,
                                    const CoefficientVector& c, double t,
                                    const QuadratureRule& rule) {
  check_inputs(problem, c, t);
  std::vector<double> g(static_cast<size_t>(problem.n), 0.0);
  for (size_t q = 0; q < rule.nodes.size(); ++q) {
    const double x = rule.nodes[q];
    const double r = problem.pde_residual(eval_ansatz(problem, c, x, t), x, t);
    if (!std::isfinite(r))
      throw NonFiniteError("galerkin_vector: residual not finite at x = " +
                           std::to_string(x) + ", t = " + std::to_string(t));
    const double wr = rule.weights[q] * r;
    for (int i = 0; i < problem.n; ++i)
      g[static_cast<size_t>(i)] += wr * problem.phi[static_cast<size_t>(i)](x);
  }
  return g;
}

GalerkinLinearSystem linear_init_system(const ProblemSpec& problem, double t,
                                        const QuadratureRule& rule) {
  const int n = problem.n;
  GalerkinLinearSystem sys;
  sys.k = Matrix(n, n);
  sys.f.assign(static_cast<size_t>(n), 0.0);

  const CoefficientVector zero(static_cast<size_t>(n), 0.0);
  const std::vector<double> g0 = galerkin_vector(problem, zero, t, rule);
  for (int i = 0; i < n; ++i) sys.f[static_cast<size_t>(i)] = -g0[static_cast<size_t>(i)];

  // Central differences of G: for a quadratic residual the even terms cancel,
  // so unit steps recover the coupling terms at c = 0 exactly.
  const double h = problem.quadratic_residual ? 1.0 : 1e-6;
  CoefficientVector probe(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    probe[static_cast<size_t>(j)] = h;
    const std::vector<double> gp = galerkin_vector(problem, probe, t, rule);
    probe[static_cast<size_t>(j)] = -h;
    const std::vector<double> gm = galerkin_vector(problem, probe, t, rule);
    probe[static_cast<size_t>(j)] = 0.0;
    for (int i = 0; i < n; ++i)
      sys.k(i, j) = (gp[static_cast<size_t>(i)] - gm[static_cast<size_t>(i)]) / (2.0 * h);
  }
  return sys;
}

}  // namespace oafm
