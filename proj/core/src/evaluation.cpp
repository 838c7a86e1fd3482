#include "oafm/evaluation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oafm/assembly.hpp"
#include "oafm/errors.hpp"
#include "oafm/solver.hpp"

namespace oafm {

namespace {

void check_grid(const ProblemSpec& problem, std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("x grid must be nonempty");
  for (double x : xs)
    if (x < problem.domain.a || x > problem.domain.b)
      throw std::invalid_argument("x grid point " + std::to_string(x) +
                                  " outside problem domain");
}

SolveReport solve_at(const ProblemSpec& problem, double t, const SolveConfig& config) {
  try {
    return solve_coefficients(problem, t, config);
  } catch (const NoConvergenceError& e) {
    throw NoConvergenceError(std::string(e.what()) + " (while tabulating t = " +
                                 std::to_string(t) + ")",
                             e.best);
  }
}

}  // namespace

double absolute_error(double exact, double approx) {
  if (!std::isfinite(exact) || !std::isfinite(approx))
    throw std::invalid_argument("absolute_error: inputs must be finite");
  return std::fabs(exact - approx);
}

double max_absolute_error(const ProblemSpec& problem, double t,
                          std::span<const double> xs, const SolveConfig& config) {
  if (!problem.exact)
    throw MissingExactSolutionError("max_absolute_error: problem '" + problem.name +
                                    "' has no exact solution");
  check_grid(problem, xs);
  const SolveReport report = solve_at(problem, t, config);
  double worst = 0.0;
  for (double x : xs) {
    const double approx = eval_ansatz(problem, report.coefficients, x, t).value;
    worst = std::max(worst, absolute_error((*problem.exact)(x, t), approx));
  }
  return worst;
}

double convergence_rate(double e1, double e2, double t1, double t2) {
  if (!(e1 > 0.0) || !(e2 > 0.0)) throw std::domain_error("convergence_rate: errors must be > 0");
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::domain_error("convergence_rate: times must be > 0");
  if (t1 == t2) throw std::domain_error("convergence_rate: t1 and t2 must differ");
  return std::log(e1 / e2) / std::log(t1 / t2);
}

std::vector<ErrorTableRow> error_table(const ProblemSpec& problem,
                                       std::span<const double> ts,
                                       std::span<const double> xs,
                                       const SolveConfig& config) {
  if (!problem.exact)
    throw MissingExactSolutionError("error_table: problem '" + problem.name +
                                    "' has no exact solution");
  if (ts.empty()) throw std::invalid_argument("t grid must be nonempty");
  check_grid(problem, xs);

  std::vector<CoefficientVector> solved;
  solved.reserve(ts.size());
  for (double t : ts) solved.push_back(solve_at(problem, t, config).coefficients);

  std::vector<ErrorTableRow> rows;
  rows.reserve(xs.size() * ts.size());
  for (double x : xs) {
    for (size_t k = 0; k < ts.size(); ++k) {
      ErrorTableRow row;
      row.x = x;
      row.t = ts[k];
      row.approx = eval_ansatz(problem, solved[k], x, ts[k]).value;
      row.exact = (*problem.exact)(x, ts[k]);
      row.abs_error = absolute_error(row.exact, row.approx);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ConvergenceRow> convergence_table(const ProblemSpec& problem,
                                              std::span<const double> ts,
                                              std::span<const double> xs,
                                              const SolveConfig& config) {
  if (ts.size() < 2)
    throw std::invalid_argument("convergence_table: need at least 2 time levels");

  std::vector<ConvergenceRow> rows;
  rows.reserve(ts.size());
  for (size_t k = 0; k < ts.size(); ++k) {
    ConvergenceRow row;
    row.t = ts[k];
    row.mae = max_absolute_error(problem, ts[k], xs, config);
    if (k > 0) row.rate = convergence_rate(rows[k - 1].mae, row.mae, ts[k - 1], ts[k]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> default_error_grid(const ProblemSpec& problem) {
  if (problem.name == "bbm") return {0.03, 0.04};

  // Tabulated grids: step 0.1 on [0, 1], step 0.2 on [-1, 1]; otherwise 11
  // uniform points across the domain.
  const int count = 11;
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[static_cast<size_t>(i)] =
        problem.domain.a + (problem.domain.b - problem.domain.a) * i / (count - 1);
  }
  xs.back() = problem.domain.b;
  return xs;
}

}  // namespace oafm
