#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oafm/types.hpp"

namespace oafm {

/// One cell of an approximation/error table.
struct ErrorTableRow {
  double x = 0.0;
  double t = 0.0;
  double approx = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
};

/// One time level of a temporal convergence sweep; rate is empty on the
/// first row.
struct ConvergenceRow {
  double t = 0.0;
  double mae = 0.0;
  std::optional<double> rate;
};

/// |exact - approx|. Throws std::invalid_argument on non-finite input.
double absolute_error(double exact, double approx);

/// Maximum absolute error over xs at time level t, with coefficients solved
/// once. Throws MissingExactSolutionError when the problem has no exact
/// solution, std::invalid_argument for an empty or out-of-domain grid.
double max_absolute_error(const ProblemSpec& problem, double t,
                          std::span<const double> xs, const SolveConfig& config = {});

/// Temporal rate log(e1/e2) / log(t1/t2) between two error levels.
/// Throws std::domain_error for non-positive inputs or t1 == t2.
double convergence_rate(double e1, double e2, double t1, double t2);

/// Rows for every (x, t) pair; coefficients are solved once per time level
/// and reused across the x grid. Solver failures are rethrown annotated with
/// the failing t.
std::vector<ErrorTableRow> error_table(const ProblemSpec& problem,
                                       std::span<const double> ts,
                                       std::span<const double> xs,
                                       const SolveConfig& config = {});

/// MAE sweep over >= 2 time levels with rates between consecutive levels.
std::vector<ConvergenceRow> convergence_table(const ProblemSpec& problem,
                                              std::span<const double> ts,
                                              std::span<const double> xs,
                                              const SolveConfig& config = {});

/// Default spatial grid used for error tables and MAE sweeps: the tabulated
/// grid of each benchmark, or 11 uniform points for unknown problems.
std::vector<double> default_error_grid(const ProblemSpec& problem);

}  // namespace oafm
