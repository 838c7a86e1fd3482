#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oafm/assembly.hpp"
#include "oafm/errors.hpp"
#include "oafm/evaluation.hpp"
#include "oafm/problems.hpp"
#include "oafm/solver.hpp"

using namespace oafm;

namespace {
const std::vector<double> kUnitGrid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                       0.6, 0.7, 0.8, 0.9, 1.0};
}

TEST_CASE("absolute_error basics") {
  CHECK(absolute_error(0.5, 0.5) == 0.0);
  CHECK(absolute_error(1.0, 0.0) == 1.0);
  CHECK(std::fabs(absolute_error(0.2626536, 0.26274282) - 8.92e-05) <= 1e-7);
  CHECK_THROWS_AS(absolute_error(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(absolute_error(1.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("max_absolute_error reproduces the reference sweep values") {
  const double fisher_mae = max_absolute_error(fisher(), 0.001, kUnitGrid);
  CHECK(fisher_mae == doctest::Approx(2.08e-6).epsilon(0.01));

  const double bf_mae = max_absolute_error(burgers_fisher_published(), 0.01, kUnitGrid);
  CHECK(bf_mae == doctest::Approx(7.8876e-6).epsilon(0.01));
}

TEST_CASE("max_absolute_error vanishes at t = 0") {
  for (const ProblemSpec& p : {bbm(), fisher(), shock(), burgers_fisher()})
    CHECK(max_absolute_error(p, 0.0, default_error_grid(p)) <= 1e-12);
}

TEST_CASE("max_absolute_error input validation") {
  ProblemSpec no_exact = fisher();
  no_exact.exact.reset();
  CHECK_THROWS_AS(max_absolute_error(no_exact, 0.01, kUnitGrid), MissingExactSolutionError);
  CHECK_THROWS_AS(max_absolute_error(fisher(), 0.01, std::vector<double>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_absolute_error(fisher(), 0.01, std::vector<double>{2.0}),
                  std::invalid_argument);
}

TEST_CASE("convergence_rate against reference pairs") {
  CHECK(std::fabs(convergence_rate(2.08e-6, 7.890e-6, 0.001, 0.002) - 1.9234) <= 5e-4);
  CHECK(std::fabs(convergence_rate(7.8876e-6, 3.1840e-5, 0.01, 0.02) - 2.0132) <= 5e-4);
  CHECK(convergence_rate(3.7e-5, 3.7e-5, 0.01, 0.02) == 0.0);
}

TEST_CASE("convergence_rate is antisymmetric under pair swap") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uni(1e-8, 1e-2);
  for (int rep = 0; rep < 50; ++rep) {
    const double e1 = uni(rng), e2 = uni(rng);
    double t1 = uni(rng), t2 = uni(rng);
    if (t1 == t2) t2 *= 2.0;
    const double forward = convergence_rate(e1, e2, t1, t2);
    const double swapped = convergence_rate(e2, e1, t2, t1);
    CHECK(std::fabs(forward - swapped) <= 1e-12 * (1.0 + std::fabs(forward)));
  }
}

TEST_CASE("convergence_rate domain errors") {
  CHECK_THROWS_AS(convergence_rate(0.0, 1e-5, 0.01, 0.02), std::domain_error);
  CHECK_THROWS_AS(convergence_rate(1e-5, -1e-5, 0.01, 0.02), std::domain_error);
  CHECK_THROWS_AS(convergence_rate(1e-5, 1e-5, 0.0, 0.02), std::domain_error);
  CHECK_THROWS_AS(convergence_rate(1e-5, 1e-5, 0.01, 0.01), std::domain_error);
}

TEST_CASE("error_table shape and internal consistency") {
  const std::vector<double> ts = {0.001, 0.01};
  const auto rows = error_table(fisher(), ts, kUnitGrid);
  REQUIRE(rows.size() == 22);

  // x-major with both time levels per x
  CHECK(rows[0].x == 0.0);
  CHECK(rows[0].t == 0.001);
  CHECK(rows[1].x == 0.0);
  CHECK(rows[1].t == 0.01);
  CHECK(rows[2].x == 0.1);

  for (const ErrorTableRow& row : rows) {
    CHECK(row.abs_error == absolute_error(row.exact, row.approx));
    CHECK(row.abs_error >= 0.0);
  }

  // coefficients are reused across the grid: the first row equals a direct solve
  const SolveReport direct = solve_coefficients(fisher(), 0.001);
  CHECK(rows[0].approx == eval_ansatz(fisher(), direct.coefficients, 0.0, 0.001).value);
}

TEST_CASE("error_table annotates solver failures with the failing level") {
  SolveConfig starved;
  starved.max_iter = 1;
  starved.newton_tol = 1e-30;
  try {
    error_table(fisher(), std::vector<double>{0.01}, kUnitGrid, starved);
    FAIL("expected NoConvergenceError");
  } catch (const NoConvergenceError& e) {
    CHECK(std::string(e.what()).find("while tabulating t = 0.01") != std::string::npos);
    CHECK(e.best.coefficients.size() == 4);
  }
}

TEST_CASE("error_table row counts for the other layouts") {
  const std::vector<double> shock_grid = {-1.0, -0.8, -0.6, -0.4, -0.2, 0.0,
                                          0.2,  0.4,  0.6,  0.8,  1.0};
  CHECK(error_table(shock(), std::vector<double>{0.01, 0.02, 0.03}, shock_grid).size() == 33);
  CHECK(error_table(fisher(), std::vector<double>{0.01}, std::vector<double>{0.5}).size() == 1);
  CHECK_THROWS_AS(error_table(fisher(), std::vector<double>{}, kUnitGrid),
                  std::invalid_argument);
}

TEST_CASE("convergence_table sweeps and rates") {
  const std::vector<double> ts = {0.001, 0.002, 0.003, 0.004, 0.005};
  const auto rows = convergence_table(fisher(), ts, kUnitGrid);
  REQUIRE(rows.size() == 5);
  CHECK_FALSE(rows[0].rate.has_value());
  for (size_t k = 1; k < rows.size(); ++k) {
    REQUIRE(rows[k].rate.has_value());
    CHECK(*rows[k].rate ==
          convergence_rate(rows[k - 1].mae, rows[k].mae, rows[k - 1].t, rows[k].t));
  }
  CHECK(std::fabs(*rows[1].rate - 1.9224) <= 5e-3);

  CHECK_THROWS_AS(convergence_table(fisher(), std::vector<double>{0.01}, kUnitGrid),
                  std::invalid_argument);
}

TEST_CASE("default grids match the tabulated layouts") {
  const std::vector<double> f = default_error_grid(fisher());
  REQUIRE(f.size() == 11);
  CHECK(f.front() == 0.0);
  CHECK(f.back() == 1.0);
  CHECK(f[3] == doctest::Approx(0.3).epsilon(1e-15));

  const std::vector<double> s = default_error_grid(shock());
  REQUIRE(s.size() == 11);
  CHECK(s.front() == -1.0);
  CHECK(s.back() == 1.0);
  CHECK(s[5] == doctest::Approx(0.0).epsilon(1e-15));

  CHECK(default_error_grid(bbm()) == std::vector<double>{0.03, 0.04});
}
