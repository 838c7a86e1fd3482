#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oafm/evaluation.hpp"
#include "oafm/problems.hpp"
#include "run_config.hpp"
#include "table_io.hpp"
#include "../support/csv.hpp"

using namespace oafm;
using namespace oafm::cli;

TEST_CASE("parse_grid: ranges expand inclusively with exact endpoints") {
  const std::vector<double> xs = parse_grid("0:1:0.1");
  REQUIRE(xs.size() == 11);
  CHECK(xs.front() == 0.0);
  CHECK(xs.back() == 1.0);  // snapped, not 0.9999999999999999
  for (size_t i = 0; i < xs.size(); ++i) CHECK(std::fabs(xs[i] - 0.1 * i) < 1e-12);

  const std::vector<double> ts = parse_grid("0.01:0.05:0.01");
  REQUIRE(ts.size() == 5);
  CHECK(ts.back() == 0.05);

  const std::vector<double> partial = parse_grid("0:1:0.3");
  REQUIRE(partial.size() == 4);
  CHECK(partial.back() == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("parse_grid: lists and singletons") {
  CHECK(parse_grid("0.001,0.01") == std::vector<double>{0.001, 0.01});
  CHECK(parse_grid("0.03,0.04") == std::vector<double>{0.03, 0.04});
  CHECK(parse_grid("-1.5") == std::vector<double>{-1.5});
}

TEST_CASE("parse_grid: malformed input") {
  CHECK_THROWS_AS(parse_grid(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:1:-0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:1:0.1:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1,nanx"), std::invalid_argument);
}

TEST_CASE("linspace hits both endpoints exactly") {
  const std::vector<double> xs = linspace(-1.0, 1.0, 201);
  REQUIRE(xs.size() == 201);
  CHECK(xs.front() == -1.0);
  CHECK(xs.back() == 1.0);
  CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("format_sci is fixed-width scientific with 8 significant digits") {
  CHECK(format_sci(0.25125226) == "2.5125226e-01");
  CHECK(format_sci(-1.0) == "-1.0000000e+00");
  CHECK(format_sci(0.0) == "0.0000000e+00");
  CHECK(format_sci(1.411273e-05) == "1.4112730e-05");
}

TEST_CASE("quantize is idempotent") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double v = std::ldexp(uni(rng), rng() % 40 - 20);
    CHECK(quantize(quantize(v)) == quantize(v));
  }
}

TEST_CASE("csv error table round-trips its own abs_error column") {
  const std::vector<double> ts = {0.001, 0.01};
  const std::vector<double> xs = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  const auto rows = error_table(fisher(), ts, xs);

  std::ostringstream out;
  write_error_table_csv(out, rows);
  const auto cells = test::parse_csv(out.str());
  REQUIRE(cells.size() == rows.size() + 1);
  CHECK(cells[0] == std::vector<std::string>{"x", "t", "approx", "exact", "abs_error"});

  for (size_t r = 1; r < cells.size(); ++r) {
    REQUIRE(cells[r].size() == 5);
    const double approx = test::cell_to_double(cells[r][2]);
    const double exact = test::cell_to_double(cells[r][3]);
    const double ae = test::cell_to_double(cells[r][4]);
    CHECK(std::fabs(std::fabs(exact - approx) - ae) <= 1e-15);
  }
}

TEST_CASE("csv round-trip holds for synthetic edge rows") {
  std::vector<ErrorTableRow> rows(3);
  rows[0] = {0.0, 0.1, 0.25, 0.25, 0.0};                         // zero error
  rows[1] = {0.5, 0.1, 0.099999989, 0.10000001, 2.1e-8};          // exponent boundary
  rows[2] = {1.0, 0.1, 0.10000001, 0.25000001, 0.15};             // error ~ values

  std::ostringstream out;
  write_error_table_csv(out, rows);
  const auto cells = test::parse_csv(out.str());
  for (size_t r = 1; r < cells.size(); ++r) {
    const double approx = test::cell_to_double(cells[r][2]);
    const double exact = test::cell_to_double(cells[r][3]);
    const double ae = test::cell_to_double(cells[r][4]);
    CHECK(std::fabs(std::fabs(exact - approx) - ae) <= 1e-15);
  }
}

TEST_CASE("markdown table renders one row per x with per-level column pairs") {
  const std::vector<double> ts = {0.001, 0.01};
  const std::vector<double> xs = {0.0, 0.5, 1.0};
  const auto rows = error_table(fisher(), ts, xs);

  std::ostringstream out;
  write_error_table_md(out, rows, ts);
  const std::string text = out.str();

  size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == xs.size() + 2);  // header + separator + data
  CHECK(text.find("approx (t=0.001)") != std::string::npos);
  CHECK(text.find("abs_error (t=0.01)") != std::string::npos);
}

TEST_CASE("convergence csv leaves the first rate blank") {
  const std::vector<double> ts = {0.001, 0.002, 0.003};
  const std::vector<double> xs = {0.0, 0.5, 1.0};
  const auto rows = convergence_table(fisher(), ts, xs);

  std::ostringstream out;
  write_convergence_csv(out, rows);
  const auto cells = test::parse_csv(out.str());
  REQUIRE(cells.size() == 4);
  CHECK(cells[0] == std::vector<std::string>{"t", "mae", "rate"});
  CHECK(cells[1][2].empty());
  CHECK_FALSE(cells[2][2].empty());
}

TEST_CASE("plotdata csv carries the exact-before-approx column order") {
  const auto rows = error_table(fisher(), std::vector<double>{0.01},
                                std::vector<double>{0.0, 0.5, 1.0});
  std::ostringstream out;
  write_plotdata_csv(out, rows);
  const auto cells = test::parse_csv(out.str());
  CHECK(cells[0] == std::vector<std::string>{"x", "exact", "approx", "abs_error"});
  REQUIRE(cells.size() == 4);
  for (size_t r = 1; r < cells.size(); ++r) {
    const double exact = test::cell_to_double(cells[r][1]);
    const double approx = test::cell_to_double(cells[r][2]);
    const double ae = test::cell_to_double(cells[r][3]);
    CHECK(ae >= 0.0);
    CHECK(std::fabs(std::fabs(exact - approx) - ae) <= 1e-15);
  }
}
