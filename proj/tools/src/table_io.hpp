#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oafm/evaluation.hpp"

namespace oafm::cli {

/// Scientific notation with 8 significant digits; fixed width, C locale.
std::string format_sci(double v);

/// The double a format_sci cell parses back to.
double quantize(double v);

/// Columns x,t,approx,exact,abs_error. The abs_error cell is recomputed from
/// the quantized approx/exact cells so an emitted file is self-consistent
/// under reparsing.
void write_error_table_csv(std::ostream& out, const std::vector<ErrorTableRow>& rows);

/// Row-major layout: one row per x, per time level a pair of
/// approx/abs_error columns.
void write_error_table_md(std::ostream& out, const std::vector<ErrorTableRow>& rows,
                          const std::vector<double>& ts);

/// Columns t,mae,rate; the rate cell is blank on the first row.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_convergence_md(std::ostream& out, const std::vector<ConvergenceRow>& rows);

/// Columns x,exact,approx,abs_error for a single time level.
void write_plotdata_csv(std::ostream& out, const std::vector<ErrorTableRow>& rows);

/// Compact label for time levels in filenames and table headers.
std::string t_label(double t);

}  // namespace oafm::cli
