#include "table_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace oafm::cli {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.7e", v);
  return buf;
}

double quantize(double v) { return std::strtod(format_sci(v).c_str(), nullptr); }

std::string t_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

void write_error_table_csv(std::ostream& out, const std::vector<ErrorTableRow>& rows) {
  out << "x,t,approx,exact,abs_error\n";
  for (const ErrorTableRow& row : rows) {
    const std::string approx = format_sci(row.approx);
    const std::string exact = format_sci(row.exact);
    const double ae = std::fabs(std::strtod(exact.c_str(), nullptr) -
                                std::strtod(approx.c_str(), nullptr));
    out << format_sci(row.x) << ',' << format_sci(row.t) << ',' << approx << ','
        << exact << ',' << format_sci(ae) << '\n';
  }
}

void write_error_table_md(std::ostream& out, const std::vector<ErrorTableRow>& rows,
                          const std::vector<double>& ts) {
  out << "| x |";
  for (double t : ts) out << " approx (t=" << t_label(t) << ") | abs_error (t=" << t_label(t) << ") |";
  out << "\n|---|";
  for (size_t k = 0; k < ts.size(); ++k) out << "---|---|";
  out << '\n';

  // Rows arrive x-major with ts.size() entries per x.
  for (size_t i = 0; i < rows.size(); i += ts.size()) {
    out << "| " << format_sci(rows[i].x) << " |";
    for (size_t k = 0; k < ts.size(); ++k) {
      const ErrorTableRow& row = rows[i + k];
      const std::string approx = format_sci(row.approx);
      const std::string exact = format_sci(row.exact);
      const double ae = std::fabs(std::strtod(exact.c_str(), nullptr) -
                                  std::strtod(approx.c_str(), nullptr));
      out << ' ' << approx << " | " << format_sci(ae) << " |";
    }
    out << '\n';
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "t,mae,rate\n";
  for (const ConvergenceRow& row : rows) {
    out << format_sci(row.t) << ',' << format_sci(row.mae) << ',';
    if (row.rate) out << format_sci(*row.rate);
    out << '\n';
  }
}

void write_convergence_md(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "| t | mae | rate |\n|---|---|---|\n";
  for (const ConvergenceRow& row : rows) {
    out << "| " << format_sci(row.t) << " | " << format_sci(row.mae) << " | ";
    if (row.rate) out << format_sci(*row.rate);
    else out << "-";
    out << " |\n";
  }
}

void write_plotdata_csv(std::ostream& out, const std::vector<ErrorTableRow>& rows) {
  out << "x,exact,approx,abs_error\n";
  for (const ErrorTableRow& row : rows) {
    const std::string approx = format_sci(row.approx);
    const std::string exact = format_sci(row.exact);
    const double ae = std::fabs(std::strtod(exact.c_str(), nullptr) -
                                std::strtod(approx.c_str(), nullptr));
    out << format_sci(row.x) << ',' << exact << ',' << approx << ',' << format_sci(ae) << '\n';
  }
}

}  // namespace oafm::cli
