#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "oafm/oafm.hpp"
#include "run_config.hpp"
#include "table_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string problem;
  std::string t_spec;
  std::string x_spec;
  int quad_order = 32;
  double tol = 1e-12;
  std::string format = "csv";
  std::string out;
  double re = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double omega = 1.0;
  std::string config_path;
};

/// Error that should surface as an I/O failure exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--problem", opt.problem, "problem id (see `oafm list`)");
  cmd->add_option("--t", opt.t_spec, "time levels: list `a,b,...` or range `start:stop:step`");
  cmd->add_option("--x", opt.x_spec,
                  "x grid: list or range (default: the problem's tabulated grid)");
  cmd->add_option("--quad-order", opt.quad_order, "Gauss-Legendre order")
      ->default_val(32)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opt.tol, "solver tolerance on the Galerkin vector")
      ->default_val(1e-12)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "md"}));
  cmd->add_option("--out", opt.out, "output path (default: stdout)");
  cmd->add_option("--re", opt.re, "Reynolds number (shock)")->default_val(1.0);
  cmd->add_option("--alpha", opt.alpha, "alpha (burgers-fisher)")->default_val(1.0);
  cmd->add_option("--beta", opt.beta, "beta (burgers-fisher)")->default_val(1.0);
  cmd->add_option("--omega", opt.omega, "omega (burgers-fisher)")->default_val(1.0);
  cmd->add_option("--config", opt.config_path,
                  "flat `key = value` config file; flags take precedence");
}

double config_number(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty())
    throw std::invalid_argument("config key '" + key + "': cannot parse '" + value + "'");
  return v;
}

// File values fill in whatever was not given on the command line.
void apply_config_file(const CLI::App& cmd, Options& opt) {
  if (opt.config_path.empty()) return;
  const std::map<std::string, std::string> kv = oafm::cli::load_config_file(opt.config_path);
  const auto unset = [&cmd](const std::string& flag) { return cmd.count(flag) == 0; };
  const auto take = [&](const char* key, const std::string& flag, auto&& assign) {
    const auto it = kv.find(key);
    if (it != kv.end() && unset(flag)) assign(it->second);
  };
  take("problem", "--problem", [&](const std::string& v) { opt.problem = v; });
  take("t", "--t", [&](const std::string& v) { opt.t_spec = v; });
  take("x", "--x", [&](const std::string& v) { opt.x_spec = v; });
  take("format", "--format", [&](const std::string& v) {
    if (v != "csv" && v != "md")
      throw std::invalid_argument("config key 'format': expected csv or md");
    opt.format = v;
  });
  take("out", "--out", [&](const std::string& v) { opt.out = v; });
  take("quad-order", "--quad-order", [&](const std::string& v) {
    opt.quad_order = static_cast<int>(config_number("quad-order", v));
  });
  take("tol", "--tol", [&](const std::string& v) { opt.tol = config_number("tol", v); });
  take("re", "--re", [&](const std::string& v) { opt.re = config_number("re", v); });
  take("alpha", "--alpha", [&](const std::string& v) { opt.alpha = config_number("alpha", v); });
  take("beta", "--beta", [&](const std::string& v) { opt.beta = config_number("beta", v); });
  take("omega", "--omega", [&](const std::string& v) { opt.omega = config_number("omega", v); });
}

void require_set(const std::string& value, const std::string& flag) {
  if (value.empty()) throw std::invalid_argument(flag + " is required");
}

oafm::ProblemSpec make_problem(const Options& opt) {
  const std::map<std::string, double> params = {
      {"re", opt.re}, {"alpha", opt.alpha}, {"beta", opt.beta}, {"omega", opt.omega}};
  return oafm::problem_by_id(opt.problem, params);
}

oafm::SolveConfig make_config(const Options& opt) {
  oafm::SolveConfig config;
  config.quad_order = opt.quad_order;
  config.newton_tol = opt.tol;
  return config;
}

std::vector<double> x_grid(const Options& opt, const oafm::ProblemSpec& problem) {
  if (opt.x_spec.empty()) return oafm::default_error_grid(problem);
  return oafm::cli::parse_grid(opt.x_spec);
}

template <typename WriteFn>
void emit(const std::string& path, WriteFn&& write) {
  if (path.empty()) {
    write(std::cout);
    if (!std::cout.good()) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file.good()) throw IoError("failed writing to '" + path + "'");
}

void run_list() {
  for (const std::string& id : oafm::problem_ids()) {
    const oafm::ProblemSpec p = oafm::problem_by_id(id);
    std::cout << id << ": domain [" << oafm::cli::t_label(p.domain.a) << ", "
              << oafm::cli::t_label(p.domain.b) << "], n=" << p.n;
    if (!p.params.empty()) {
      std::cout << ",";
      for (const auto& [key, value] : p.params)
        std::cout << " " << key << "=" << oafm::cli::t_label(value);
    }
    std::cout << "\n";
  }
}

void run_solve(const CLI::App& cmd, Options& opt) {
  apply_config_file(cmd, opt);
  require_set(opt.problem, "--problem");
  require_set(opt.t_spec, "--t");
  const oafm::ProblemSpec problem = make_problem(opt);
  const std::vector<double> ts = oafm::cli::parse_grid(opt.t_spec);
  const std::vector<double> xs = x_grid(opt, problem);
  const auto rows = oafm::error_table(problem, ts, xs, make_config(opt));
  emit(opt.out, [&](std::ostream& out) {
    if (opt.format == "md") oafm::cli::write_error_table_md(out, rows, ts);
    else oafm::cli::write_error_table_csv(out, rows);
  });
}

void run_convergence(const CLI::App& cmd, Options& opt) {
  apply_config_file(cmd, opt);
  require_set(opt.problem, "--problem");
  require_set(opt.t_spec, "--t");
  const oafm::ProblemSpec problem = make_problem(opt);
  const std::vector<double> ts = oafm::cli::parse_grid(opt.t_spec);
  const std::vector<double> xs = x_grid(opt, problem);
  const auto rows = oafm::convergence_table(problem, ts, xs, make_config(opt));
  emit(opt.out, [&](std::ostream& out) {
    if (opt.format == "md") oafm::cli::write_convergence_md(out, rows);
    else oafm::cli::write_convergence_csv(out, rows);
  });
}

std::string plotdata_path(const std::string& out, double t) {
  const std::string label = "_t" + oafm::cli::t_label(t);
  const size_t slash = out.find_last_of('/');
  const size_t dot = out.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return out + label;
  return out.substr(0, dot) + label + out.substr(dot);
}

void run_plotdata(const CLI::App& cmd, Options& opt) {
  apply_config_file(cmd, opt);
  require_set(opt.problem, "--problem");
  require_set(opt.t_spec, "--t");
  if (opt.format != "csv")
    throw std::invalid_argument("plotdata emits csv only; drop --format md");
  const oafm::ProblemSpec problem = make_problem(opt);
  const std::vector<double> ts = oafm::cli::parse_grid(opt.t_spec);
  const std::vector<double> xs =
      opt.x_spec.empty() ? oafm::cli::linspace(problem.domain.a, problem.domain.b, 201)
                         : oafm::cli::parse_grid(opt.x_spec);
  const oafm::SolveConfig config = make_config(opt);

  for (double t : ts) {
    const std::vector<double> single{t};
    const auto rows = oafm::error_table(problem, single, xs, config);
    if (opt.out.empty()) {
      std::cout << "# t = " << oafm::cli::t_label(t) << "\n";
      oafm::cli::write_plotdata_csv(std::cout, rows);
      std::cout << "\n";
      if (!std::cout.good()) throw IoError("failed writing to stdout");
    } else {
      emit(plotdata_path(opt.out, t),
           [&](std::ostream& out) { oafm::cli::write_plotdata_csv(out, rows); });
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galerkin optimal-auxiliary-function solver for nonlinear parabolic PDE benchmarks"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* list = app.add_subcommand("list", "list available problems");
  CLI::App* solve = app.add_subcommand("solve", "tabulate approximate solutions and errors");
  CLI::App* conv = app.add_subcommand("convergence", "MAE sweep with temporal convergence rates");
  CLI::App* plot = app.add_subcommand("plotdata", "dense per-time-level profiles for plotting");
  add_common_flags(solve, opt);
  add_common_flags(conv, opt);
  add_common_flags(plot, opt);

  list->callback(run_list);
  solve->callback([&] { run_solve(*solve, opt); });
  conv->callback([&] { run_convergence(*conv, opt); });
  plot->callback([&] { run_plotdata(*plot, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const oafm::NoConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const oafm::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const oafm::NonFiniteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
