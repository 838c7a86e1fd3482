#include "oafm/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "oafm/errors.hpp"

namespace oafm {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

/// Coordinate family phi_j = -(m0)^j, j = 1..n, with chain-rule derivatives.
void attach_power_basis(ProblemSpec& p, int n) {
  const ScalarFn m0 = p.m0;
  const ScalarFn m0_dx = p.m0_dx;
  const ScalarFn m0_dxx = p.m0_dxx;
  for (int j = 1; j <= n; ++j) {
    p.phi.push_back([m0, j](double x) { return -std::pow(m0(x), j); });
    p.phi_dx.push_back([m0, m0_dx, j](double x) {
      return -j * std::pow(m0(x), j - 1) * m0_dx(x);
    });
    p.phi_dxx.push_back([m0, m0_dx, m0_dxx, j](double x) {
      const double v = m0(x);
      const double first = (j > 1) ? (j - 1) * std::pow(v, j - 2) * m0_dx(x) * m0_dx(x) : 0.0;
      return -j * (first + std::pow(v, j - 1) * m0_dxx(x));
    });
  }
}

}  // namespace

ProblemSpec bbm() {
  // Everything is built from s^m = sech^m(x/4) and s^m * tanh(x/4), with
  //   d/dx  [s^m]     = -(m/4) s^m th
  //   d2/dx2[s^m]     = (m^2/16) s^m - (m(m+1)/16) s^(m+2)
  //   d/dx  [s^m th]  = -(m/4) s^m + ((m+1)/4) s^(m+2)
  //   d2/dx2[s^m th]  = (m^2/16) s^m th - ((m+1)(m+2)/16) s^(m+2) th
  auto sp = [](int m, double x) { return std::pow(sech(x / 4.0), m); };
  auto sp_dx = [sp](int m, double x) { return -(m / 4.0) * sp(m, x) * std::tanh(x / 4.0); };
  auto sp_dxx = [sp](int m, double x) {
    return (m * m / 16.0) * sp(m, x) - (m * (m + 1) / 16.0) * sp(m + 2, x);
  };
  auto spt = [sp](int m, double x) { return sp(m, x) * std::tanh(x / 4.0); };
  auto spt_dx = [sp](int m, double x) {
    return -(m / 4.0) * sp(m, x) + ((m + 1) / 4.0) * sp(m + 2, x);
  };
  auto spt_dxx = [spt](int m, double x) {
    return (m * m / 16.0) * spt(m, x) - ((m + 1) * (m + 2) / 16.0) * spt(m + 2, x);
  };

  ProblemSpec p;
  p.name = "bbm";
  p.domain = {0.0, 0.07};
  p.n = 4;
  p.m0 = [sp](double x) { return sp(2, x); };
  p.m0_dx = [sp_dx](double x) { return sp_dx(2, x); };
  p.m0_dxx = [sp_dxx](double x) { return sp_dxx(2, x); };

  p.phi = {[spt](double x) { return 0.5 * (spt(4, x) + spt(6, x)); },
           [spt](double x) { return 0.5 * (spt(6, x) + spt(8, x)); },
           [sp](double x) { return -sp(6, x); },
           [sp](double x) { return -sp(8, x); }};
  p.phi_dx = {[spt_dx](double x) { return 0.5 * (spt_dx(4, x) + spt_dx(6, x)); },
              [spt_dx](double x) { return 0.5 * (spt_dx(6, x) + spt_dx(8, x)); },
              [sp_dx](double x) { return -sp_dx(6, x); },
              [sp_dx](double x) { return -sp_dx(8, x); }};
  p.phi_dxx = {[spt_dxx](double x) { return 0.5 * (spt_dxx(4, x) + spt_dxx(6, x)); },
               [spt_dxx](double x) { return 0.5 * (spt_dxx(6, x) + spt_dxx(8, x)); },
               [sp_dxx](double x) { return -sp_dxx(6, x); },
               [sp_dxx](double x) { return -sp_dxx(8, x); }};

  p.pde_residual = [](const AnsatzEval& e, double, double) {
    return e.dt - e.dxxt + e.dx + e.value * e.dx;
  };
  p.exact = [](double x, double t) {
    const double s = sech(x / 4.0 - t / 3.0);
    return s * s;
  };
  p.quadratic_residual = true;
  return p;
}

ProblemSpec fisher() {
  ProblemSpec p;
  p.name = "fisher";
  p.domain = {0.0, 1.0};
  p.n = 4;
  p.m0 = [](double x) {
    const double u = 1.0 + std::exp(x);
    return 1.0 / (u * u);
  };
  p.m0_dx = [](double x) {
    const double ex = std::exp(x);
    const double u = 1.0 + ex;
    return -2.0 * ex / (u * u * u);
  };
  p.m0_dxx = [](double x) {
    const double ex = std::exp(x);
    const double u = 1.0 + ex;
    return 6.0 * ex * ex / (u * u * u * u) - 2.0 * ex / (u * u * u);
  };
  attach_power_basis(p, p.n);

  p.pde_residual = [](const AnsatzEval& e, double, double) {
    return e.dt - e.dxx - 6.0 * e.value * (1.0 - e.value);
  };
  p.exact = [](double x, double t) {
    const double u = 1.0 + std::exp(x - 5.0 * t);
    return 1.0 / (u * u);
  };
  p.quadratic_residual = true;
  return p;
}

ProblemSpec shock(double re) {
  if (!(re > 0.0)) throw std::invalid_argument("shock: re must be > 0");
  ProblemSpec p;
  p.name = "shock";
  p.domain = {-1.0, 1.0};
  p.n = 4;
  p.m0 = [](double x) { return (x - 4.0) / (x - 2.0); };
  p.m0_dx = [](double x) {
    const double d = x - 2.0;
    return 2.0 / (d * d);
  };
  p.m0_dxx = [](double x) {
    const double d = x - 2.0;
    return -4.0 / (d * d * d);
  };
  attach_power_basis(p, p.n);

  p.pde_residual = [re](const AnsatzEval& e, double, double) {
    return e.dt - e.dxx / re + e.value * e.dx;
  };
  p.exact = [](double x, double t) { return 1.0 - 2.0 / (x - t - 2.0); };
  p.params = {{"re", re}};
  p.quadratic_residual = true;
  return p;
}

ProblemSpec burgers_fisher(double alpha, double beta, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("burgers_fisher: omega must be > 0");

  const double rate = -alpha * omega / (2.0 * (omega + 1.0));
  const double inv_omega = 1.0 / omega;
  auto wave = [rate](double x) { return 0.5 + 0.5 * std::tanh(rate * x); };
  auto wave_dx = [rate](double x) {
    const double s = sech(rate * x);
    return 0.5 * rate * s * s;
  };
  auto wave_dxx = [rate](double x) {
    const double s = sech(rate * x);
    return -rate * rate * s * s * std::tanh(rate * x);
  };

  ProblemSpec p;
  p.name = "burgers-fisher";
  p.domain = {0.0, 1.0};
  p.n = 4;
  p.m0 = [wave, inv_omega](double x) { return std::pow(wave(x), inv_omega); };
  p.m0_dx = [wave, wave_dx, inv_omega](double x) {
    return inv_omega * std::pow(wave(x), inv_omega - 1.0) * wave_dx(x);
  };
  p.m0_dxx = [wave, wave_dx, wave_dxx, inv_omega](double x) {
    const double s = wave(x);
    const double sx = wave_dx(x);
    return inv_omega * (inv_omega - 1.0) * std::pow(s, inv_omega - 2.0) * sx * sx +
           inv_omega * std::pow(s, inv_omega - 1.0) * wave_dxx(x);
  };
  attach_power_basis(p, p.n);

  const bool integer_omega = std::fabs(omega - std::round(omega)) < 1e-12;
  p.pde_residual = [alpha, beta, omega, integer_omega](const AnsatzEval& e, double x, double) {
    if (!integer_omega && !(e.value > 0.0))
      throw NonFiniteError("burgers_fisher residual: ansatz value " +
                           std::to_string(e.value) + " requires a positive base at x = " +
                           std::to_string(x) + " for non-integer omega");
    const double pw = std::pow(e.value, omega);
    return e.dt + alpha * pw * e.dx - e.dxx - beta * e.value * (1.0 - pw);
  };
  const double speed = alpha / (omega + 1.0) + beta * (omega + 1.0) / alpha;
  p.exact = [rate, speed, inv_omega](double x, double t) {
    return std::pow(0.5 + 0.5 * std::tanh(rate * (x - speed * t)), inv_omega);
  };
  p.params = {{"alpha", alpha}, {"beta", beta}, {"omega", omega}};
  p.quadratic_residual = omega == 1.0;
  return p;
}

ProblemSpec burgers_fisher_published() {
  ProblemSpec p = burgers_fisher(1.0, 1.0, 1.0);
  p.name = "burgers-fisher-published";
  const ResidualFn base = p.pde_residual;
  const ScalarFn m0_dx = p.m0_dx;
  p.pde_residual = [base, m0_dx](const AnsatzEval& e, double x, double t) {
    return base(e, x, t) - 2.0 * t * m0_dx(x) * e.dt;
  };
  return p;
}

std::vector<std::string> problem_ids() {
  return {"bbm", "burgers-fisher", "fisher", "shock"};
}

ProblemSpec problem_by_id(const std::string& id,
                          const std::map<std::string, double>& params) {
  auto value_or = [&params](const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (id == "bbm") return bbm();
  if (id == "fisher") return fisher();
  if (id == "shock") return shock(value_or("re", 1.0));
  if (id == "burgers-fisher")
    return burgers_fisher(value_or("alpha", 1.0), value_or("beta", 1.0),
                          value_or("omega", 1.0));
  throw std::invalid_argument("unknown problem id '" + id +
                              "' (expected bbm, burgers-fisher, fisher, or shock)");
}

}  // namespace oafm
