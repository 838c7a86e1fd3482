#include "oafm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oafm/errors.hpp"

namespace oafm {

QuadratureRule gauss_legendre_rule(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("gauss_legendre_rule: order must be >= 1");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw std::invalid_argument("gauss_legendre_rule: domain must be finite with a < b");

  const int n = order;
  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // Nodes are roots of the Legendre polynomial P_n, found by Newton iteration
  // from the cosine estimate; weights follow from the derivative P_n'.
  const int half_count = (n + 1) / 2;
  for (int i = 0; i < half_count; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) <= 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = mid - half * z;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = mid + half * z;
    const double w = 2.0 * half / ((1.0 - z * z) * pp * pp);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  return rule;
}

double integrate(const ScalarFn& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fx = f(rule.nodes[i]);
    if (!std::isfinite(fx))
      throw NonFiniteError("integrate: integrand not finite at x = " +
                           std::to_string(rule.nodes[i]));
    sum += rule.weights[i] * fx;
  }
  return sum;
}

}  // namespace oafm
