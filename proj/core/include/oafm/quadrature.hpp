#pragma once

#include "oafm/types.hpp"

namespace oafm {

/// Gauss-Legendre rule with `order` points mapped affinely to [a, b].
/// Exact for polynomials of degree <= 2*order - 1.
/// Throws std::invalid_argument for order == 0 or a degenerate interval.
QuadratureRule gauss_legendre_rule(int order, double a, double b);

/// Weighted sum of f over the rule's nodes.
/// Throws NonFiniteError if f is not finite at some node.
double integrate(const ScalarFn& f, const QuadratureRule& rule);

}  // namespace oafm
