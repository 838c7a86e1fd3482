#pragma once

#include <map>
#include <string>
#include <vector>

#include "oafm/types.hpp"

namespace oafm {

/// Benjamin-Bona-Mahony (regularized long-wave) benchmark on [0, 0.07]:
/// M_t - M_xxt + M_x + M M_x = 0 with a sech^2 solitary-wave profile.
ProblemSpec bbm();

/// Fisher reaction-diffusion benchmark on [0, 1]:
/// M_t = M_xx + 6 M (1 - M), traveling-front solution of speed 5.
ProblemSpec fisher();

/// Uniformly propagating shock benchmark on [-1, 1]:
/// M_t = (1/re) M_xx - M M_x. Throws std::invalid_argument for re <= 0.
ProblemSpec shock(double re = 1.0);

/// Burgers-Fisher benchmark on [0, 1]:
/// M_t + alpha M^omega M_x - M_xx = beta M (1 - M^omega).
/// Throws std::invalid_argument for omega <= 0. For non-integer omega the
/// residual requires a positive ansatz value and raises NonFiniteError
/// otherwise.
ProblemSpec burgers_fisher(double alpha = 1.0, double beta = 1.0, double omega = 1.0);

/// Variant of burgers_fisher(1, 1, 1) whose coefficient system matches the
/// published reference tables for this benchmark: in those tables the
/// advection transport term t * phi_j * dM0/dx enters the linearized system
/// with opposite sign, which this variant realizes as an extra residual term
/// -2 t (dM0/dx) dM/dt. The exact solution is the true traveling wave, so it
/// does not annihilate this residual; use burgers_fisher() for the physical
/// operator.
ProblemSpec burgers_fisher_published();

/// Identifiers accepted by problem_by_id, in alphabetical order.
std::vector<std::string> problem_ids();

/// Construct a benchmark by identifier ("bbm", "burgers-fisher", "fisher",
/// "shock"). Recognized params: re (shock); alpha, beta, omega
/// (burgers-fisher). Throws std::invalid_argument for unknown ids.
ProblemSpec problem_by_id(const std::string& id,
                          const std::map<std::string, double>& params = {});

}  // namespace oafm
