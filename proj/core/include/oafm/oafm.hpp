#pragma once

#include "oafm/assembly.hpp"
#include "oafm/errors.hpp"
#include "oafm/evaluation.hpp"
#include "oafm/problems.hpp"
#include "oafm/quadrature.hpp"
#include "oafm/solver.hpp"
#include "oafm/types.hpp"
