// Umbrella header.
#pragma once

#include "branchon/compare.hpp"
#include "branchon/errors.hpp"
#include "branchon/hamiltonian_series.hpp"
#include "branchon/io.hpp"
#include "branchon/laguerre.hpp"
#include "branchon/ode.hpp"
#include "branchon/quadrature.hpp"
#include "branchon/radial.hpp"
#include "branchon/rspt.hpp"
#include "branchon/spectral.hpp"
#include "branchon/stencil.hpp"
#include "branchon/trajectory.hpp"
#include "branchon/transform.hpp"
#include "branchon/tridiagonal.hpp"
#include "branchon/type1.hpp"
#include "branchon/type2.hpp"
#include "branchon/types.hpp"
