#pragma once

#include "toricsyz/betti.hpp"
#include "toricsyz/koszul.hpp"

namespace toricsyz {

// Runs the oracle over the grid and eliminates formula variants cell by cell;
// see VariantReport for what is recorded. Oracle bounds can be overridden.
// Throws oracle_infeasible_error if a grid member is out of oracle reach.
VariantReport reconcile(const std::vector<SurfaceSpec>& grid, const OracleOptions& options);

}  // namespace toricsyz
