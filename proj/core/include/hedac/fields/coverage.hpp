#pragma once

#include "hedac/fields/gaussian_action.hpp"
#include "hedac/fields/scalar_field.hpp"
#include "hedac/geometry/node_grid.hpp"
#include "hedac/types.hpp"

#include <span>

namespace hedac {

/// rho += dt * sum_i action_i(||x - y_i||) at every node within any agent's
/// cutoff. Contributions are summed per node in ascending agent-id order
/// (ids = position in the spans after sorting by id is the caller's
/// responsibility; this function sums in span order), so a fixed span order
/// gives bitwise-reproducible results for any thread count.
void accumulate_coverage(ScalarField& rho, std::span<const Vec3> positions,
                         std::span<const GaussianAction> actions, double dt,
                         const NodeGrid& grid, int threads = 1);

} // namespace hedac
