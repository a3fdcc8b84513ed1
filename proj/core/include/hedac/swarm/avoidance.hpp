#pragma once

#include "hedac/types.hpp"

#include <optional>
#include <vector>

namespace hedac {

/// Collision-avoidance direction problem: maximize c._w over the unit
/// sphere subject to row . w >= 0 for every constraint row. Rows are unit
/// repulsion directions away from close neighbors, the boundary-distance
/// gradient when the boundary is close, and the preferred direction.
struct AvoidanceProblem {
    std::vector<Vec3> rows; ///< unit constraint normals, at least one
    Vec3 objective = Vec3::Zero();
    double safety_radius = 0.0; ///< epsilon, carried for diagnostics

    void validate() const;
};

/// Global maximizer of the problem, or nullopt when the feasible cone is
/// empty (the stand-still case). The returned vector is unit-norm and
/// satisfies every constraint within 1e-8. Solved by active-set
/// enumeration: the optimum is either the normalized objective, its
/// projection onto one constraint plane, or an edge direction of a
/// constraint-plane pair.
std::optional<Vec3> solve_avoidance(const AvoidanceProblem& problem);

} // namespace hedac
