#pragma once

#include "hedac/geometry/cell_locator.hpp"
#include "hedac/geometry/distance.hpp"
#include "hedac/pde/helmholtz.hpp"
#include "hedac/swarm/agent.hpp"
#include "hedac/swarm/avoidance.hpp"
#include "hedac/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hedac {

/// Unit ascent direction of the potential at the agent position. Falls back
/// to the agent's previous direction when the gradient is numerically zero.
Vec3 preferred_direction(const AgentState& agent, const PotentialField& psi,
                         const CellLocator& locator);

struct DistanceReport {
    double boundary = kInf;            ///< d_b
    std::vector<double> neighbors;     ///< d(i,j); self entry is +inf
    double min_neighbor = kInf;
    [[nodiscard]] double overall() const { return std::min(boundary, min_neighbor); }
};

/// Exact Euclidean distances from agent i to every other agent and to the
/// domain boundary.
DistanceReport min_distances(std::size_t i, std::span<const Vec3> positions, const TetMesh& mesh,
                             const Bvh* boundary_bvh);

/// Assembles the avoidance problem for agent i: repulsion rows away from
/// every neighbor closer than 2*epsilon, the boundary gradient row when
/// d_b < 2*epsilon, and the preferred direction row. The objective is the
/// sum of all rows.
AvoidanceProblem build_avoidance_problem(std::size_t i, std::span<const Vec3> positions,
                                         const Vec3& preferred, const DistanceReport& distances,
                                         const Vec3& boundary_away, double epsilon);

/// Three-case motion blend. d is the overall minimum distance; avoidance
/// holds the solver result (nullopt = infeasible). Returns the unit step
/// direction, or the zero vector for stand-still.
Vec3 step_direction(const Vec3& preferred, const std::optional<Vec3>& avoidance, double d,
                    double epsilon);

/// Kinematic step: position += speed * dt * direction. Throws
/// OutsideDomainError with step diagnostics when the new position leaves
/// the domain.
void advance(AgentState& agent, const Vec3& direction, double dt, const CellLocator& locator);

} // namespace hedac
