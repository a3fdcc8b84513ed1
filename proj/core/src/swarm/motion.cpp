#include "hedac/swarm/motion.hpp"

#include "hedac/error.hpp"

#include <cmath>
#include <string>

namespace hedac {

Vec3 preferred_direction(const AgentState& agent, const PotentialField& psi,
                         const CellLocator& locator) {
    const Vec3 g = grad_at(psi, locator, agent.position);
    const double n = g.norm();
    if (n < 1e-14) return agent.direction; // flat potential: keep heading
    return g / n;
}

DistanceReport min_distances(std::size_t i, std::span<const Vec3> positions, const TetMesh& mesh,
                             const Bvh* boundary_bvh) {
    DistanceReport report;
    report.boundary = distance_to_boundary(positions[i], mesh, boundary_bvh).distance;
    report.neighbors.assign(positions.size(), kInf);
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == i) continue;
        report.neighbors[j] = (positions[j] - positions[i]).norm();
        report.min_neighbor = std::min(report.min_neighbor, report.neighbors[j]);
    }
    return report;
}

AvoidanceProblem build_avoidance_problem(std::size_t i, std::span<const Vec3> positions,
                                         const Vec3& preferred, const DistanceReport& distances,
                                         const Vec3& boundary_away, double epsilon) {
    AvoidanceProblem problem;
    problem.safety_radius = epsilon;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == i || distances.neighbors[j] >= 2.0 * epsilon) continue;
        const Vec3 away = positions[i] - positions[j];
        const double n = away.norm();
        if (n > 0.0) problem.rows.push_back(away / n);
    }
    if (distances.boundary < 2.0 * epsilon && boundary_away.norm() > 0.0)
        problem.rows.push_back(boundary_away.normalized());
    problem.rows.push_back(preferred);

    problem.objective = Vec3::Zero();
    for (const Vec3& r : problem.rows) problem.objective += r;
    return problem;
}

Vec3 step_direction(const Vec3& preferred, const std::optional<Vec3>& avoidance, double d,
                    double epsilon) {
    if (d >= 2.0 * epsilon) return preferred;
    if (!avoidance) return Vec3::Zero(); // infeasible cone: stand still
    if (d < epsilon) return *avoidance;
    // Gradual correction over [epsilon, 2*epsilon).
    const double s = d / epsilon;
    const Vec3 blended = (2.0 - s) * (*avoidance) + (s - 1.0) * preferred;
    const double n = blended.norm();
    if (n < 1e-14) return Vec3::Zero(); // exactly opposed: stand still
    return blended / n;
}

void advance(AgentState& agent, const Vec3& direction, double dt, const CellLocator& locator) {
    const Vec3 next = agent.position + agent.speed * dt * direction;
    if (!locator.inside(next)) {
        throw OutsideDomainError(
            "agent " + std::to_string(agent.id) + " left the domain: position (" +
            std::to_string(next.x()) + ", " + std::to_string(next.y()) + ", " +
            std::to_string(next.z()) +
            "); check the safety distance / time step configuration");
    }
    agent.position = next;
    if (direction.norm() > 0.0) agent.direction = direction;
}

} // namespace hedac
