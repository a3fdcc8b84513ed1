#pragma once

#include "hedac/fields/gaussian_action.hpp"
#include "hedac/inspection/observation.hpp"
#include "hedac/pde/helmholtz.hpp"
#include "hedac/types.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hedac {

/// Full run configuration, loaded from a sectioned key-value file. See
/// load_scenario for the schema.
struct Scenario {
    // [domain] -- either a generated box or an imported MSH mesh.
    std::optional<Aabb> domain_box;
    Eigen::Vector3i domain_resolution = Eigen::Vector3i::Zero();
    std::string domain_mesh_file;  ///< Gmsh MSH v2, alternative to the box
    bool exclude_structure = true; ///< carve the structure out of the box mesh

    // [structure]
    std::string structure_mesh_file; ///< STL or OBJ; empty = no structure

    // [target]
    enum class TargetKind { box, inspection };
    TargetKind target_kind = TargetKind::box;
    Aabb target_box;
    double inspection_distance = 0.0;  ///< d_m
    double inspection_broadness = 0.0; ///< d_sigma

    // [fleet]
    int agent_count = 0;
    double speed = 0.0;                ///< v, same for the whole fleet
    double action_intensity = 1.0;     ///< Phi
    double action_range = 1.0;         ///< sigma
    double agent_radius = 0.0;         ///< M, physical halo
    std::vector<Vec3> initial_positions; ///< explicit; empty = seeded sampling
    Aabb spawn_box;
    std::uint64_t seed = 0;

    // [hedac]
    double conduction = 1.0; ///< k
    double dt = 1.0;
    double duration = 0.0;
    double epsilon = 0.0; ///< safety distance
    HelmholtzSolver solver = HelmholtzSolver::direct;
    /// Accept configurations whose step length v*dt exceeds epsilon - M.
    /// Needed to reproduce published parameter sets that violate the safety
    /// inequality; collision avoidance then cannot give hard guarantees.
    bool unsafe_step_override = false;

    // [camera]
    std::optional<CameraModel> camera;

    // [output]
    std::string output_directory = "out";
    int snapshot_every = 0; ///< 0 = no field snapshots
    int threads = 1;

    std::string config_directory; ///< for resolving relative mesh paths

    [[nodiscard]] long step_count() const;
    [[nodiscard]] std::string resolve_path(const std::string& relative) const;

    /// Safety inequality, step-count integrality, cross-section checks.
    void validate() const;
};

/// Parses and validates a scenario file. Unknown keys, missing fields and
/// invariant violations all throw ValidationError with the offending field.
Scenario load_scenario(const std::string& path);

} // namespace hedac
