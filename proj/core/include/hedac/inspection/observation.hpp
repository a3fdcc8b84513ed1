#pragma once

#include "hedac/geometry/bvh.hpp"
#include "hedac/geometry/surface_mesh.hpp"
#include "hedac/types.hpp"

#include <cstdint>
#include <vector>

namespace hedac {

/// Cone field-of-view model: apex at the agent, axis along the camera
/// orientation, height cone_height and base diameter cone_diameter.
struct CameraModel {
    double cone_height = 0.0;   ///< C_H [m]
    double cone_diameter = 0.0; ///< C_D [m]; radius at full height is C_D / 2
    int trigger_interval = 1;   ///< record every k-th step

    [[nodiscard]] double cone_radius() const { return 0.5 * cone_diameter; }
    void validate() const;
};

/// Per-surface-node observation counts. Counts only grow, so the surface
/// coverage share is nondecreasing over a run.
class ObservationLedger {
public:
    ObservationLedger() = default;
    explicit ObservationLedger(std::size_t node_count) : counts_(node_count, 0) {}

    [[nodiscard]] std::size_t node_count() const { return counts_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& counts() const { return counts_; }
    [[nodiscard]] std::uint32_t count(std::size_t node) const { return counts_[node]; }
    void increment(std::size_t node) { ++counts_[node]; }

private:
    std::vector<std::uint32_t> counts_;
};

/// Camera orientation: unit direction from p toward the nearest structure
/// point. Throws ValidationError when p touches the structure (d_s = 0).
Vec3 camera_orientation(const Vec3& p, const Bvh& structure_bvh);

/// Marks every surface node that lies inside the cone (apex excluded, height
/// inclusive) and passes the direct line-of-sight test. The occlusion ray
/// ignores hits within ray_slack of the target so the node's own incident
/// triangles never occlude it; slack defaults to 1e-4 * cone_height.
void record_view(const Vec3& position, const Vec3& orientation, const CameraModel& camera,
                 const SurfaceMesh& surface, const Bvh& structure_bvh, ObservationLedger& ledger,
                 int threads = 1);

/// Share of surface nodes observed at least once.
double surface_coverage(const ObservationLedger& ledger);

/// Area-weighted variant for non-uniform meshes: each node weighs one third
/// of its incident triangle area.
double surface_coverage_area_weighted(const ObservationLedger& ledger, const SurfaceMesh& surface);

} // namespace hedac
