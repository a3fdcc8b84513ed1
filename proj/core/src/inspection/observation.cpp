#include "hedac/inspection/observation.hpp"

#include "hedac/error.hpp"
#include "hedac/geometry/distance.hpp"
#include "hedac/util/parallel.hpp"

#include <cmath>

namespace hedac {

void CameraModel::validate() const {
    if (cone_height <= 0.0) throw ValidationError("camera cone height must be > 0");
    if (cone_diameter <= 0.0) throw ValidationError("camera cone diameter must be > 0");
    if (trigger_interval < 1) throw ValidationError("camera trigger interval must be >= 1");
}

Vec3 camera_orientation(const Vec3& p, const Bvh& structure_bvh) {
    const DistanceQueryResult q = distance_to_surface(p, structure_bvh);
    if (q.degenerate)
        throw ValidationError("camera orientation undefined: agent touches the structure");
    return q.direction;
}

void record_view(const Vec3& position, const Vec3& orientation, const CameraModel& camera,
                 const SurfaceMesh& surface, const Bvh& structure_bvh, ObservationLedger& ledger,
                 int threads) {
    const double height = camera.cone_height;
    const double radius = camera.cone_radius();
    const double slack = 1e-4 * height;

    // Disjoint per-node writes keep the update deterministic under threads.
    std::vector<std::uint8_t> seen(surface.node_count(), 0);
    parallel_for(surface.node_count(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n) {
            const Vec3 rel = surface.nodes[n] - position;
            const double axial = rel.dot(orientation);
            if (axial <= 0.0 || axial > height) continue;
            const double radial_sq = (rel - axial * orientation).squaredNorm();
            const double allowed = radius * axial / height;
            if (radial_sq > allowed * allowed) continue;
            const double len = rel.norm();
            const double t_max = 1.0 - slack / len;
            if (structure_bvh.any_hit(position, surface.nodes[n], 1e-12, t_max)) continue;
            seen[n] = 1;
        }
    });
    for (std::size_t n = 0; n < seen.size(); ++n) {
        if (seen[n]) ledger.increment(n);
    }
}

double surface_coverage(const ObservationLedger& ledger) {
    if (ledger.node_count() == 0) return 0.0;
    std::size_t observed = 0;
    for (std::uint32_t c : ledger.counts()) observed += (c > 0);
    return static_cast<double>(observed) / static_cast<double>(ledger.node_count());
}

double surface_coverage_area_weighted(const ObservationLedger& ledger,
                                      const SurfaceMesh& surface) {
    std::vector<double> weight(surface.node_count(), 0.0);
    for (std::size_t f = 0; f < surface.face_count(); ++f) {
        const double share = surface.face_area(f) / 3.0;
        for (Index v : surface.faces[f]) weight[v] += share;
    }
    double total = 0.0, observed = 0.0;
    for (std::size_t n = 0; n < surface.node_count(); ++n) {
        total += weight[n];
        if (ledger.count(n) > 0) observed += weight[n];
    }
    return total > 0.0 ? observed / total : 0.0;
}

} // namespace hedac
