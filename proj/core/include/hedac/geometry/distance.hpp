#pragma once

#include "hedac/geometry/bvh.hpp"
#include "hedac/geometry/tet_mesh.hpp"
#include "hedac/types.hpp"

namespace hedac {

struct DistanceQueryResult {
    double distance = 0.0;
    Vec3 closest_point = Vec3::Zero();
    /// Unit vector; see the query functions for which way it points.
    Vec3 direction = Vec3::Zero();
    /// Set when distance == 0 and no direction is defined.
    bool degenerate = false;
};

/// Unsigned distance from p to the structure surface. direction points from
/// p toward the closest surface point, i.e. (closest - p) / distance.
DistanceQueryResult distance_to_surface(const Vec3& p, const Bvh& bvh);

/// Unsigned distance from p (inside the domain) to the nearest boundary
/// face. direction is the distance-field gradient and points away from the
/// boundary: p - distance * direction lands on the boundary. Uses the
/// analytic box formula when the mesh is a pure box, otherwise the given
/// boundary BVH.
DistanceQueryResult distance_to_boundary(const Vec3& p, const TetMesh& mesh,
                                         const Bvh* boundary_bvh);

/// BVH over the mesh's boundary faces (for domains that are not pure boxes).
Bvh build_boundary_bvh(const TetMesh& mesh);

} // namespace hedac
