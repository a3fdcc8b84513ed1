#include "hedac/geometry/distance.hpp"

#include "hedac/error.hpp"

#include <cmath>

namespace hedac {
namespace {

constexpr double kDegenerate = 1e-300;

DistanceQueryResult toward_closest(const Vec3& p, const Vec3& closest) {
    DistanceQueryResult r;
    r.closest_point = closest;
    r.distance = (closest - p).norm();
    if (r.distance < kDegenerate) {
        r.distance = 0.0;
        r.degenerate = true;
    } else {
        r.direction = (closest - p) / r.distance;
    }
    return r;
}

} // namespace

DistanceQueryResult distance_to_surface(const Vec3& p, const Bvh& bvh) {
    const auto hit = bvh.closest(p);
    return toward_closest(p, hit.point);
}

Bvh build_boundary_bvh(const TetMesh& mesh) {
    return Bvh::build(mesh.nodes, mesh.boundary_faces);
}

DistanceQueryResult distance_to_boundary(const Vec3& p, const TetMesh& mesh,
                                         const Bvh* boundary_bvh) {
    DistanceQueryResult r;
    if (mesh.pure_box) {
        const Aabb& box = *mesh.pure_box;
        if (!box.contains(p))
            throw OutsideDomainError("boundary distance query outside the box domain");
        // Nearest of the six faces.
        double best = kInf;
        int axis = 0;
        bool to_min = true;
        for (int k = 0; k < 3; ++k) {
            const double dmin = p[k] - box.min[k];
            const double dmax = box.max[k] - p[k];
            if (dmin < best) {
                best = dmin;
                axis = k;
                to_min = true;
            }
            if (dmax < best) {
                best = dmax;
                axis = k;
                to_min = false;
            }
        }
        r.distance = best;
        r.closest_point = p;
        r.closest_point[axis] = to_min ? box.min[axis] : box.max[axis];
        if (best < kDegenerate) {
            r.distance = 0.0;
            r.degenerate = true;
        } else {
            // Distance-field gradient: away from the boundary.
            r.direction = Vec3::Zero();
            r.direction[axis] = to_min ? 1.0 : -1.0;
        }
        return r;
    }

    if (!boundary_bvh)
        throw Error("non-box domain requires a boundary BVH for distance queries");
    const auto hit = boundary_bvh->closest(p);
    r.closest_point = hit.point;
    r.distance = (hit.point - p).norm();
    if (r.distance < kDegenerate) {
        r.distance = 0.0;
        r.degenerate = true;
    } else {
        r.direction = (p - hit.point) / r.distance; // away from the boundary
    }
    return r;
}

} // namespace hedac
