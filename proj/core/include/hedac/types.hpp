#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <array>
#include <cstdint>
#include <limits>

namespace hedac {

using Vec3 = Eigen::Vector3d;
using Index = std::int32_t;

/// Triangle as node-index triple.
using Tri = std::array<Index, 3>;
/// Tetrahedron as node-index quadruple.
using Tet = std::array<Index, 4>;

struct Aabb {
    Vec3 min{Vec3::Constant(std::numeric_limits<double>::max())};
    Vec3 max{Vec3::Constant(std::numeric_limits<double>::lowest())};

    void expand(const Vec3& p) {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }
    void expand(const Aabb& b) {
        min = min.cwiseMin(b.min);
        max = max.cwiseMax(b.max);
    }
    [[nodiscard]] Vec3 extent() const { return max - min; }
    [[nodiscard]] Vec3 center() const { return 0.5 * (min + max); }
    [[nodiscard]] bool contains(const Vec3& p) const {
        return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
    }
    /// Squared distance from p to the box (0 when inside).
    [[nodiscard]] double sq_distance(const Vec3& p) const {
        const Vec3 d = (min - p).cwiseMax(p - max).cwiseMax(0.0);
        return d.squaredNorm();
    }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace hedac
