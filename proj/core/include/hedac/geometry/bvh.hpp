#pragma once

#include "hedac/types.hpp"

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

namespace hedac {

/// Axis-aligned bounding-box tree over a triangle set. Built once, queried
/// concurrently. Traversal order is deterministic (near child first, strict
/// improvement only), so equidistant-feature ties resolve the same way on
/// every run; such ties bump degenerate_ties().
class Bvh {
public:
    Bvh() = default;
    Bvh(Bvh&& o) noexcept
        : nodes_(std::move(o.nodes_)),
          tri_a_(std::move(o.tri_a_)),
          tri_b_(std::move(o.tri_b_)),
          tri_c_(std::move(o.tri_c_)),
          degenerate_ties_(o.degenerate_ties_.load(std::memory_order_relaxed)) {}
    Bvh& operator=(Bvh&& o) noexcept {
        nodes_ = std::move(o.nodes_);
        tri_a_ = std::move(o.tri_a_);
        tri_b_ = std::move(o.tri_b_);
        tri_c_ = std::move(o.tri_c_);
        degenerate_ties_.store(o.degenerate_ties_.load(std::memory_order_relaxed),
                               std::memory_order_relaxed);
        return *this;
    }

    /// Copies the referenced triangles; the source containers may be freed
    /// afterwards. Throws ValidationError on an empty triangle set.
    static Bvh build(std::span<const Vec3> nodes, std::span<const Tri> faces);

    struct ClosestHit {
        double distance = 0.0;
        Vec3 point = Vec3::Zero();
        std::uint32_t triangle = 0;
    };

    [[nodiscard]] ClosestHit closest(const Vec3& p) const;

    /// True iff any triangle intersects the ray origin + t*(target-origin)
    /// with t in (t_min, t_max).
    [[nodiscard]] bool any_hit(const Vec3& origin, const Vec3& target, double t_min,
                               double t_max) const;

    /// Number of triangle crossings of the ray p + t*dir, t > 0. Used for
    /// inside/outside parity tests against closed surfaces.
    [[nodiscard]] int count_crossings(const Vec3& p, const Vec3& dir) const;

    [[nodiscard]] const Aabb& bounds() const { return nodes_[0].box; }
    [[nodiscard]] std::size_t triangle_count() const { return tri_a_.size(); }
    [[nodiscard]] std::uint64_t degenerate_ties() const {
        return degenerate_ties_.load(std::memory_order_relaxed);
    }

    /// Triangle vertices as stored (triangle index refers to build order).
    void triangle(std::uint32_t t, Vec3& a, Vec3& b, Vec3& c) const {
        a = tri_a_[t];
        b = tri_b_[t];
        c = tri_c_[t];
    }

private:
    struct Node {
        Aabb box;
        std::int32_t left = -1;   // internal: child index; leaf: first triangle
        std::int32_t count = 0;   // leaf: triangle count; internal: 0
        std::int32_t right = -1;
    };

    void build_recursive(std::int32_t node, std::vector<std::uint32_t>& order, int begin,
                         int end, const std::vector<Vec3>& centroids);

    std::vector<Node> nodes_;
    std::vector<Vec3> tri_a_, tri_b_, tri_c_;
    mutable std::atomic<std::uint64_t> degenerate_ties_{0};
};

/// Closest point on triangle (a,b,c) to p.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

/// Moller-Trumbore, double sided. Returns parametric t of the hit along
/// (target - origin), or a negative value when there is no hit.
double ray_triangle_param(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                          const Vec3& c);

} // namespace hedac
