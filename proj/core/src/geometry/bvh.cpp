#include "hedac/geometry/bvh.hpp"

#include "hedac/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hedac {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // Ericson, Real-Time Collision Detection, 5.1.5.
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;

    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
        return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);

    const double denom = 1.0 / (va + vb + vc);
    return a + ab * (vb * denom) + ac * (vc * denom);
}

double ray_triangle_param(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                          const Vec3& c) {
    constexpr double kEps = 1e-13;
    const Vec3 e1 = b - a, e2 = c - a;
    const Vec3 pvec = dir.cross(e2);
    const double det = e1.dot(pvec);
    if (std::abs(det) < kEps) return -1.0; // parallel
    const double inv_det = 1.0 / det;
    const Vec3 tvec = origin - a;
    const double u = tvec.dot(pvec) * inv_det;
    if (u < 0.0 || u > 1.0) return -1.0;
    const Vec3 qvec = tvec.cross(e1);
    const double v = dir.dot(qvec) * inv_det;
    if (v < 0.0 || u + v > 1.0) return -1.0;
    return e2.dot(qvec) * inv_det;
}

Bvh Bvh::build(std::span<const Vec3> nodes, std::span<const Tri> faces) {
    if (faces.empty()) throw ValidationError("cannot build BVH over an empty triangle set");

    Bvh bvh;
    const std::size_t n = faces.size();
    bvh.tri_a_.resize(n);
    bvh.tri_b_.resize(n);
    bvh.tri_c_.resize(n);
    std::vector<Vec3> centroids(n);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = 0; i < n; ++i) {
        bvh.tri_a_[i] = nodes[faces[i][0]];
        bvh.tri_b_[i] = nodes[faces[i][1]];
        bvh.tri_c_[i] = nodes[faces[i][2]];
        centroids[i] = (bvh.tri_a_[i] + bvh.tri_b_[i] + bvh.tri_c_[i]) / 3.0;
    }

    bvh.nodes_.reserve(2 * n);
    bvh.nodes_.emplace_back();
    bvh.build_recursive(0, order, 0, static_cast<int>(n), centroids);

    // Store triangles in traversal order so leaves are contiguous.
    std::vector<Vec3> a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = bvh.tri_a_[order[i]];
        b[i] = bvh.tri_b_[order[i]];
        c[i] = bvh.tri_c_[order[i]];
    }
    bvh.tri_a_ = std::move(a);
    bvh.tri_b_ = std::move(b);
    bvh.tri_c_ = std::move(c);
    return bvh;
}

void Bvh::build_recursive(std::int32_t node, std::vector<std::uint32_t>& order, int begin,
                          int end, const std::vector<Vec3>& centroids) {
    Aabb box;
    for (int i = begin; i < end; ++i) {
        box.expand(tri_a_[order[i]]);
        box.expand(tri_b_[order[i]]);
        box.expand(tri_c_[order[i]]);
    }
    nodes_[node].box = box;

    const int count = end - begin;
    if (count <= 4) {
        nodes_[node].left = begin;
        nodes_[node].count = count;
        return;
    }

    // Median split along the longest centroid-bounds axis.
    Aabb cbox;
    for (int i = begin; i < end; ++i) cbox.expand(centroids[order[i]]);
    int axis = 0;
    cbox.extent().maxCoeff(&axis);
    const int mid = begin + count / 2;
    std::nth_element(order.begin() + begin, order.begin() + mid, order.begin() + end,
                     [&](std::uint32_t x, std::uint32_t y) {
                         if (centroids[x][axis] != centroids[y][axis])
                             return centroids[x][axis] < centroids[y][axis];
                         return x < y; // deterministic tie-break
                     });

    const auto left = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_.emplace_back();
    nodes_[node].left = left;
    nodes_[node].right = left + 1;
    nodes_[node].count = 0;
    build_recursive(left, order, begin, mid, centroids);
    build_recursive(left + 1, order, mid, end, centroids);
}

Bvh::ClosestHit Bvh::closest(const Vec3& p) const {
    double best_sq = kInf;
    Vec3 best_point = Vec3::Zero();
    std::uint32_t best_tri = 0;
    bool tie_seen = false;

    // Explicit stack, nearer child first; only strict improvements replace
    // the current best, so ties resolve to the first triangle encountered.
    std::int32_t stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& nd = nodes_[stack[--top]];
        if (nd.box.sq_distance(p) >= best_sq) continue;
        if (nd.count > 0) {
            for (std::int32_t i = nd.left; i < nd.left + nd.count; ++i) {
                const Vec3 q = closest_point_on_triangle(p, tri_a_[i], tri_b_[i], tri_c_[i]);
                const double sq = (q - p).squaredNorm();
                if (sq < best_sq) {
                    best_sq = sq;
                    best_point = q;
                    best_tri = static_cast<std::uint32_t>(i);
                } else if (sq == best_sq) {
                    tie_seen = true;
                }
            }
        } else {
            const double dl = nodes_[nd.left].box.sq_distance(p);
            const double dr = nodes_[nd.right].box.sq_distance(p);
            // Push the farther child first so the nearer is explored first.
            if (dl <= dr) {
                stack[top++] = nd.right;
                stack[top++] = nd.left;
            } else {
                stack[top++] = nd.left;
                stack[top++] = nd.right;
            }
        }
    }
    if (tie_seen) degenerate_ties_.fetch_add(1, std::memory_order_relaxed);
    return {std::sqrt(best_sq), best_point, best_tri};
}

namespace {

bool ray_box_overlap(const Aabb& box, const Vec3& origin, const Vec3& inv_dir, double t_min,
                     double t_max) {
    for (int k = 0; k < 3; ++k) {
        double t0 = (box.min[k] - origin[k]) * inv_dir[k];
        double t1 = (box.max[k] - origin[k]) * inv_dir[k];
        if (inv_dir[k] < 0.0) std::swap(t0, t1);
        t_min = std::max(t_min, t0);
        t_max = std::min(t_max, t1);
        if (t_max < t_min) return false;
    }
    return true;
}

} // namespace

bool Bvh::any_hit(const Vec3& origin, const Vec3& target, double t_min, double t_max) const {
    const Vec3 dir = target - origin;
    const Vec3 inv_dir = dir.cwiseInverse();

    std::int32_t stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& nd = nodes_[stack[--top]];
        if (!ray_box_overlap(nd.box, origin, inv_dir, t_min, t_max)) continue;
        if (nd.count > 0) {
            for (std::int32_t i = nd.left; i < nd.left + nd.count; ++i) {
                const double t = ray_triangle_param(origin, dir, tri_a_[i], tri_b_[i], tri_c_[i]);
                if (t > t_min && t < t_max) return true;
            }
        } else {
            stack[top++] = nd.left;
            stack[top++] = nd.right;
        }
    }
    return false;
}

int Bvh::count_crossings(const Vec3& p, const Vec3& dir) const {
    const Vec3 inv_dir = dir.cwiseInverse();
    int crossings = 0;

    std::int32_t stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& nd = nodes_[stack[--top]];
        if (!ray_box_overlap(nd.box, p, inv_dir, 0.0, kInf)) continue;
        if (nd.count > 0) {
            for (std::int32_t i = nd.left; i < nd.left + nd.count; ++i) {
                const double t = ray_triangle_param(p, dir, tri_a_[i], tri_b_[i], tri_c_[i]);
                if (t > 0.0) ++crossings;
            }
        } else {
            stack[top++] = nd.left;
            stack[top++] = nd.right;
        }
    }
    return crossings;
}

} // namespace hedac
