#include "hedac/geometry/node_grid.hpp"

#include <algorithm>
#include <cmath>

namespace hedac {

NodeGrid::NodeGrid(const std::vector<Vec3>& points) : points_(&points) {
    for (const Vec3& p : points) box_.expand(p);
    // Aim for a few points per bucket.
    const double per_axis = std::cbrt(std::max<double>(1.0, static_cast<double>(points.size()) / 4.0));
    const Vec3 ext = box_.extent().cwiseMax(1e-12);
    cell_ = ext.maxCoeff() / std::max(1.0, per_axis);
    nx_ = std::max<std::size_t>(1, static_cast<std::size_t>(ext.x() / cell_) + 1);
    ny_ = std::max<std::size_t>(1, static_cast<std::size_t>(ext.y() / cell_) + 1);
    nz_ = std::max<std::size_t>(1, static_cast<std::size_t>(ext.z() / cell_) + 1);
    buckets_.resize(nx_ * ny_ * nz_);
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        const Vec3 q = points[i] - box_.min;
        const int ix = std::min<int>(static_cast<int>(q.x() / cell_), static_cast<int>(nx_) - 1);
        const int iy = std::min<int>(static_cast<int>(q.y() / cell_), static_cast<int>(ny_) - 1);
        const int iz = std::min<int>(static_cast<int>(q.z() / cell_), static_cast<int>(nz_) - 1);
        buckets_[bucket_of(ix, iy, iz)].push_back(i);
    }
    for (auto& b : buckets_) std::sort(b.begin(), b.end());
}

void NodeGrid::gather(const Vec3& center, double radius, std::vector<std::uint32_t>& out) const {
    out.clear();
    if (!points_) return;
    const double r2 = radius * radius;
    auto clamp_idx = [](int v, std::size_t n) {
        return std::clamp(v, 0, static_cast<int>(n) - 1);
    };
    const Vec3 lo = center.array() - radius;
    const Vec3 hi = center.array() + radius;
    const int ix0 = clamp_idx(static_cast<int>((lo.x() - box_.min.x()) / cell_), nx_);
    const int ix1 = clamp_idx(static_cast<int>((hi.x() - box_.min.x()) / cell_), nx_);
    const int iy0 = clamp_idx(static_cast<int>((lo.y() - box_.min.y()) / cell_), ny_);
    const int iy1 = clamp_idx(static_cast<int>((hi.y() - box_.min.y()) / cell_), ny_);
    const int iz0 = clamp_idx(static_cast<int>((lo.z() - box_.min.z()) / cell_), nz_);
    const int iz1 = clamp_idx(static_cast<int>((hi.z() - box_.min.z()) / cell_), nz_);
    for (int ix = ix0; ix <= ix1; ++ix) {
        for (int iy = iy0; iy <= iy1; ++iy) {
            for (int iz = iz0; iz <= iz1; ++iz) {
                for (std::uint32_t i : buckets_[bucket_of(ix, iy, iz)]) {
                    if (((*points_)[i] - center).squaredNorm() <= r2) out.push_back(i);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
}

} // namespace hedac
