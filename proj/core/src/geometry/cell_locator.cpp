#include "hedac/geometry/cell_locator.hpp"

#include "hedac/error.hpp"

#include <algorithm>
#include <cmath>

namespace hedac {
namespace {

// Barycentric tolerance: points numerically on a face count as inside.
constexpr double kBaryTol = 1e-10;

} // namespace

CellLocator::CellLocator(const TetMesh& mesh) : mesh_(&mesh) {
    box_ = mesh.bounds();
    const double target_buckets = static_cast<double>(mesh.cells.size());
    const double per_axis = std::cbrt(std::max(1.0, target_buckets));
    nx_ = std::max<std::size_t>(1, static_cast<std::size_t>(per_axis));
    ny_ = nx_;
    nz_ = nx_;
    for (int k = 0; k < 3; ++k) {
        const double ext = box_.extent()[k];
        inv_cell_[k] = ext > 0.0 ? static_cast<double>(k == 0 ? nx_ : (k == 1 ? ny_ : nz_)) / ext
                                 : 0.0;
    }
    buckets_.resize(nx_ * ny_ * nz_);

    auto clamp_idx = [](int v, std::size_t n) {
        return std::clamp(v, 0, static_cast<int>(n) - 1);
    };
    for (std::uint32_t c = 0; c < mesh.cells.size(); ++c) {
        Aabb cb;
        for (Index v : mesh.cells[c]) cb.expand(mesh.nodes[v]);
        const int ix0 = clamp_idx(static_cast<int>((cb.min.x() - box_.min.x()) * inv_cell_.x()), nx_);
        const int ix1 = clamp_idx(static_cast<int>((cb.max.x() - box_.min.x()) * inv_cell_.x()), nx_);
        const int iy0 = clamp_idx(static_cast<int>((cb.min.y() - box_.min.y()) * inv_cell_.y()), ny_);
        const int iy1 = clamp_idx(static_cast<int>((cb.max.y() - box_.min.y()) * inv_cell_.y()), ny_);
        const int iz0 = clamp_idx(static_cast<int>((cb.min.z() - box_.min.z()) * inv_cell_.z()), nz_);
        const int iz1 = clamp_idx(static_cast<int>((cb.max.z() - box_.min.z()) * inv_cell_.z()), nz_);
        for (int ix = ix0; ix <= ix1; ++ix)
            for (int iy = iy0; iy <= iy1; ++iy)
                for (int iz = iz0; iz <= iz1; ++iz) buckets_[bucket_of(ix, iy, iz)].push_back(c);
    }
    // Ascending cell index per bucket: ties on shared faces resolve to the
    // lowest cell index.
    for (auto& b : buckets_) std::sort(b.begin(), b.end());
}

std::optional<PointLocation> CellLocator::try_locate(const Vec3& p) const {
    if (!box_.contains(p)) return std::nullopt;
    auto clamp_idx = [](int v, std::size_t n) {
        return std::clamp(v, 0, static_cast<int>(n) - 1);
    };
    const int ix = clamp_idx(static_cast<int>((p.x() - box_.min.x()) * inv_cell_.x()), nx_);
    const int iy = clamp_idx(static_cast<int>((p.y() - box_.min.y()) * inv_cell_.y()), ny_);
    const int iz = clamp_idx(static_cast<int>((p.z() - box_.min.z()) * inv_cell_.z()), nz_);

    for (std::uint32_t c : buckets_[bucket_of(ix, iy, iz)]) {
        const Tet& t = mesh_->cells[c];
        const Vec3& a = mesh_->nodes[t[0]];
        const Vec3 e1 = mesh_->nodes[t[1]] - a;
        const Vec3 e2 = mesh_->nodes[t[2]] - a;
        const Vec3 e3 = mesh_->nodes[t[3]] - a;
        const double vol6 = e1.cross(e2).dot(e3);
        if (vol6 == 0.0) continue;
        const Vec3 r = p - a;
        const double l1 = r.cross(e2).dot(e3) / vol6;
        const double l2 = e1.cross(r).dot(e3) / vol6;
        const double l3 = e1.cross(e2).dot(r) / vol6;
        const double l0 = 1.0 - l1 - l2 - l3;
        if (l0 >= -kBaryTol && l1 >= -kBaryTol && l2 >= -kBaryTol && l3 >= -kBaryTol) {
            PointLocation loc;
            loc.cell = c;
            loc.barycentric = {l0, l1, l2, l3};
            // Clamp face-adjacent negatives to exactly [0,1], keep sum 1.
            double sum = 0.0;
            for (double& l : loc.barycentric) {
                l = std::clamp(l, 0.0, 1.0);
                sum += l;
            }
            for (double& l : loc.barycentric) l /= sum;
            return loc;
        }
    }
    return std::nullopt;
}

PointLocation CellLocator::locate(const Vec3& p) const {
    auto loc = try_locate(p);
    if (!loc)
        throw OutsideDomainError("point (" + std::to_string(p.x()) + ", " + std::to_string(p.y()) +
                                 ", " + std::to_string(p.z()) + ") is outside the domain");
    return *loc;
}

} // namespace hedac
