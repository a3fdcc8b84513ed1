#pragma once

#include "hedac/types.hpp"

#include <cstdint>
#include <vector>

namespace hedac {

/// Uniform spatial hash over mesh nodes for radius queries (coverage
/// accumulation neighborhoods). Bucket contents are index-sorted, so
/// gather() output is deterministic.
class NodeGrid {
public:
    NodeGrid() = default;
    explicit NodeGrid(const std::vector<Vec3>& points);

    /// Indices of all points with ||p - center|| <= radius, ascending.
    void gather(const Vec3& center, double radius, std::vector<std::uint32_t>& out) const;

private:
    [[nodiscard]] std::size_t bucket_of(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * ny_ + iy) * nz_ + iz;
    }

    const std::vector<Vec3>* points_ = nullptr;
    Aabb box_;
    double cell_ = 1.0;
    std::size_t nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<std::vector<std::uint32_t>> buckets_;
};

} // namespace hedac
