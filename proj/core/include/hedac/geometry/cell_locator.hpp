#pragma once

#include "hedac/geometry/tet_mesh.hpp"
#include "hedac/types.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hedac {

struct PointLocation {
    std::size_t cell = 0;
    std::array<double, 4> barycentric{};
};

/// Uniform spatial hash over cells. Candidate cells per bucket are kept in
/// ascending index order so that points on shared faces resolve to the
/// lowest cell index.
class CellLocator {
public:
    explicit CellLocator(const TetMesh& mesh);

    /// Containing cell and barycentric coordinates (clamped to [0,1],
    /// summing to 1). nullopt when p is outside all cells.
    [[nodiscard]] std::optional<PointLocation> try_locate(const Vec3& p) const;

    /// As try_locate but throws OutsideDomainError on failure.
    [[nodiscard]] PointLocation locate(const Vec3& p) const;

    [[nodiscard]] bool inside(const Vec3& p) const { return try_locate(p).has_value(); }
    [[nodiscard]] const TetMesh& mesh() const { return *mesh_; }

private:
    [[nodiscard]] std::size_t bucket_of(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * ny_ + iy) * nz_ + iz;
    }

    const TetMesh* mesh_;
    Aabb box_;
    Vec3 inv_cell_ = Vec3::Zero();
    std::size_t nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<std::vector<std::uint32_t>> buckets_;
};

} // namespace hedac
