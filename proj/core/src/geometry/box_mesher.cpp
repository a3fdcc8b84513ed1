#include "hedac/geometry/box_mesher.hpp"

#include "hedac/error.hpp"
#include "hedac/geometry/bvh.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

namespace hedac {
namespace {

// Freudenthal subdivision: the six path tetrahedra of a hexahedron, all
// sharing the main diagonal c000-c111. Applied identically to every cell it
// yields a globally conforming triangulation. Corner order below is
// (dx, dy, dz) packed as dx*4 + dy*2 + dz.
constexpr int kHexTets[6][4] = {
    {0b000, 0b100, 0b110, 0b111}, {0b000, 0b100, 0b101, 0b111},
    {0b000, 0b010, 0b110, 0b111}, {0b000, 0b010, 0b011, 0b111},
    {0b000, 0b001, 0b101, 0b111}, {0b000, 0b001, 0b011, 0b111},
};

bool inside_by_parity(const Bvh& bvh, const Vec3& p) {
    // Three skew directions, majority vote; shields against rays grazing
    // triangle edges.
    static const std::array<Vec3, 3> dirs = {
        Vec3(0.5377671873, 0.8121183182, 0.2253337843).normalized(),
        Vec3(-0.3917879292, 0.5498915613, 0.7378719001).normalized(),
        Vec3(0.1472898193, -0.6403911277, 0.7538003373).normalized(),
    };
    int votes = 0;
    for (const Vec3& d : dirs) votes += (bvh.count_crossings(p, d) % 2 == 1);
    return votes >= 2;
}

void keep_largest_component(TetMesh& mesh) {
    struct FaceRef {
        std::array<Index, 3> key;
        std::uint32_t cell;
        bool operator<(const FaceRef& o) const { return key < o.key; }
    };
    constexpr int kTetFaces[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    std::vector<FaceRef> refs;
    refs.reserve(mesh.cells.size() * 4);
    for (std::uint32_t c = 0; c < mesh.cells.size(); ++c) {
        for (const auto& f : kTetFaces) {
            std::array<Index, 3> key{mesh.cells[c][f[0]], mesh.cells[c][f[1]],
                                     mesh.cells[c][f[2]]};
            std::sort(key.begin(), key.end());
            refs.push_back({key, c});
        }
    }
    std::sort(refs.begin(), refs.end());

    std::vector<std::uint32_t> parent(mesh.cells.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i + 1 < refs.size(); ++i) {
        if (refs[i].key == refs[i + 1].key)
            parent[find(refs[i].cell)] = find(refs[i + 1].cell);
    }

    std::vector<std::size_t> component_size(mesh.cells.size(), 0);
    for (std::uint32_t c = 0; c < mesh.cells.size(); ++c) component_size[find(c)]++;
    const std::uint32_t largest = static_cast<std::uint32_t>(
        std::max_element(component_size.begin(), component_size.end()) - component_size.begin());

    std::vector<Tet> kept;
    kept.reserve(component_size[largest]);
    for (std::uint32_t c = 0; c < mesh.cells.size(); ++c) {
        if (find(c) == largest) kept.push_back(mesh.cells[c]);
    }
    mesh.cells = std::move(kept);
}

void compact_nodes(TetMesh& mesh) {
    std::vector<Index> remap(mesh.nodes.size(), -1);
    std::vector<Vec3> nodes;
    for (Tet& t : mesh.cells) {
        for (Index& v : t) {
            if (remap[v] < 0) {
                remap[v] = static_cast<Index>(nodes.size());
                nodes.push_back(mesh.nodes[v]);
            }
            v = remap[v];
        }
    }
    mesh.nodes = std::move(nodes);
}

} // namespace

TetMesh build_box_tet_mesh(const Aabb& extent, const Eigen::Vector3i& resolution,
                           const SurfaceMesh* exclude) {
    for (int k = 0; k < 3; ++k) {
        if (resolution[k] < 2)
            throw ValidationError("box mesh resolution must be >= 2 per axis");
        if (extent.max[k] <= extent.min[k])
            throw ValidationError("box extent is empty along axis " + std::to_string(k));
    }

    const int nx = resolution[0], ny = resolution[1], nz = resolution[2];
    const Vec3 h = extent.extent().cwiseQuotient(Vec3(nx, ny, nz));

    TetMesh mesh;
    mesh.nodes.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1) * (nz + 1));
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j)
            for (int k = 0; k <= nz; ++k)
                mesh.nodes.emplace_back(extent.min + Vec3(i * h.x(), j * h.y(), k * h.z()));

    auto node_at = [&](int i, int j, int k) {
        return static_cast<Index>((static_cast<std::size_t>(i) * (ny + 1) + j) * (nz + 1) + k);
    };

    std::optional<Bvh> bvh;
    if (exclude) bvh = Bvh::build(exclude->nodes, exclude->faces);

    mesh.cells.reserve(static_cast<std::size_t>(nx) * ny * nz * 6);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            for (int k = 0; k < nz; ++k) {
                if (bvh) {
                    const Vec3 centroid =
                        extent.min + Vec3((i + 0.5) * h.x(), (j + 0.5) * h.y(), (k + 0.5) * h.z());
                    if (inside_by_parity(*bvh, centroid)) continue;
                }
                Index corner[8];
                for (int dx = 0; dx < 2; ++dx)
                    for (int dy = 0; dy < 2; ++dy)
                        for (int dz = 0; dz < 2; ++dz)
                            corner[dx * 4 + dy * 2 + dz] = node_at(i + dx, j + dy, k + dz);
                for (const auto& tet : kHexTets)
                    mesh.cells.push_back(
                        Tet{corner[tet[0]], corner[tet[1]], corner[tet[2]], corner[tet[3]]});
            }
        }
    }
    if (mesh.cells.empty()) throw ValidationError("structure exclusion removed every cell");

    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        if (mesh.cell_volume(c) < 0.0) std::swap(mesh.cells[c][2], mesh.cells[c][3]);
    }

    if (exclude) {
        keep_largest_component(mesh);
        compact_nodes(mesh);
    } else {
        mesh.pure_box = extent;
    }
    mesh.rebuild_boundary();
    return mesh;
}

} // namespace hedac
