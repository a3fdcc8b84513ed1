#include "hedac/geometry/tet_mesh.hpp"

#include "hedac/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace hedac {
namespace {

// Outward-oriented faces of a positively oriented tet (v0,v1,v2,v3).
constexpr int kTetFaces[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

double signed_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return (b - a).cross(c - a).dot(d - a) / 6.0;
}

struct FaceEntry {
    std::array<Index, 3> key; // sorted node triple
    std::uint32_t cell;
    Tri oriented;
    bool operator<(const FaceEntry& o) const { return key < o.key; }
};

std::vector<FaceEntry> all_faces(const TetMesh& mesh) {
    std::vector<FaceEntry> entries;
    entries.reserve(mesh.cells.size() * 4);
    for (std::uint32_t c = 0; c < mesh.cells.size(); ++c) {
        const Tet& t = mesh.cells[c];
        for (const auto& f : kTetFaces) {
            const Tri oriented{t[f[0]], t[f[1]], t[f[2]]};
            std::array<Index, 3> key{oriented[0], oriented[1], oriented[2]};
            std::sort(key.begin(), key.end());
            entries.push_back({key, c, oriented});
        }
    }
    std::sort(entries.begin(), entries.end());
    return entries;
}

} // namespace

double TetMesh::cell_volume(std::size_t c) const {
    const Tet& t = cells[c];
    return signed_volume(nodes[t[0]], nodes[t[1]], nodes[t[2]], nodes[t[3]]);
}

Vec3 TetMesh::cell_centroid(std::size_t c) const {
    const Tet& t = cells[c];
    return 0.25 * (nodes[t[0]] + nodes[t[1]] + nodes[t[2]] + nodes[t[3]]);
}

double TetMesh::total_volume() const {
    double v = 0.0;
    for (std::size_t c = 0; c < cells.size(); ++c) v += cell_volume(c);
    return v;
}

Aabb TetMesh::bounds() const {
    Aabb box;
    for (const Vec3& p : nodes) box.expand(p);
    return box;
}

void TetMesh::rebuild_boundary() {
    boundary_faces.clear();
    const auto entries = all_faces(*this);
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].key == entries[i].key) ++j;
        if (j - i == 1) boundary_faces.push_back(entries[i].oriented);
        i = j;
    }
}

void TetMesh::validate() const {
    const auto n = static_cast<Index>(nodes.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Tet& t = cells[c];
        for (int k = 0; k < 4; ++k) {
            if (t[k] < 0 || t[k] >= n)
                throw ValidationError("cell " + std::to_string(c) + " references invalid node");
        }
        if (cell_volume(c) <= 0.0)
            throw ValidationError("cell " + std::to_string(c) + " has non-positive volume");
    }

    const auto entries = all_faces(*this);

    // Face multiplicity: 1 (boundary) or 2 (interior).
    std::size_t boundary = 0;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].key == entries[i].key) ++j;
        if (j - i > 2)
            throw ValidationError("face shared by " + std::to_string(j - i) +
                                  " cells (non-manifold)");
        boundary += (j - i == 1);
        i = j;
    }
    if (boundary != boundary_faces.size())
        throw ValidationError("boundary face list out of date: " + std::to_string(boundary) +
                              " derived vs " + std::to_string(boundary_faces.size()) + " stored");

    // Connectivity via union-find over shared faces.
    std::vector<std::uint32_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (entries[i].key == entries[i + 1].key)
            parent[find(entries[i].cell)] = find(entries[i + 1].cell);
    }
    for (std::uint32_t c = 1; c < cells.size(); ++c) {
        if (find(c) != find(0)) throw ValidationError("mesh is not connected");
    }
}

} // namespace hedac
