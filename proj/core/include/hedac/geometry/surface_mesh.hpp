#pragma once

#include "hedac/types.hpp"

#include <string>
#include <vector>

namespace hedac {

/// Triangulated structure boundary. Nodes are welded: faces share node
/// indices, which is what the per-node observation bookkeeping relies on.
struct SurfaceMesh {
    std::vector<Vec3> nodes;
    std::vector<Tri> faces;

    [[nodiscard]] std::size_t node_count() const { return nodes.size(); }
    [[nodiscard]] std::size_t face_count() const { return faces.size(); }

    [[nodiscard]] Vec3 face_normal(std::size_t f) const;
    [[nodiscard]] double face_area(std::size_t f) const;
    [[nodiscard]] Aabb bounds() const;

    /// Checks index validity, distinctness and positive triangle area.
    /// Throws ValidationError naming the offending face.
    void validate() const;
};

/// Loads an ASCII STL or OBJ file (triangles only), welds duplicate
/// vertices, and validates. Format chosen by file extension.
SurfaceMesh load_surface_mesh(const std::string& path);

} // namespace hedac
