#include "hedac/geometry/surface_mesh.hpp"

#include "hedac/error.hpp"
#include "hedac/io/readers.hpp"

#include <string>

namespace hedac {

Vec3 SurfaceMesh::face_normal(std::size_t f) const {
    const Tri& t = faces[f];
    const Vec3 e1 = nodes[t[1]] - nodes[t[0]];
    const Vec3 e2 = nodes[t[2]] - nodes[t[0]];
    return e1.cross(e2).normalized();
}

double SurfaceMesh::face_area(std::size_t f) const {
    const Tri& t = faces[f];
    const Vec3 e1 = nodes[t[1]] - nodes[t[0]];
    const Vec3 e2 = nodes[t[2]] - nodes[t[0]];
    return 0.5 * e1.cross(e2).norm();
}

Aabb SurfaceMesh::bounds() const {
    Aabb box;
    for (const Vec3& p : nodes) box.expand(p);
    return box;
}

void SurfaceMesh::validate() const {
    const auto n = static_cast<Index>(nodes.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const Tri& t = faces[f];
        for (int k = 0; k < 3; ++k) {
            if (t[k] < 0 || t[k] >= n)
                throw ValidationError("face " + std::to_string(f) + " references invalid node " +
                                      std::to_string(t[k]));
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw ValidationError("face " + std::to_string(f) + " repeats a node index");
        if (face_area(f) <= 0.0)
            throw ValidationError("degenerate face " + std::to_string(f) + " (zero area)");
    }
}

SurfaceMesh load_surface_mesh(const std::string& path) {
    SurfaceMesh mesh;
    if (path.ends_with(".stl") || path.ends_with(".STL")) {
        mesh = read_stl_ascii(path);
    } else if (path.ends_with(".obj") || path.ends_with(".OBJ")) {
        mesh = read_obj(path);
    } else {
        throw Error("unsupported surface mesh format: " + path + " (expected .stl or .obj)");
    }
    mesh.validate();
    return mesh;
}

} // namespace hedac
