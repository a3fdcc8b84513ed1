#include "hedac/geometry/tet_mesh.hpp"

#include "hedac/error.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace hedac {

TetMesh load_tet_mesh_msh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);

    TetMesh mesh;
    std::map<long, Index> node_ids;
    std::string line;
    long lineno = 0;

    auto next_line = [&]() -> std::string& {
        if (!std::getline(in, line)) throw ParseError(path, lineno, "unexpected end of file");
        ++lineno;
        return line;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind("$MeshFormat", 0) == 0) {
            std::istringstream ls(next_line());
            double version = 0;
            int file_type = 0;
            ls >> version >> file_type;
            if (version < 2.0 || version >= 3.0 || file_type != 0)
                throw ParseError(path, lineno, "expected MSH v2 ASCII");
            next_line(); // $EndMeshFormat
        } else if (line.rfind("$Nodes", 0) == 0) {
            std::size_t n = std::stoul(next_line());
            mesh.nodes.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::istringstream ls(next_line());
                long id;
                Vec3 p;
                if (!(ls >> id >> p.x() >> p.y() >> p.z()))
                    throw ParseError(path, lineno, "bad node line");
                node_ids[id] = static_cast<Index>(mesh.nodes.size());
                mesh.nodes.push_back(p);
            }
            next_line(); // $EndNodes
        } else if (line.rfind("$Elements", 0) == 0) {
            std::size_t n = std::stoul(next_line());
            for (std::size_t i = 0; i < n; ++i) {
                std::istringstream ls(next_line());
                long id;
                int type, ntags;
                if (!(ls >> id >> type >> ntags)) throw ParseError(path, lineno, "bad element line");
                long tag;
                for (int k = 0; k < ntags; ++k) ls >> tag;
                if (type == 4) { // 4-node tetrahedron
                    std::array<long, 4> ids{};
                    if (!(ls >> ids[0] >> ids[1] >> ids[2] >> ids[3]))
                        throw ParseError(path, lineno, "bad tetrahedron line");
                    Tet t;
                    for (int k = 0; k < 4; ++k) {
                        auto it = node_ids.find(ids[k]);
                        if (it == node_ids.end())
                            throw ParseError(path, lineno, "unknown node id " + std::to_string(ids[k]));
                        t[k] = it->second;
                    }
                    mesh.cells.push_back(t);
                }
                // Other element types (points, lines, triangles) are skipped;
                // the boundary is derived from cell adjacency below.
            }
            next_line(); // $EndElements
        }
    }
    if (mesh.cells.empty()) throw ParseError(path, lineno, "no tetrahedra found");

    // Fix orientation to positive volume.
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        if (mesh.cell_volume(c) < 0.0) std::swap(mesh.cells[c][2], mesh.cells[c][3]);
    }
    mesh.rebuild_boundary();
    mesh.validate();
    return mesh;
}

} // namespace hedac
