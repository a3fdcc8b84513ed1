#include "hedac/error.hpp"
#include "hedac/io/readers.hpp"

#include <fstream>
#include <sstream>

namespace hedac {

SurfaceMesh read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);

    SurfaceMesh mesh;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "v") {
            Vec3 p;
            if (!(ls >> p.x() >> p.y() >> p.z()))
                throw ParseError(path, lineno, "vertex needs three coordinates");
            mesh.nodes.push_back(p);
        } else if (tok == "f") {
            Tri tri;
            int k = 0;
            std::string ref;
            while (ls >> ref) {
                if (k >= 3)
                    throw ParseError(path, lineno, "face with more than 3 vertices (triangles only)");
                // "i", "i/t", "i/t/n", "i//n" -- only the vertex index matters.
                long v = 0;
                try {
                    v = std::stol(ref.substr(0, ref.find('/')));
                } catch (const std::exception&) {
                    throw ParseError(path, lineno, "bad face reference '" + ref + "'");
                }
                if (v < 0) v = static_cast<long>(mesh.nodes.size()) + v + 1;
                if (v < 1 || v > static_cast<long>(mesh.nodes.size()))
                    throw ParseError(path, lineno, "face references unknown vertex " + ref);
                tri[k++] = static_cast<Index>(v - 1);
            }
            if (k != 3) throw ParseError(path, lineno, "face needs 3 vertices");
            mesh.faces.push_back(tri);
        }
        // vn/vt/o/g/s/usemtl/mtllib are irrelevant here.
    }
    if (mesh.faces.empty()) throw ParseError(path, lineno, "no faces found");
    return mesh;
}

} // namespace hedac
