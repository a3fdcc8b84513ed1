#include "hedac/error.hpp"
#include "hedac/io/readers.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace hedac {
namespace {

// Exact-coordinate weld key. STL repeats vertices per facet; identical
// coordinates collapse to one node.
struct VertexKey {
    std::uint64_t x, y, z;
    bool operator==(const VertexKey&) const = default;
};

struct VertexKeyHash {
    std::size_t operator()(const VertexKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t v : {k.x, k.y, k.z}) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

VertexKey key_of(const Vec3& p) {
    VertexKey k{};
    std::memcpy(&k.x, &p.x(), 8);
    std::memcpy(&k.y, &p.y(), 8);
    std::memcpy(&k.z, &p.z(), 8);
    return k;
}

} // namespace

SurfaceMesh read_stl_ascii(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);

    SurfaceMesh mesh;
    std::unordered_map<VertexKey, Index, VertexKeyHash> weld;
    std::vector<Index> facet;

    auto weld_vertex = [&](const Vec3& p) {
        auto [it, inserted] = weld.try_emplace(key_of(p), static_cast<Index>(mesh.nodes.size()));
        if (inserted) mesh.nodes.push_back(p);
        return it->second;
    };

    std::string line;
    long lineno = 0;
    bool in_solid = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "solid") {
            in_solid = true;
        } else if (tok == "facet" || tok == "outer" || tok == "endfacet" || tok == "endsolid") {
            if (!in_solid) throw ParseError(path, lineno, "'" + tok + "' outside of solid");
        } else if (tok == "vertex") {
            Vec3 p;
            if (!(ls >> p.x() >> p.y() >> p.z()))
                throw ParseError(path, lineno, "vertex needs three coordinates");
            facet.push_back(weld_vertex(p));
        } else if (tok == "endloop") {
            if (facet.size() != 3)
                throw ParseError(path, lineno,
                                 "facet with " + std::to_string(facet.size()) +
                                     " vertices (triangles only)");
            mesh.faces.push_back({facet[0], facet[1], facet[2]});
            facet.clear();
        } else {
            throw ParseError(path, lineno, "unexpected token '" + tok + "'");
        }
    }
    if (!in_solid) throw ParseError(path, lineno, "no 'solid' header (binary STL unsupported)");
    if (mesh.faces.empty()) throw ParseError(path, lineno, "no facets found");
    return mesh;
}

} // namespace hedac
