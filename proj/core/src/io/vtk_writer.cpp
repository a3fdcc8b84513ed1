#include "hedac/io/vtk_writer.hpp"

#include "hedac/error.hpp"

#include <cinttypes>
#include <cstdio>
#include <memory>

namespace hedac {
namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_or_throw(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "w"));
    if (!f) throw Error("cannot write " + path);
    return f;
}

void write_header(std::FILE* f, const char* title) {
    std::fprintf(f, "# vtk DataFile Version 3.0\n%s\nASCII\nDATASET UNSTRUCTURED_GRID\n", title);
}

void write_points(std::FILE* f, const std::vector<Vec3>& nodes) {
    std::fprintf(f, "POINTS %zu double\n", nodes.size());
    for (const Vec3& p : nodes) std::fprintf(f, "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
}

} // namespace

void write_vtk_tet_mesh(const std::string& path, const TetMesh& mesh,
                        const std::vector<std::pair<std::string, const ScalarField*>>& fields) {
    FilePtr f = open_or_throw(path);
    write_header(f.get(), "hedac domain fields");
    write_points(f.get(), mesh.nodes);

    std::fprintf(f.get(), "CELLS %zu %zu\n", mesh.cells.size(), mesh.cells.size() * 5);
    for (const Tet& t : mesh.cells)
        std::fprintf(f.get(), "4 %d %d %d %d\n", t[0], t[1], t[2], t[3]);
    std::fprintf(f.get(), "CELL_TYPES %zu\n", mesh.cells.size());
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) std::fprintf(f.get(), "10\n");

    if (!fields.empty()) {
        std::fprintf(f.get(), "POINT_DATA %zu\n", mesh.node_count());
        for (const auto& [name, field] : fields) {
            std::fprintf(f.get(), "SCALARS %s double 1\nLOOKUP_TABLE default\n", name.c_str());
            for (double v : field->values) std::fprintf(f.get(), "%.17g\n", v);
        }
    }
}

void write_vtk_surface_counts(const std::string& path, const SurfaceMesh& surface,
                              const ObservationLedger& ledger) {
    FilePtr f = open_or_throw(path);
    write_header(f.get(), "hedac surface observations");
    write_points(f.get(), surface.nodes);

    std::fprintf(f.get(), "CELLS %zu %zu\n", surface.faces.size(), surface.faces.size() * 4);
    for (const Tri& t : surface.faces) std::fprintf(f.get(), "3 %d %d %d\n", t[0], t[1], t[2]);
    std::fprintf(f.get(), "CELL_TYPES %zu\n", surface.faces.size());
    for (std::size_t c = 0; c < surface.faces.size(); ++c) std::fprintf(f.get(), "5\n");

    std::fprintf(f.get(), "POINT_DATA %zu\nSCALARS observation_count int 1\nLOOKUP_TABLE default\n",
                 surface.node_count());
    for (std::uint32_t c : ledger.counts()) std::fprintf(f.get(), "%" PRIu32 "\n", c);
}

} // namespace hedac
