#include "hedac/harness/assess.hpp"

#include "hedac/error.hpp"
#include "hedac/geometry/bvh.hpp"
#include "hedac/geometry/surface_mesh.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace hedac {
namespace {

struct Row {
    double t;
    Vec3 position;
    Vec3 camera;
};

std::vector<Row> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open trajectory file " + path);
    std::vector<Row> rows;
    std::string line;
    long lineno = 0;
    // header: agent_id,t,x,y,z,ux,uy,uz,zx,zy,zz,d_b,d_min_neighbor
    if (!std::getline(in, line)) throw ParseError(path, 1, "empty trajectory file");
    ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<double> vals;
        while (std::getline(ls, field, ',')) {
            try {
                vals.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw ParseError(path, lineno, "bad numeric field '" + field + "'");
            }
        }
        if (vals.size() != 13)
            throw ParseError(path, lineno,
                             "expected 13 columns, got " + std::to_string(vals.size()));
        Row r;
        r.t = vals[1];
        r.position = Vec3(vals[2], vals[3], vals[4]);
        r.camera = Vec3(vals[8], vals[9], vals[10]);
        rows.push_back(r);
    }
    return rows;
}

} // namespace

AssessReport assess_trajectory(const Scenario& scenario, const std::string& trajectory_csv) {
    if (scenario.structure_mesh_file.empty())
        throw ValidationError("assess requires a [structure] mesh in the scenario");
    if (!scenario.camera) throw ValidationError("assess requires a [camera] section");

    const SurfaceMesh surface =
        load_surface_mesh(scenario.resolve_path(scenario.structure_mesh_file));
    const Bvh bvh = Bvh::build(surface.nodes, surface.faces);
    const CameraModel& camera = *scenario.camera;

    AssessReport report;
    report.ledger = ObservationLedger(surface.node_count());

    for (const Row& row : read_rows(trajectory_csv)) {
        if (row.t <= 0.0) continue; // recordings start after the first step
        const long step = std::lround(row.t / scenario.dt);
        if (step % camera.trigger_interval != 0) continue;
        record_view(row.position, row.camera, camera, surface, bvh, report.ledger,
                    scenario.threads);
        ++report.recordings;
    }
    report.eta_a = surface_coverage(report.ledger);
    report.eta_a_area_weighted = surface_coverage_area_weighted(report.ledger, surface);
    return report;
}

} // namespace hedac
