#include "hedac/fields/scalar_field.hpp"

#include "hedac/error.hpp"

#include <cmath>

namespace hedac {

double integrate(const ScalarField& field) {
    const TetMesh& mesh = *field.mesh;
    double total = 0.0;
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        const Tet& t = mesh.cells[c];
        const double mean = 0.25 * (field[t[0]] + field[t[1]] + field[t[2]] + field[t[3]]);
        total += mesh.cell_volume(c) * mean;
    }
    return total;
}

ScalarField normalize(const ScalarField& field) {
    const double total = integrate(field);
    if (total <= 0.0) throw ValidationError("cannot normalize a field with zero integral");
    ScalarField out = field;
    const double inv = 1.0 / total;
    for (double& v : out.values) v *= inv;
    return out;
}

ScalarField build_target_density_box(const TetMesh& mesh, const Aabb& box) {
    ScalarField field(mesh);
    bool any = false;
    for (std::size_t i = 0; i < mesh.node_count(); ++i) {
        if (box.contains(mesh.nodes[i])) {
            field[i] = 1.0;
            any = true;
        }
    }
    if (!any) throw ValidationError("target box does not intersect the domain mesh");
    return normalize(field);
}

ScalarField build_target_density_inspection(const TetMesh& mesh, const ScalarField& d_s,
                                            double d_m, double d_sigma) {
    if (d_s.mesh != &mesh || d_s.size() != mesh.node_count())
        throw ValidationError("distance field does not match the domain mesh");
    if (d_m <= 0.0 || d_sigma <= 0.0)
        throw ValidationError("inspection distance and broadness must be > 0");
    ScalarField field(mesh);
    const double inv = 1.0 / (2.0 * d_sigma * d_sigma);
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double d = d_s[i] - d_m;
        field[i] = std::exp(-d * d * inv);
    }
    return normalize(field);
}

ScalarField remaining_density(const ScalarField& mu0, const ScalarField& rho) {
    if (mu0.mesh != rho.mesh || mu0.size() != rho.size())
        throw ValidationError("mu0 and rho live on different meshes");
    ScalarField mu(*mu0.mesh);
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = mu0[i] * std::exp(-rho[i]);
    return mu;
}

double spatial_coverage(const ScalarField& mu) {
    return 1.0 - integrate(mu);
}

} // namespace hedac
