#pragma once

#include "hedac/geometry/tet_mesh.hpp"
#include "hedac/types.hpp"

#include <vector>

namespace hedac {

/// One value per tet-mesh node (P1 nodal field).
struct ScalarField {
    const TetMesh* mesh = nullptr;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const TetMesh& m, double fill = 0.0)
        : mesh(&m), values(m.node_count(), fill) {}

    [[nodiscard]] std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Integral over the domain by per-tet linear quadrature (cell volume times
/// mean of the four nodal values) -- exact for P1 fields.
double integrate(const ScalarField& field);

/// Scales the field so its integral is 1. Throws ValidationError on a
/// zero-integral field.
ScalarField normalize(const ScalarField& field);

/// Indicator of an axis-aligned box, normalized. Throws ValidationError if
/// no node lies inside the box.
ScalarField build_target_density_box(const TetMesh& mesh, const Aabb& box);

/// exp(-(d_s - d_m)^2 / (2 d_sigma^2)) per node, normalized. d_s holds the
/// structure distance at every mesh node.
ScalarField build_target_density_inspection(const TetMesh& mesh, const ScalarField& d_s,
                                            double d_m, double d_sigma);

/// mu = mu0 * exp(-rho), node by node.
ScalarField remaining_density(const ScalarField& mu0, const ScalarField& rho);

/// eta_V = 1 - integral(mu). mu0 must have been normalized.
double spatial_coverage(const ScalarField& mu);

} // namespace hedac
