#pragma once

#include "hedac/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hedac {

/// Tetrahedral discretization of the flight domain. Cells are stored with
/// positive signed volume; boundary faces are oriented outward.
struct TetMesh {
    std::vector<Vec3> nodes;
    std::vector<Tet> cells;
    std::vector<Tri> boundary_faces;

    /// Set by the box mesher when no cells were excluded, enabling the
    /// analytic boundary-distance formula.
    std::optional<Aabb> pure_box;

    [[nodiscard]] std::size_t node_count() const { return nodes.size(); }
    [[nodiscard]] std::size_t cell_count() const { return cells.size(); }

    [[nodiscard]] double cell_volume(std::size_t c) const;
    [[nodiscard]] Vec3 cell_centroid(std::size_t c) const;
    [[nodiscard]] double total_volume() const;
    [[nodiscard]] Aabb bounds() const;

    /// Rebuilds boundary_faces as the outward-oriented faces that belong to
    /// exactly one cell.
    void rebuild_boundary();

    /// Orientation, boundary-multiplicity and connectivity invariants.
    void validate() const;
};

/// Gmsh MSH v2 ASCII import (nodes + 4-node tets). Boundary faces are
/// derived from cell adjacency, not read from the file.
TetMesh load_tet_mesh_msh(const std::string& path);

} // namespace hedac
