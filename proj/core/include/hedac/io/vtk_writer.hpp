#pragma once

#include "hedac/fields/scalar_field.hpp"
#include "hedac/geometry/surface_mesh.hpp"
#include "hedac/geometry/tet_mesh.hpp"
#include "hedac/inspection/observation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hedac {

/// Legacy ASCII VTK unstructured grid with named point-data scalar arrays.
void write_vtk_tet_mesh(const std::string& path, const TetMesh& mesh,
                        const std::vector<std::pair<std::string, const ScalarField*>>& fields);

/// Surface triangles with per-node observation counts.
void write_vtk_surface_counts(const std::string& path, const SurfaceMesh& surface,
                              const ObservationLedger& ledger);

} // namespace hedac
