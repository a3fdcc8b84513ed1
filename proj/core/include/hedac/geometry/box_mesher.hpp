#pragma once

#include "hedac/geometry/surface_mesh.hpp"
#include "hedac/geometry/tet_mesh.hpp"
#include "hedac/types.hpp"

#include <Eigen/Core>

namespace hedac {

/// Structured box mesh: resolution cells per axis, each hexahedron split
/// into 6 tetrahedra (Freudenthal pattern, globally conforming). When
/// exclude is given, cells whose centroid lies inside the structure
/// (odd ray-crossing parity) are dropped, orphan nodes are compacted, only
/// the largest connected component is kept, and newly exposed faces become
/// boundary faces. Throws ValidationError if nothing remains.
TetMesh build_box_tet_mesh(const Aabb& extent, const Eigen::Vector3i& resolution,
                           const SurfaceMesh* exclude = nullptr);

} // namespace hedac
