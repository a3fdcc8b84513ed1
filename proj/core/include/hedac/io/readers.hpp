#pragma once

#include "hedac/geometry/surface_mesh.hpp"

#include <string>

namespace hedac {

SurfaceMesh read_stl_ascii(const std::string& path);
SurfaceMesh read_obj(const std::string& path);

} // namespace hedac
