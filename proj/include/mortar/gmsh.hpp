// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_GMSH_HPP
#define MORTAR_GMSH_HPP

#include <istream>
#include <string>

#include "mortar/mesh.hpp"

namespace mortar
{

//
// Reader for the ASCII Gmsh MSH 2.2 format restricted to 3-node triangles (type 2, skipped)
// and 4-node tetrahedra (type 4). The first element tag (physical group) becomes the region
// tag of a tet; elements without tags get region 0. Errors are reported as ParseError with
// the offending line number, or MeshError for invalid (non-conforming) meshes.
//
VolumeMesh load_gmsh(const std::string &path);
VolumeMesh read_gmsh(std::istream &in);

}  // namespace mortar

#endif  // MORTAR_GMSH_HPP
