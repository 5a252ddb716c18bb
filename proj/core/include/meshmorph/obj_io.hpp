// obj_io.hpp -- Wavefront OBJ subset reader/writer.
//
// Supported records: '#' comments, 'v x y z', 'f i j k [l...]'. Indices are
// 1-based; slash-suffixed indices (i/t/n) are accepted and the suffix ignored.
// Polygon faces are fan-triangulated from their first vertex. Vertices are
// written with 17 significant digits so a load/save round trip is bit-exact.

#pragma once

#include <iosfwd>
#include <string>

#include "meshmorph/mesh.hpp"

namespace meshmorph {

TriMesh load_obj(const std::string& path);
TriMesh load_obj(std::istream& in, const std::string& name = "<stream>");

void save_obj(const TriMesh& mesh, const std::string& path);
void save_obj(const TriMesh& mesh, std::ostream& out);

}  // namespace meshmorph
