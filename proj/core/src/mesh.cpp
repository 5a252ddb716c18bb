#include "meshmorph/mesh.hpp"

#include <algorithm>
#include <limits>

#include "meshmorph/adjacency.hpp"

namespace meshmorph {

Vec3 face_cross(const TriMesh& mesh, int f) {
  const Triangle& t = mesh.faces[static_cast<size_t>(f)];
  const Point3& a = mesh.vertices[static_cast<size_t>(t.a)];
  const Point3& b = mesh.vertices[static_cast<size_t>(t.b)];
  const Point3& c = mesh.vertices[static_cast<size_t>(t.c)];
  return cross(b - a, c - a);
}

double face_area(const TriMesh& mesh, int f) {
  return 0.5 * norm(face_cross(mesh, f));
}

Vec3 face_normal(const TriMesh& mesh, int f) {
  const Triangle& t = mesh.faces[static_cast<size_t>(f)];
  const Point3& a = mesh.vertices[static_cast<size_t>(t.a)];
  const Point3& b = mesh.vertices[static_cast<size_t>(t.b)];
  const Point3& c = mesh.vertices[static_cast<size_t>(t.c)];
  Vec3 n = cross(b - a, c - a);
  double len = norm(n);
  // Local degeneracy check against the face's own edge scale; the global
  // bbox-relative area check happens once in validate_mesh.
  double scale = norm(b - a) + norm(c - a);
  if (len <= 1e-14 * scale * scale) {
    throw DegenerateFaceError("face " + std::to_string(f) +
                              " has (near-)zero area");
  }
  return {n.x / len, n.y / len, n.z / len};
}

double bbox_diagonal(const TriMesh& mesh) {
  if (mesh.vertices.empty()) return 0.0;
  Point3 lo = mesh.vertices[0];
  Point3 hi = mesh.vertices[0];
  for (const Point3& p : mesh.vertices) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    lo.z = std::min(lo.z, p.z);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
    hi.z = std::max(hi.z, p.z);
  }
  return norm(hi - lo);
}

void validate_mesh(const TriMesh& mesh) {
  const int nv = static_cast<int>(mesh.vertices.size());
  for (const Point3& p : mesh.vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw MeshError("non-finite vertex coordinate");
    }
  }
  for (size_t i = 0; i < mesh.faces.size(); ++i) {
    const Triangle& t = mesh.faces[i];
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.a >= nv || t.b >= nv || t.c >= nv) {
      throw IndexError("face " + std::to_string(i) +
                       " references an out-of-range vertex");
    }
    if (t.a == t.b || t.b == t.c || t.a == t.c) {
      throw DegenerateFaceError("face " + std::to_string(i) +
                                " has repeated vertex indices");
    }
  }
  const double diag = bbox_diagonal(mesh);
  const double area_eps = 1e-14 * diag * diag;
  for (size_t i = 0; i < mesh.faces.size(); ++i) {
    if (face_area(mesh, static_cast<int>(i)) < area_eps) {
      throw DegenerateFaceError("face " + std::to_string(i) +
                                " has (near-)zero area");
    }
  }
  // Manifold and orientation checks live in build_adjacency.
  build_adjacency(mesh);
}

}  // namespace meshmorph
