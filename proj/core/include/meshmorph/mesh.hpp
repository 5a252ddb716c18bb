// mesh.hpp -- triangle mesh container, vector math, validation.
//
// Conventions:
// - Indices are 0-based in memory (OBJ uses 1-based; converted in obj_io).
// - Triangle winding (a,b,c) is counterclockwise seen from outside, so
//   (b-a)x(c-a) points outward.
// - Meshes are treated as immutable after construction; every operation in
//   this library returns a new mesh rather than mutating in place.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshmorph {

struct Vec3 {
  double x{}, y{}, z{};

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

using Point3 = Vec3;

// Vertex indices, CCW from outside.
struct Triangle {
  int a{}, b{}, c{};
};

struct TriMesh {
  std::vector<Point3> vertices;
  std::vector<Triangle> faces;
};

// Error hierarchy. Everything thrown by this library derives from MeshError.
class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public MeshError {
 public:
  using MeshError::MeshError;
};

class IndexError : public MeshError {
 public:
  using MeshError::MeshError;
};

// An edge with != 2 incident faces (open boundary or non-manifold fin).
class ManifoldError : public MeshError {
 public:
  using MeshError::MeshError;
};

// Two incident faces traverse a shared edge in the same direction.
class OrientationError : public MeshError {
 public:
  using MeshError::MeshError;
};

class DegenerateFaceError : public MeshError {
 public:
  using MeshError::MeshError;
};

class DegenerateNormalError : public MeshError {
 public:
  using MeshError::MeshError;
};

class TopologyError : public MeshError {
 public:
  using MeshError::MeshError;
};

class WriteError : public MeshError {
 public:
  using MeshError::MeshError;
};

class SpecError : public MeshError {
 public:
  using MeshError::MeshError;
};

// Unit outward normal of face f. Throws DegenerateFaceError on (near-)zero
// area.
Vec3 face_normal(const TriMesh& mesh, int f);

// Unnormalized (b-a)x(c-a); its norm is twice the face area.
Vec3 face_cross(const TriMesh& mesh, int f);

double face_area(const TriMesh& mesh, int f);

double bbox_diagonal(const TriMesh& mesh);

// Full structural validation: index ranges, distinct corners, degenerate
// faces (area < 1e-14 * bbox_diagonal^2), closed-manifold and orientation
// checks. Throws the matching error; returns normally iff the mesh is a
// closed, consistently oriented, non-degenerate triangulated surface.
void validate_mesh(const TriMesh& mesh);

}  // namespace meshmorph
