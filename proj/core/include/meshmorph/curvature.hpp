// curvature.hpp -- discrete mean curvature of a closed oriented triangle mesh.
//
// Per edge e: the oriented dihedral angle theta(e) in (-pi, pi] between the
// outward unit normals of the two incident faces, and the edge curvature
// K(e) = l(e) * theta(e). Sign convention: theta > 0 on convex edges
// (outward normals diverge), theta < 0 on reflex edges.
//
// Per vertex p: the unit normal n_p (normalized sum of incident unit face
// normals) and the vertex curvature K(p) (arithmetic mean of K(e) over
// incident edges).
//
// All per-vertex accumulations sort their contributions before summing, so
// the field is bitwise independent of vertex and face input order.

#pragma once

#include <vector>

#include "meshmorph/adjacency.hpp"
#include "meshmorph/mesh.hpp"

namespace meshmorph {

struct CurvatureField {
  std::vector<double> edge_length;     // l(e)
  std::vector<double> edge_angle;      // theta(e), radians in (-pi, pi]
  std::vector<double> edge_curvature;  // K(e) = l(e) * theta(e)
  std::vector<Vec3> vertex_normal;     // n_p, unit
  std::vector<double> vertex_curvature;  // K(p)
  double k_min{}, k_max{};               // extrema over vertex curvatures
};

// theta = atan2((n1 x n2) . e_hat, n1 . n2) with e_hat the unit edge
// direction as traversed by face f1.
double dihedral_angle(const TriMesh& mesh, const EdgeAdjacency& adj, int e);

inline double edge_curvature(double length, double theta) {
  return length * theta;
}

double vertex_curvature(const TriMesh& mesh, const EdgeAdjacency& adj, int p);

// Throws DegenerateNormalError when the summed face normals nearly cancel.
Vec3 vertex_normal(const TriMesh& mesh, int p);

CurvatureField compute_field(const TriMesh& mesh, const EdgeAdjacency& adj);

// (K(p) - K_min) / (K_max - K_min), clamped to the uniform-field convention:
// when K_max - K_min < 1e-12 * max(|K_max|, 1) every vertex gets weight 0.5.
double normalized_weight(const CurvatureField& field, int p);

bool uniform_field(const CurvatureField& field);

}  // namespace meshmorph
