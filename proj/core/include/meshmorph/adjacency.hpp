// adjacency.hpp -- undirected edge table for a closed oriented triangle mesh.

#pragma once

#include <vector>

#include "meshmorph/mesh.hpp"

namespace meshmorph {

// One undirected edge. Endpoints satisfy u < v; f1 is the face that traverses
// the edge as u->v, f2 the face that traverses it v->u.
struct Edge {
  int u{}, v{};
  int f1{-1}, f2{-1};
};

struct EdgeAdjacency {
  std::vector<Edge> edges;  // sorted by (u, v)
  // Incident edge indices per vertex, each list ascending.
  std::vector<std::vector<int>> vertex_edges;
};

// Builds the edge table. Throws ManifoldError if any edge has != 2 incident
// faces and OrientationError if two faces traverse a shared edge in the same
// direction. Output is independent of face input order up to the (u, v) sort.
EdgeAdjacency build_adjacency(const TriMesh& mesh);

}  // namespace meshmorph
