#include "meshmorph/adjacency.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace meshmorph {

namespace {

std::string edge_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

EdgeAdjacency build_adjacency(const TriMesh& mesh) {
  const int nv = static_cast<int>(mesh.vertices.size());

  struct Rec {
    int fwd = -1;  // face traversing u->v
    int bwd = -1;  // face traversing v->u
    int count = 0;
  };
  std::unordered_map<std::uint64_t, Rec> table;
  table.reserve(mesh.faces.size() * 2);

  for (size_t fi = 0; fi < mesh.faces.size(); ++fi) {
    const Triangle& t = mesh.faces[fi];
    const int idx[3] = {t.a, t.b, t.c};
    for (int k = 0; k < 3; ++k) {
      int s = idx[k];
      int d = idx[(k + 1) % 3];
      if (s < 0 || d < 0 || s >= nv || d >= nv) {
        throw IndexError("face " + std::to_string(fi) +
                         " references an out-of-range vertex");
      }
      int u = std::min(s, d);
      int v = std::max(s, d);
      Rec& r = table[(static_cast<std::uint64_t>(u) << 32) |
                     static_cast<std::uint64_t>(v)];
      r.count++;
      if (r.count > 2) {
        throw ManifoldError("edge " + edge_name(u, v) +
                            " has more than two incident faces");
      }
      bool forward = (s == u);
      int& slot = forward ? r.fwd : r.bwd;
      if (slot != -1) {
        throw OrientationError("edge " + edge_name(u, v) +
                               " is traversed in the same direction by faces " +
                               std::to_string(slot) + " and " +
                               std::to_string(fi));
      }
      slot = static_cast<int>(fi);
    }
  }

  EdgeAdjacency adj;
  adj.edges.reserve(table.size());
  for (const auto& [key, rec] : table) {
    int u = static_cast<int>(key >> 32);
    int v = static_cast<int>(key & 0xffffffffu);
    if (rec.count != 2) {
      throw ManifoldError("edge " + edge_name(u, v) +
                          " has only one incident face (mesh is not closed)");
    }
    adj.edges.push_back({u, v, rec.fwd, rec.bwd});
  }
  std::sort(adj.edges.begin(), adj.edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  adj.vertex_edges.assign(static_cast<size_t>(nv), {});
  for (size_t e = 0; e < adj.edges.size(); ++e) {
    adj.vertex_edges[static_cast<size_t>(adj.edges[e].u)].push_back(
        static_cast<int>(e));
    adj.vertex_edges[static_cast<size_t>(adj.edges[e].v)].push_back(
        static_cast<int>(e));
  }
  return adj;
}

}  // namespace meshmorph
