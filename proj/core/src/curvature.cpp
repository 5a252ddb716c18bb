#include "meshmorph/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace meshmorph {

double dihedral_angle(const TriMesh& mesh, const EdgeAdjacency& adj, int e) {
  const Edge& ed = adj.edges[static_cast<size_t>(e)];
  Vec3 n1 = face_normal(mesh, ed.f1);
  Vec3 n2 = face_normal(mesh, ed.f2);
  // Edge direction as traversed by f1, i.e. u -> v.
  Vec3 ev = mesh.vertices[static_cast<size_t>(ed.v)] -
            mesh.vertices[static_cast<size_t>(ed.u)];
  return std::atan2(dot(cross(n1, n2), ev) / norm(ev), dot(n1, n2));
}

double vertex_curvature(const TriMesh& mesh, const EdgeAdjacency& adj, int p) {
  const auto& incident = adj.vertex_edges[static_cast<size_t>(p)];
  if (incident.size() < 3) {
    throw TopologyError("vertex " + std::to_string(p) + " has only " +
                        std::to_string(incident.size()) + " incident edges");
  }
  std::vector<double> ks;
  ks.reserve(incident.size());
  for (int e : incident) {
    double l = norm(mesh.vertices[static_cast<size_t>(adj.edges[e].v)] -
                    mesh.vertices[static_cast<size_t>(adj.edges[e].u)]);
    ks.push_back(edge_curvature(l, dihedral_angle(mesh, adj, e)));
  }
  // Sorted accumulation makes the mean independent of edge enumeration order.
  std::sort(ks.begin(), ks.end());
  double sum = 0.0;
  for (double k : ks) sum += k;
  return sum / static_cast<double>(ks.size());
}

namespace {

Vec3 normal_from_contributions(std::vector<Vec3>& normals, int p) {
  std::sort(normals.begin(), normals.end(), lex_less);
  Vec3 sum{};
  for (const Vec3& n : normals) sum += n;
  double len = norm(sum);
  if (len < 1e-12) {
    throw DegenerateNormalError("face normals around vertex " +
                                std::to_string(p) + " cancel (norm " +
                                std::to_string(len) + ")");
  }
  return {sum.x / len, sum.y / len, sum.z / len};
}

}  // namespace

Vec3 vertex_normal(const TriMesh& mesh, int p) {
  std::vector<Vec3> normals;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const Triangle& t = mesh.faces[f];
    if (t.a == p || t.b == p || t.c == p) {
      normals.push_back(face_normal(mesh, static_cast<int>(f)));
    }
  }
  if (normals.empty()) {
    throw TopologyError("vertex " + std::to_string(p) + " has no incident face");
  }
  return normal_from_contributions(normals, p);
}

CurvatureField compute_field(const TriMesh& mesh, const EdgeAdjacency& adj) {
  const size_t nv = mesh.vertices.size();
  const size_t ne = adj.edges.size();
  CurvatureField field;
  field.edge_length.resize(ne);
  field.edge_angle.resize(ne);
  field.edge_curvature.resize(ne);

  std::vector<Vec3> face_n(mesh.faces.size());
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    face_n[f] = face_normal(mesh, static_cast<int>(f));
  }

  for (size_t e = 0; e < ne; ++e) {
    const Edge& ed = adj.edges[e];
    Vec3 ev = mesh.vertices[static_cast<size_t>(ed.v)] -
              mesh.vertices[static_cast<size_t>(ed.u)];
    double l = norm(ev);
    const Vec3& n1 = face_n[static_cast<size_t>(ed.f1)];
    const Vec3& n2 = face_n[static_cast<size_t>(ed.f2)];
    double theta =
        std::atan2(dot(cross(n1, n2), ev) / l, dot(n1, n2));
    field.edge_length[e] = l;
    field.edge_angle[e] = theta;
    field.edge_curvature[e] = edge_curvature(l, theta);
  }

  field.vertex_normal.resize(nv);
  {
    std::vector<std::vector<Vec3>> contrib(nv);
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
      const Triangle& t = mesh.faces[f];
      contrib[static_cast<size_t>(t.a)].push_back(face_n[f]);
      contrib[static_cast<size_t>(t.b)].push_back(face_n[f]);
      contrib[static_cast<size_t>(t.c)].push_back(face_n[f]);
    }
    for (size_t p = 0; p < nv; ++p) {
      if (contrib[p].empty()) {
        throw TopologyError("vertex " + std::to_string(p) +
                            " has no incident face");
      }
      field.vertex_normal[p] =
          normal_from_contributions(contrib[p], static_cast<int>(p));
    }
  }

  field.vertex_curvature.resize(nv);
  for (size_t p = 0; p < nv; ++p) {
    const auto& incident = adj.vertex_edges[p];
    if (incident.size() < 3) {
      throw TopologyError("vertex " + std::to_string(p) + " has only " +
                          std::to_string(incident.size()) + " incident edges");
    }
    std::vector<double> ks;
    ks.reserve(incident.size());
    for (int e : incident) ks.push_back(field.edge_curvature[e]);
    std::sort(ks.begin(), ks.end());
    double sum = 0.0;
    for (double k : ks) sum += k;
    field.vertex_curvature[p] = sum / static_cast<double>(ks.size());
  }

  field.k_min = *std::min_element(field.vertex_curvature.begin(),
                                  field.vertex_curvature.end());
  field.k_max = *std::max_element(field.vertex_curvature.begin(),
                                  field.vertex_curvature.end());
  return field;
}

bool uniform_field(const CurvatureField& field) {
  return field.k_max - field.k_min <
         1e-12 * std::max(std::abs(field.k_max), 1.0);
}

double normalized_weight(const CurvatureField& field, int p) {
  if (uniform_field(field)) return 0.5;
  return (field.vertex_curvature[static_cast<size_t>(p)] - field.k_min) /
         (field.k_max - field.k_min);
}

}  // namespace meshmorph
