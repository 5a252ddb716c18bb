#include "meshmorph/metrics.hpp"

#include <cmath>

#include "meshmorph/adjacency.hpp"

namespace meshmorph {

double surface_area(const TriMesh& mesh) {
  double area = 0.0;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    area += face_area(mesh, static_cast<int>(f));
  }
  return area;
}

double signed_volume(const TriMesh& mesh) {
  double vol6 = 0.0;
  for (const Triangle& t : mesh.faces) {
    const Point3& a = mesh.vertices[static_cast<size_t>(t.a)];
    const Point3& b = mesh.vertices[static_cast<size_t>(t.b)];
    const Point3& c = mesh.vertices[static_cast<size_t>(t.c)];
    vol6 += dot(a, cross(b, c));
  }
  return vol6 / 6.0;
}

double sphericity(double area, double volume) {
  if (!(volume > 0.0)) {
    throw OrientationError("non-positive signed volume " +
                           std::to_string(volume) +
                           "; mesh is not outward-oriented");
  }
  const double pi = 3.14159265358979323846;
  return std::cbrt(36.0 * pi * volume * volume / (area * area * area));
}

RadiusStats radius_stats(const TriMesh& mesh) {
  const size_t nv = mesh.vertices.size();
  Vec3 centroid{};
  for (const Point3& p : mesh.vertices) centroid += p;
  centroid = centroid * (1.0 / static_cast<double>(nv));

  std::vector<double> radii(nv);
  double mean = 0.0;
  for (size_t i = 0; i < nv; ++i) {
    radii[i] = norm(mesh.vertices[i] - centroid);
    mean += radii[i];
  }
  mean /= static_cast<double>(nv);
  // Two-pass variance; the shifted form cancels catastrophically here.
  double var = 0.0;
  for (double r : radii) var += (r - mean) * (r - mean);
  var /= static_cast<double>(nv);
  double sd = std::sqrt(var);
  return {centroid, mean, mean > 0.0 ? sd / mean : 0.0};
}

CurvatureStats curvature_stats(const CurvatureField& field) {
  const size_t nv = field.vertex_curvature.size();
  double mean = 0.0;
  for (double k : field.vertex_curvature) mean += k;
  mean /= static_cast<double>(nv);
  double var = 0.0;
  for (double k : field.vertex_curvature) var += (k - mean) * (k - mean);
  var /= static_cast<double>(nv);
  return {field.k_min, field.k_max, mean, std::sqrt(var)};
}

MetricsRecord collect_metrics(const TriMesh& mesh, long iteration) {
  MetricsRecord rec;
  rec.iteration = iteration;
  rec.area = surface_area(mesh);
  rec.volume = signed_volume(mesh);
  rec.sphericity = sphericity(rec.area, rec.volume);
  RadiusStats rs = radius_stats(mesh);
  rec.centroid = rs.centroid;
  rec.radius_mean = rs.radius_mean;
  rec.radius_cv = rs.radius_cv;
  CurvatureStats cs = curvature_stats(compute_field(mesh, build_adjacency(mesh)));
  rec.k_min = cs.k_min;
  rec.k_max = cs.k_max;
  rec.k_mean = cs.k_mean;
  rec.k_std = cs.k_std;
  return rec;
}

}  // namespace meshmorph
