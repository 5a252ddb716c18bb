// metrics.hpp -- quantitative roundness measures for a closed triangle mesh.

#pragma once

#include "meshmorph/curvature.hpp"
#include "meshmorph/mesh.hpp"

namespace meshmorph {

struct RadiusStats {
  Point3 centroid;     // plain vertex average
  double radius_mean;  // mean vertex distance to centroid
  double radius_cv;    // std/mean of those distances; 0 iff equidistant
};

struct CurvatureStats {
  double k_min{}, k_max{}, k_mean{}, k_std{};  // population std (divide by N)
};

struct MetricsRecord {
  long iteration{};
  double area{};
  double volume{};      // signed; positive for outward orientation
  double sphericity{};  // (36 pi V^2 / A^3)^(1/3), 1 for a round sphere
  Point3 centroid;
  double radius_mean{}, radius_cv{};
  double k_min{}, k_max{}, k_mean{}, k_std{};
};

double surface_area(const TriMesh& mesh);

// Divergence-theorem volume: sum over faces of a.(b x c)/6.
double signed_volume(const TriMesh& mesh);

// Isoperimetric quotient (36 pi V^2 / A^3)^(1/3). Throws OrientationError on
// non-positive volume.
double sphericity(double area, double volume);

RadiusStats radius_stats(const TriMesh& mesh);

CurvatureStats curvature_stats(const CurvatureField& field);

MetricsRecord collect_metrics(const TriMesh& mesh, long iteration);

}  // namespace meshmorph
