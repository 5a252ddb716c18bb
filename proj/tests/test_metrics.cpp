#include <doctest.h>

#include <cmath>

#include "meshmorph/genmesh.hpp"
#include "meshmorph/metrics.hpp"
#include "test_support.hpp"

using namespace meshmorph;
using namespace testsupport;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("surface area of reference meshes") {
  CHECK(surface_area(unit_cube()) == doctest::Approx(6.0).epsilon(1e-12));
  double sphere = surface_area(make_icosphere(4, 1.0));
  CHECK(sphere < 4 * kPi);
  CHECK(sphere == doctest::Approx(4 * kPi).epsilon(0.01));

  TriMesh degenerate;
  degenerate.vertices = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  degenerate.faces = {{0, 1, 2}};
  CHECK(surface_area(degenerate) == 0.0);
}

TEST_CASE("signed volume: cube, reversed cube, translation invariance") {
  TriMesh cube = unit_cube();
  CHECK(signed_volume(cube) == doctest::Approx(1.0).epsilon(1e-12));

  TriMesh reversed = cube;
  for (Triangle& t : reversed.faces) std::swap(t.b, t.c);
  CHECK(signed_volume(reversed) == doctest::Approx(-1.0).epsilon(1e-12));

  TriMesh shifted = cube;
  for (Point3& p : shifted.vertices) p += Vec3{10.0, -3.0, 7.5};
  CHECK(std::abs(signed_volume(shifted) - 1.0) < 1e-9);
}

TEST_CASE("sphericity normalization") {
  CHECK(sphericity(4 * kPi, 4 * kPi / 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sphericity(6.0, 1.0) ==
        doctest::Approx(std::cbrt(kPi / 6.0)).epsilon(1e-12));
  CHECK_THROWS_AS(sphericity(6.0, -1.0), OrientationError);

  // A long thin cylinder is less spherical than the cube.
  double r = 0.5, h = 10.0;
  double a_cyl = 2 * kPi * r * h + 2 * kPi * r * r;
  double v_cyl = kPi * r * r * h;
  CHECK(sphericity(a_cyl, v_cyl) < sphericity(6.0, 1.0));
}

TEST_CASE("icosphere sphericity approaches 1 from below") {
  TriMesh sphere = make_icosphere(4, 1.0);
  double s = sphericity(surface_area(sphere), signed_volume(sphere));
  CHECK(s <= 1.0 + 1e-9);
  CHECK(s > 0.99);
}

TEST_CASE("radius_stats") {
  RadiusStats ico = radius_stats(regular_icosahedron());
  CHECK(ico.radius_cv < 1e-12);
  CHECK(ico.radius_mean == doctest::Approx(1.0).epsilon(1e-12));

  // Cube corners are equidistant from the centroid even though the cube is
  // far from spherical; the two metrics are independent.
  RadiusStats cube = radius_stats(unit_cube());
  CHECK(cube.radius_cv < 1e-12);
  CHECK(norm(cube.centroid) < 1e-12);

  TriMesh ellipsoid = make_icosphere(2, 1.0);
  for (Point3& p : ellipsoid.vertices) p.x *= 2.0;
  CHECK(radius_stats(ellipsoid).radius_cv > 0.1);
}

TEST_CASE("curvature_stats") {
  CurvatureField uniform = compute_field(regular_icosahedron(),
                                         build_adjacency(regular_icosahedron()));
  CurvatureStats s = curvature_stats(uniform);
  CHECK(s.k_std < 1e-12);
  CHECK(s.k_mean == doctest::Approx(s.k_min).epsilon(1e-9));

  TriMesh cube = unit_cube();
  CurvatureStats cs = curvature_stats(compute_field(cube, build_adjacency(cube)));
  OracleField oracle = brute_force_field(cube);
  double lo = oracle.vertex_curvature[0], hi = lo;
  for (double k : oracle.vertex_curvature) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  CHECK(cs.k_min == doctest::Approx(lo).epsilon(1e-12));
  CHECK(cs.k_max == doctest::Approx(hi).epsilon(1e-12));
  CHECK(cs.k_min < cs.k_max);
}

TEST_CASE("scale behavior of all metrics") {
  TriMesh base = random_mesh(9);
  const double s = 3.0;
  TriMesh scaled = base;
  for (Point3& p : scaled.vertices) p = p * s;

  CHECK(close(surface_area(scaled), s * s * surface_area(base), 1e-9));
  CHECK(close(signed_volume(scaled), s * s * s * signed_volume(base), 1e-9));

  MetricsRecord m0 = collect_metrics(base, 0);
  MetricsRecord m1 = collect_metrics(scaled, 0);
  CHECK(std::abs(m1.sphericity - m0.sphericity) < 1e-9);
  CHECK(std::abs(m1.radius_cv - m0.radius_cv) < 1e-9);
  CHECK(close(m1.k_min, s * m0.k_min, 1e-9));
  CHECK(close(m1.k_max, s * m0.k_max, 1e-9));
  CHECK(close(m1.k_mean, s * m0.k_mean, 1e-9));
  CHECK(close(m1.k_std, s * m0.k_std, 1e-9));
}

TEST_CASE("rigid invariance of metrics, equivariant centroid") {
  TriMesh base = random_mesh(10);
  auto rot = [](const Vec3& p) { return Vec3{p.y, p.z, p.x}; };
  const Vec3 shift{1.0, 2.0, -0.5};
  TriMesh moved = base;
  for (Point3& p : moved.vertices) p = rot(p) + shift;

  MetricsRecord m0 = collect_metrics(base, 0);
  MetricsRecord m1 = collect_metrics(moved, 0);
  CHECK(close(m1.area, m0.area, 1e-9));
  CHECK(close(m1.volume, m0.volume, 1e-9));
  CHECK(std::abs(m1.sphericity - m0.sphericity) < 1e-9);
  CHECK(std::abs(m1.radius_cv - m0.radius_cv) < 1e-9);
  CHECK(norm(m1.centroid - (rot(m0.centroid) + shift)) < 1e-9);
}

TEST_CASE("isoperimetric inequality holds on every generated shape") {
  for (unsigned seed = 0; seed < 9; ++seed) {
    TriMesh m = random_mesh(seed);
    double s = sphericity(surface_area(m), signed_volume(m));
    CHECK(s <= 1.0 + 1e-9);
    CHECK(s > 0.0);
  }
  TriMesh dumbbell = make_dumbbell(1, 0.2);
  CHECK(sphericity(surface_area(dumbbell), signed_volume(dumbbell)) < 0.9);
}
