#include "meshmorph/genmesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace meshmorph {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Surface of revolution around the z axis. The profile runs along the
// surface from bottom to top; radius 0 is allowed only at the two ends and
// produces a pole vertex there.
TriMesh lathe(const std::vector<double>& zs, const std::vector<double>& rs,
              int segments) {
  TriMesh mesh;
  const int m = static_cast<int>(zs.size());
  std::vector<std::vector<int>> rings(static_cast<size_t>(m));

  for (int i = 0; i < m; ++i) {
    if (rs[static_cast<size_t>(i)] == 0.0) {
      int pole = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back({0.0, 0.0, zs[static_cast<size_t>(i)]});
      rings[static_cast<size_t>(i)] = {pole};
    } else {
      std::vector<int> ring(static_cast<size_t>(segments));
      for (int j = 0; j < segments; ++j) {
        double phi = 2.0 * kPi * j / segments;
        ring[static_cast<size_t>(j)] = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back({rs[static_cast<size_t>(i)] * std::cos(phi),
                                 rs[static_cast<size_t>(i)] * std::sin(phi),
                                 zs[static_cast<size_t>(i)]});
      }
      rings[static_cast<size_t>(i)] = ring;
    }
  }

  for (int i = 0; i + 1 < m; ++i) {
    const auto& lo = rings[static_cast<size_t>(i)];
    const auto& hi = rings[static_cast<size_t>(i + 1)];
    for (int j = 0; j < segments; ++j) {
      int jn = (j + 1) % segments;
      if (lo.size() == 1) {
        // bottom pole fan, outward normal points down
        mesh.faces.push_back({lo[0], hi[static_cast<size_t>(jn)],
                              hi[static_cast<size_t>(j)]});
      } else if (hi.size() == 1) {
        mesh.faces.push_back({hi[0], lo[static_cast<size_t>(j)],
                              lo[static_cast<size_t>(jn)]});
      } else {
        int a = lo[static_cast<size_t>(j)], b = lo[static_cast<size_t>(jn)];
        int c = hi[static_cast<size_t>(jn)], d = hi[static_cast<size_t>(j)];
        mesh.faces.push_back({a, b, c});
        mesh.faces.push_back({a, c, d});
      }
    }
  }
  return mesh;
}

TriMesh icosahedron() {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  TriMesh mesh;
  mesh.vertices = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
  };
  mesh.faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  return mesh;
}

}  // namespace

TriMesh make_cube(int level) {
  const int n = 1 << level;
  TriMesh mesh;
  std::map<std::array<int, 3>, int> lattice;
  auto vertex = [&](std::array<int, 3> key) {
    auto it = lattice.find(key);
    if (it != lattice.end()) return it->second;
    int idx = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back({static_cast<double>(key[0]) / n - 0.5,
                             static_cast<double>(key[1]) / n - 0.5,
                             static_cast<double>(key[2]) / n - 0.5});
    lattice.emplace(key, idx);
    return idx;
  };

  struct FaceFrame {
    std::array<int, 3> origin, du, dv;  // du x dv points outward
  };
  const FaceFrame frames[6] = {
      {{n, 0, 0}, {0, 1, 0}, {0, 0, 1}},  // +x
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},  // -x
      {{0, n, 0}, {0, 0, 1}, {1, 0, 0}},  // +y
      {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}},  // -y
      {{0, 0, n}, {1, 0, 0}, {0, 1, 0}},  // +z
      {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}},  // -z
  };
  for (const FaceFrame& fr : frames) {
    auto at = [&](int u, int v) {
      return vertex({fr.origin[0] + u * fr.du[0] + v * fr.dv[0],
                     fr.origin[1] + u * fr.du[1] + v * fr.dv[1],
                     fr.origin[2] + u * fr.du[2] + v * fr.dv[2]});
    };
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        int p00 = at(u, v), p10 = at(u + 1, v);
        int p11 = at(u + 1, v + 1), p01 = at(u, v + 1);
        mesh.faces.push_back({p00, p10, p11});
        mesh.faces.push_back({p00, p11, p01});
      }
    }
  }
  return mesh;
}

TriMesh make_cylinder(int level, double aspect) {
  if (!(aspect > 0.0)) throw SpecError("cylinder aspect must be positive");
  const int segments = 8 << level;
  const double r = 0.5, h = aspect;
  const int cap_rings = std::max(1, segments / 8);
  const int slices = std::max(2, static_cast<int>(std::lround(h * segments / kPi)));

  std::vector<double> zs, rs;
  zs.push_back(-h / 2);
  rs.push_back(0.0);
  for (int i = 1; i <= cap_rings; ++i) {
    zs.push_back(-h / 2);
    rs.push_back(r * i / cap_rings);
  }
  for (int i = 1; i <= slices; ++i) {
    zs.push_back(-h / 2 + h * i / slices);
    rs.push_back(r);
  }
  for (int i = 1; i < cap_rings; ++i) {
    zs.push_back(h / 2);
    rs.push_back(r * (cap_rings - i) / cap_rings);
  }
  zs.push_back(h / 2);
  rs.push_back(0.0);
  return lathe(zs, rs, segments);
}

TriMesh make_icosphere(int level, double radius) {
  TriMesh mesh = icosahedron();
  for (Point3& p : mesh.vertices) p = normalized(p) * radius;

  for (int l = 0; l < level; ++l) {
    TriMesh next;
    next.vertices = mesh.vertices;
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Point3 m = normalized(next.vertices[static_cast<size_t>(key.first)] +
                            next.vertices[static_cast<size_t>(key.second)]) *
                 radius;
      int idx = static_cast<int>(next.vertices.size());
      next.vertices.push_back(m);
      midpoint.emplace(key, idx);
      return idx;
    };
    for (const Triangle& t : mesh.faces) {
      int ab = mid(t.a, t.b), bc = mid(t.b, t.c), ca = mid(t.c, t.a);
      next.faces.push_back({t.a, ab, ca});
      next.faces.push_back({t.b, bc, ab});
      next.faces.push_back({t.c, ca, bc});
      next.faces.push_back({ab, bc, ca});
    }
    mesh = std::move(next);
  }
  return mesh;
}

TriMesh make_dented_sphere(int level, double radius, double dent_depth) {
  if (dent_depth < 0.0 || dent_depth >= 1.0) {
    throw SpecError("dent depth must be in [0, 1)");
  }
  TriMesh mesh = make_icosphere(level, radius);
  const double cos_alpha = std::cos(75.0 * kPi / 180.0);
  for (Point3& p : mesh.vertices) {
    double ct = p.z / norm(p);
    if (ct > cos_alpha) {
      double u = (ct - cos_alpha) / (1.0 - cos_alpha);
      p = p * (1.0 - dent_depth * u * u);
    }
  }
  return mesh;
}

TriMesh make_dumbbell(int level, double neck_radius) {
  const double bulb = 0.5;
  if (!(neck_radius > 0.0) || neck_radius >= bulb) {
    throw SpecError("dumbbell neck radius must be in (0, 0.5)");
  }
  const double zc = bulb;  // bulb centers at +-0.5, total extent [-1, 1]
  const double half_neck = zc - std::sqrt(bulb * bulb - neck_radius * neck_radius);
  const int segments = 8 << level;
  const int arc_samples = 2 * segments / 3;
  const int neck_samples = std::max(2, segments / 4);
  // Polar angle at the bulb/neck junction, measured from the outer pole.
  const double t_junction =
      kPi - std::acos(std::sqrt(bulb * bulb - neck_radius * neck_radius) / bulb);

  std::vector<double> zs, rs;
  // lower bulb, pole to neck junction
  for (int i = 0; i <= arc_samples; ++i) {
    double t = t_junction * i / arc_samples;
    zs.push_back(-zc - bulb * std::cos(t));
    rs.push_back(i == 0 ? 0.0 : bulb * std::sin(t));
  }
  // neck
  for (int i = 1; i < neck_samples; ++i) {
    zs.push_back(-half_neck + 2.0 * half_neck * i / neck_samples);
    rs.push_back(neck_radius);
  }
  // upper bulb, junction to pole
  for (int i = 0; i <= arc_samples; ++i) {
    double t = t_junction * (arc_samples - i) / arc_samples;
    zs.push_back(zc + bulb * std::cos(t));
    rs.push_back(i == arc_samples ? 0.0 : bulb * std::sin(t));
  }
  return lathe(zs, rs, segments);
}

Shape parse_shape(const std::string& name) {
  if (name == "cube") return Shape::Cube;
  if (name == "cylinder") return Shape::Cylinder;
  if (name == "icosphere") return Shape::Icosphere;
  if (name == "dented_sphere") return Shape::DentedSphere;
  if (name == "dumbbell") return Shape::Dumbbell;
  throw SpecError("unknown shape '" + name + "'");
}

TriMesh generate(const GeneratorSpec& spec) {
  if (spec.subdivision < 0 || spec.subdivision > 8) {
    throw SpecError("subdivision level must be in [0, 8]");
  }
  if (!(spec.radius > 0.0)) throw SpecError("radius must be positive");
  if (spec.jitter < 0.0) throw SpecError("jitter must be non-negative");

  TriMesh mesh;
  switch (spec.shape) {
    case Shape::Cube:
      mesh = make_cube(spec.subdivision);
      break;
    case Shape::Cylinder:
      mesh = make_cylinder(spec.subdivision, spec.aspect);
      break;
    case Shape::Icosphere:
      mesh = make_icosphere(spec.subdivision, spec.radius);
      break;
    case Shape::DentedSphere:
      mesh = make_dented_sphere(spec.subdivision, spec.radius, spec.dent_depth);
      break;
    case Shape::Dumbbell:
      mesh = make_dumbbell(spec.subdivision, spec.neck_radius);
      break;
  }

  if (spec.jitter > 0.0) {
    std::mt19937 rng(spec.seed);
    std::uniform_real_distribution<double> dist(-spec.jitter, spec.jitter);
    for (Point3& p : mesh.vertices) {
      double r = norm(p);
      if (r > 0.0) p = p * ((r + dist(rng)) / r);
    }
  }

  validate_mesh(mesh);
  return mesh;
}

}  // namespace meshmorph
