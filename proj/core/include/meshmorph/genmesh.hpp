// genmesh.hpp -- procedural closed test meshes.

#pragma once

#include <string>

#include "meshmorph/mesh.hpp"

namespace meshmorph {

enum class Shape { Cube, Cylinder, Icosphere, DentedSphere, Dumbbell };

struct GeneratorSpec {
  Shape shape = Shape::Icosphere;
  int subdivision = 0;
  double aspect = 3.0;       // cylinder: height / diameter
  double dent_depth = 0.0;   // dented sphere: radial dent depth, fraction of r
  double neck_radius = 0.25; // dumbbell: must be < bulb radius 0.5
  double radius = 1.0;       // icosphere / dented sphere
  double jitter = 0.0;       // radial perturbation amplitude, mesh units
  unsigned seed = 0;         // drives the jitter only
};

Shape parse_shape(const std::string& name);  // throws SpecError

// Deterministic for a fixed spec; the result passes validate_mesh. Throws
// SpecError on invalid parameters (e.g. neck radius >= bulb radius).
TriMesh generate(const GeneratorSpec& spec);

// Axis-aligned cube of edge 1 centered at the origin; each face is an
// (2^level)^2 grid of quads split into triangles. Level 0 gives 8 vertices
// and 12 triangles.
TriMesh make_cube(int level);

// Capped cylinder of diameter 1 and height aspect, axis z.
TriMesh make_cylinder(int level, double aspect);

// Subdivided icosahedron projected to a sphere; 20 * 4^level faces.
TriMesh make_icosphere(int level, double radius = 1.0);

// Icosphere with a smooth radial dent around the +z pole; depth 0 reproduces
// the icosphere exactly.
TriMesh make_dented_sphere(int level, double radius, double dent_depth);

// Two unit-diameter bulbs joined by a cylindrical neck, axis z.
TriMesh make_dumbbell(int level, double neck_radius);

}  // namespace meshmorph
