#include "meshmorph/obj_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace meshmorph {

namespace {

[[noreturn]] void parse_fail(const std::string& name, long line,
                             const std::string& what) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

// Reads one OBJ face index token ("7", "7/1", "7//3", "7/1/3"); everything
// after the first slash is ignored.
int face_index(const std::string& token, const std::string& name, long line) {
  size_t slash = token.find('/');
  std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  try {
    size_t pos = 0;
    int idx = std::stoi(head, &pos);
    if (pos != head.size()) throw std::invalid_argument(head);
    return idx;
  } catch (const std::exception&) {
    parse_fail(name, line, "bad face index '" + token + "'");
  }
}

}  // namespace

TriMesh load_obj(std::istream& in, const std::string& name) {
  TriMesh mesh;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Point3 p;
      if (!(ls >> p.x >> p.y >> p.z)) {
        parse_fail(name, lineno, "malformed vertex record");
      }
      mesh.vertices.push_back(p);
    } else if (tag == "f") {
      std::vector<int> poly;
      std::string token;
      while (ls >> token) {
        int idx = face_index(token, name, lineno);
        if (idx < 0) {
          // Negative indices are relative to the current vertex count.
          idx = static_cast<int>(mesh.vertices.size()) + idx + 1;
        }
        if (idx < 1 || idx > static_cast<int>(mesh.vertices.size())) {
          throw IndexError(name + ":" + std::to_string(lineno) +
                           ": face references vertex " + token + " but only " +
                           std::to_string(mesh.vertices.size()) +
                           " vertices are defined");
        }
        poly.push_back(idx - 1);
      }
      if (poly.size() < 3) {
        parse_fail(name, lineno, "face with fewer than 3 vertices");
      }
      for (size_t k = 1; k + 1 < poly.size(); ++k) {
        mesh.faces.push_back({poly[0], poly[k], poly[k + 1]});
      }
    }
    // Other records (vn, vt, o, g, s, mtllib, usemtl, ...) are ignored.
  }
  return mesh;
}

TriMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_obj(in, path);
}

void save_obj(const TriMesh& mesh, std::ostream& out) {
  char buf[96];
  for (const Point3& p : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
    out << buf;
  }
  for (const Triangle& t : mesh.faces) {
    out << "f " << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
  }
}

void save_obj(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw WriteError("cannot open '" + path + "' for writing");
  save_obj(mesh, out);
  out.flush();
  if (!out) throw WriteError("write failed for '" + path + "'");
}

}  // namespace meshmorph
