#include <cstdlib>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tgrasp/geom/mesh.hpp"
#include "tgrasp/util/errors.hpp"

namespace tgrasp::geom {

TriMesh load_mesh_text(const std::string& text, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw BadDims("mesh scale must be positive");

  std::vector<Vec3> verts;
  std::vector<Tri> tris;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "v") {
      // strtod accepts nan/inf spellings, which are then rejected as NonFinite.
      auto parse_coord = [&](double& out) {
        std::string tok;
        if (!(ls >> tok)) return false;
        char* end = nullptr;
        out = std::strtod(tok.c_str(), &end);
        return end == tok.c_str() + tok.size();
      };
      double x, y, z;
      if (!parse_coord(x) || !parse_coord(y) || !parse_coord(z))
        throw ParseError("bad vertex at line " + std::to_string(lineno));
      Vec3 v{x * scale, y * scale, z * scale};
      if (!v.finite()) throw NonFinite("non-finite vertex at line " + std::to_string(lineno));
      verts.push_back(v);
    } else if (tag == "f") {
      long i, j, k;
      if (!(ls >> i >> j >> k)) throw ParseError("bad face at line " + std::to_string(lineno));
      std::string extra;
      if (ls >> extra) throw ParseError("faces must be triangles, line " + std::to_string(lineno));
      if (i < 1 || j < 1 || k < 1 || i > static_cast<long>(verts.size()) ||
          j > static_cast<long>(verts.size()) || k > static_cast<long>(verts.size()))
        throw ParseError("face index out of range at line " + std::to_string(lineno));
      tris.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), static_cast<int>(k - 1)});
    } else {
      throw ParseError("unknown record '" + tag + "' at line " + std::to_string(lineno));
    }
  }
  if (tris.empty()) throw EmptyMesh("mesh has no faces");
  return TriMesh::from_data(std::move(verts), std::move(tris));
}

TriMesh load_mesh(const std::string& path, double scale) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open mesh file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return load_mesh_text(buf.str(), scale);
}

std::string mesh_to_text(const TriMesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& v : mesh.vertices()) out << "v " << v.x << " " << v.y << " " << v.z << "\n";
  for (const auto& t : mesh.triangles())
    out << "f " << t.a + 1 << " " << t.b + 1 << " " << t.c + 1 << "\n";
  return out.str();
}

}  // namespace tgrasp::geom
