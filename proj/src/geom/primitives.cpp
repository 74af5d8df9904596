#include <cmath>

#include "tgrasp/geom/mesh.hpp"
#include "tgrasp/util/errors.hpp"

namespace tgrasp::geom {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_dims(const std::vector<double>& dims, std::size_t n, const char* kind) {
  if (dims.size() != n) throw BadDims(std::string(kind) + ": wrong dimension count");
  for (double d : dims)
    if (!(d > 0.0) || !std::isfinite(d)) throw BadDims(std::string(kind) + ": dims must be positive");
}

void require_tess(int tess, const char* kind) {
  if (tess < 8) throw BadDims(std::string(kind) + ": tessellation must be >= 8");
}

TriMesh make_box(double sx, double sy, double sz) {
  double x = sx / 2, y = sy / 2, z = sz / 2;
  std::vector<Vec3> v = {{-x, -y, -z}, {x, -y, -z}, {x, y, -z}, {-x, y, -z},
                         {-x, -y, z},  {x, -y, z},  {x, y, z},  {-x, y, z}};
  // Outward winding, 12 triangles.
  std::vector<Tri> t = {{0, 2, 1}, {0, 3, 2},   // -z
                        {4, 5, 6}, {4, 6, 7},   // +z
                        {0, 1, 5}, {0, 5, 4},   // -y
                        {2, 3, 7}, {2, 7, 6},   // +y
                        {1, 2, 6}, {1, 6, 5},   // +x
                        {3, 0, 4}, {3, 4, 7}};  // -x
  return TriMesh::from_data(std::move(v), std::move(t));
}

// Rings of vertices plus pole/center points; used by cylinder, sphere, capsule.
struct RingBuilder {
  std::vector<Vec3> verts;
  std::vector<Tri> tris;

  int add(const Vec3& p) {
    verts.push_back(p);
    return static_cast<int>(verts.size()) - 1;
  }

  int add_ring(double r, double z, int segments) {
    int first = static_cast<int>(verts.size());
    for (int s = 0; s < segments; ++s) {
      double a = 2.0 * kPi * s / segments;
      verts.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    return first;
  }

  // Quad band between two rings of equal segment count; upper ring wound CCW seen from +z.
  void band(int lower, int upper, int segments) {
    for (int s = 0; s < segments; ++s) {
      int s2 = (s + 1) % segments;
      tris.push_back({lower + s, lower + s2, upper + s2});
      tris.push_back({lower + s, upper + s2, upper + s});
    }
  }

  // Triangle fan from a ring to an apex; `up` selects orientation.
  void fan(int ring, int apex, int segments, bool up) {
    for (int s = 0; s < segments; ++s) {
      int s2 = (s + 1) % segments;
      if (up)
        tris.push_back({ring + s, ring + s2, apex});
      else
        tris.push_back({ring + s2, ring + s, apex});
    }
  }
};

TriMesh make_cylinder(double r, double h, int tess) {
  RingBuilder b;
  int bottom = b.add_ring(r, -h / 2, tess);
  int top = b.add_ring(r, h / 2, tess);
  b.band(bottom, top, tess);
  int cb = b.add({0, 0, -h / 2});
  int ct = b.add({0, 0, h / 2});
  b.fan(bottom, cb, tess, false);
  b.fan(top, ct, tess, true);
  return TriMesh::from_data(std::move(b.verts), std::move(b.tris));
}

TriMesh make_sphere(double r, int tess) {
  int segments = tess;
  int rings = std::max(4, tess / 2);  // latitude divisions
  RingBuilder b;
  int south = b.add({0, 0, -r});
  std::vector<int> ring_first;
  for (int i = 1; i < rings; ++i) {
    double phi = -kPi / 2 + kPi * i / rings;
    ring_first.push_back(b.add_ring(r * std::cos(phi), r * std::sin(phi), segments));
  }
  int north = b.add({0, 0, r});
  b.fan(ring_first.front(), south, segments, false);
  for (std::size_t i = 0; i + 1 < ring_first.size(); ++i)
    b.band(ring_first[i], ring_first[i + 1], segments);
  b.fan(ring_first.back(), north, segments, true);
  return TriMesh::from_data(std::move(b.verts), std::move(b.tris));
}

TriMesh make_capsule(double r, double cyl_h, int tess) {
  int segments = tess;
  int cap_rings = std::max(2, tess / 4);
  RingBuilder b;
  int south = b.add({0, 0, -cyl_h / 2 - r});
  std::vector<int> lower, upper;
  for (int i = 1; i <= cap_rings; ++i) {
    double phi = -kPi / 2 + (kPi / 2) * i / cap_rings;  // ends at equator
    lower.push_back(b.add_ring(r * std::cos(phi), -cyl_h / 2 + r * std::sin(phi), segments));
  }
  for (int i = 0; i < cap_rings; ++i) {
    double phi = (kPi / 2) * i / cap_rings;  // starts at equator
    upper.push_back(b.add_ring(r * std::cos(phi), cyl_h / 2 + r * std::sin(phi), segments));
  }
  int north = b.add({0, 0, cyl_h / 2 + r});

  b.fan(lower.front(), south, segments, false);
  for (std::size_t i = 0; i + 1 < lower.size(); ++i) b.band(lower[i], lower[i + 1], segments);
  b.band(lower.back(), upper.front(), segments);  // cylinder wall
  for (std::size_t i = 0; i + 1 < upper.size(); ++i) b.band(upper[i], upper[i + 1], segments);
  b.fan(upper.back(), north, segments, true);
  return TriMesh::from_data(std::move(b.verts), std::move(b.tris));
}

// L-shaped prism: bounding box a x b x h minus the (+x, +y) quadrant.
TriMesh make_l_block(double a, double b, double h) {
  // 7-vertex outline, CCW; includes the (0, b/2) split point so side walls and
  // caps share edges exactly.
  const double ox = a / 2, oy = b / 2, z = h / 2;
  std::vector<Vec3> outline = {{0, 0, 0},     {a, 0, 0},     {a, b / 2, 0}, {a / 2, b / 2, 0},
                               {a / 2, b, 0}, {0, b, 0},     {0, b / 2, 0}};
  const int n = static_cast<int>(outline.size());
  std::vector<Vec3> verts;
  for (const auto& p : outline) verts.push_back({p.x - ox, p.y - oy, -z});
  for (const auto& p : outline) verts.push_back({p.x - ox, p.y - oy, z});

  std::vector<Tri> tris;
  // Caps; outline indices: 0..6 bottom, 7..13 top.
  auto cap = [&](int base, bool top) {
    // Lower rectangle (0,1,2,3,6) and upper rectangle (6,3,4,5).
    int quads[3][4] = {{0, 1, 2, 3}, {0, 3, 6, -1}, {6, 3, 4, 5}};
    for (auto& q : quads) {
      if (q[3] < 0) {
        if (top)
          tris.push_back({base + q[0], base + q[1], base + q[2]});
        else
          tris.push_back({base + q[2], base + q[1], base + q[0]});
      } else {
        if (top) {
          tris.push_back({base + q[0], base + q[1], base + q[2]});
          tris.push_back({base + q[0], base + q[2], base + q[3]});
        } else {
          tris.push_back({base + q[2], base + q[1], base + q[0]});
          tris.push_back({base + q[3], base + q[2], base + q[0]});
        }
      }
    }
  };
  cap(0, false);
  cap(n, true);
  // Side walls.
  for (int s = 0; s < n; ++s) {
    int s2 = (s + 1) % n;
    tris.push_back({s, s2, n + s2});
    tris.push_back({s, n + s2, n + s});
  }
  return TriMesh::from_data(std::move(verts), std::move(tris));
}

}  // namespace

TriMesh make_primitive(PrimitiveKind kind, const std::vector<double>& dims, int tessellation) {
  switch (kind) {
    case PrimitiveKind::box:
      require_dims(dims, 3, "box");
      return make_box(dims[0], dims[1], dims[2]);
    case PrimitiveKind::cylinder:
      require_dims(dims, 2, "cylinder");
      require_tess(tessellation, "cylinder");
      return make_cylinder(dims[0], dims[1], tessellation);
    case PrimitiveKind::sphere:
      require_dims(dims, 1, "sphere");
      require_tess(tessellation, "sphere");
      return make_sphere(dims[0], tessellation);
    case PrimitiveKind::capsule:
      require_dims(dims, 2, "capsule");
      require_tess(tessellation, "capsule");
      return make_capsule(dims[0], dims[1], tessellation);
    case PrimitiveKind::l_block:
      require_dims(dims, 3, "l_block");
      return make_l_block(dims[0], dims[1], dims[2]);
  }
  throw BadDims("unknown primitive kind");
}

std::optional<PrimitiveKind> primitive_kind_from_string(const std::string& s) {
  if (s == "box") return PrimitiveKind::box;
  if (s == "cylinder") return PrimitiveKind::cylinder;
  if (s == "sphere") return PrimitiveKind::sphere;
  if (s == "capsule") return PrimitiveKind::capsule;
  if (s == "l_block") return PrimitiveKind::l_block;
  return std::nullopt;
}

}  // namespace tgrasp::geom
