#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgrasp/geom/pose.hpp"
#include "tgrasp/geom/vec3.hpp"

namespace tgrasp::geom {

struct Ray {
  Vec3 origin;
  Vec3 dir;  // unit
};

struct Hit {
  double t = 0.0;
  Vec3 point;
  Vec3 normal;  // unit, oriented against the ray
  int triangle = -1;
  bool backface = false;  // geometric normal faced along the ray (origin inside a closed mesh)
};

struct Tri {
  int a = 0, b = 0, c = 0;
};

/// Minimum hit distance; intersections at or below are ignored.
inline constexpr double kRayTMin = 1e-9;

/// Triangles with area below this are dropped at construction.
inline constexpr double kDegenerateArea = 1e-12;

namespace detail {
struct BvhNode {
  Aabb box;
  int left = -1, right = -1;  // internal children
  int first = 0, count = 0;   // leaf triangle range
  bool leaf() const { return count > 0; }
};
}  // namespace detail

/// Immutable triangle mesh with per-triangle unit normals and a BVH
/// (binary median split over centroids, leaf size <= 8). Safe for
/// concurrent reads after construction.
class TriMesh {
 public:
  /// Validates, drops degenerate triangles, computes normals, builds the BVH.
  /// Throws NonFinite / EmptyMesh / ParseError (bad indices).
  static TriMesh from_data(std::vector<Vec3> vertices, std::vector<Tri> triangles);

  const std::vector<Vec3>& vertices() const { return verts_; }
  const std::vector<Tri>& triangles() const { return tris_; }
  const std::vector<Vec3>& normals() const { return normals_; }
  int degenerate_dropped() const { return degenerate_dropped_; }
  const Aabb& aabb() const { return box_; }

  /// Nearest intersection with t > kRayTMin; ties on t resolve to the lower
  /// triangle id so BVH and brute-force traversal agree exactly.
  std::optional<Hit> raycast(const Ray& ray) const;

  /// Same query with the ray expressed in another frame: `mesh_from_query`
  /// maps query-frame points into this mesh's frame. The returned hit is in
  /// the query frame.
  std::optional<Hit> raycast(const Ray& ray, const Pose& mesh_from_query) const;

 private:
  void build_bvh();
  int build_node(std::vector<int>& order, int first, int count, std::vector<Vec3>& centroids);

  std::vector<Vec3> verts_;
  std::vector<Tri> tris_;
  std::vector<Vec3> normals_;
  std::vector<detail::BvhNode> nodes_;
  std::vector<int> order_;  // triangle ids grouped by leaf
  Aabb box_;
  int degenerate_dropped_ = 0;
};

struct WatertightReport {
  bool closed = false;              // every undirected edge on exactly two triangles
  bool consistent_winding = false;  // every directed edge appears exactly once
  int boundary_edges = 0;
  int nonmanifold_edges = 0;
  bool watertight() const { return closed && consistent_winding; }
};

WatertightReport check_watertight(const TriMesh& mesh);
bool is_watertight(const TriMesh& mesh);

struct MassProperties {
  double mass = 0.0;
  Vec3 center_of_mass;
  double volume = 0.0;
};

/// Volume and COM by signed-tetrahedron accumulation over the closed surface.
/// Throws NotWatertight when the mesh is open or inconsistently wound.
MassProperties mass_properties(const TriMesh& mesh, double density);

/// Canonical ASCII format: `v x y z` (meters), `f i j k` (1-based), `#` comments.
TriMesh load_mesh(const std::string& path, double scale);
TriMesh load_mesh_text(const std::string& text, double scale);

/// Writes the same format (used by tests and tooling round trips).
std::string mesh_to_text(const TriMesh& mesh);

enum class PrimitiveKind { box, cylinder, sphere, capsule, l_block };

/// Watertight primitive centered at the origin (AABB center).
/// dims per kind: box {sx,sy,sz}; cylinder {r,h}; sphere {r};
/// capsule {r, cylinder_h}; l_block {a,b,h} (L cross-section, legs a/2 and b/2 thick).
/// Curved kinds require tessellation >= 8.
TriMesh make_primitive(PrimitiveKind kind, const std::vector<double>& dims, int tessellation);

std::optional<PrimitiveKind> primitive_kind_from_string(const std::string& s);

}  // namespace tgrasp::geom
