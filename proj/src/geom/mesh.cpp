#include "tgrasp/geom/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "tgrasp/util/errors.hpp"

namespace tgrasp::geom {

TriMesh TriMesh::from_data(std::vector<Vec3> vertices, std::vector<Tri> triangles) {
  TriMesh m;
  for (const auto& v : vertices)
    if (!v.finite()) throw NonFinite("mesh vertex with NaN/Inf coordinate");

  const int nv = static_cast<int>(vertices.size());
  m.verts_ = std::move(vertices);
  m.tris_.reserve(triangles.size());
  m.normals_.reserve(triangles.size());
  for (const auto& t : triangles) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.a >= nv || t.b >= nv || t.c >= nv)
      throw ParseError("triangle index out of range");
    Vec3 e1 = m.verts_[t.b] - m.verts_[t.a];
    Vec3 e2 = m.verts_[t.c] - m.verts_[t.a];
    Vec3 n = cross(e1, e2);
    double area = 0.5 * norm(n);
    if (area < kDegenerateArea) {
      ++m.degenerate_dropped_;
      continue;
    }
    m.tris_.push_back(t);
    m.normals_.push_back(n / (2.0 * area));
  }
  if (m.tris_.empty()) throw EmptyMesh("no non-degenerate triangles");

  for (const auto& v : m.verts_) m.box_.expand(v);
  m.build_bvh();
  return m;
}

namespace {
constexpr int kLeafSize = 8;

Aabb triangle_box(const std::vector<Vec3>& v, const Tri& t) {
  Aabb b;
  b.expand(v[t.a]);
  b.expand(v[t.b]);
  b.expand(v[t.c]);
  return b;
}

// Moller-Trumbore; returns t for hits strictly beyond kRayTMin. Barycentric
// bounds carry a tiny inclusive tolerance so rays crossing a shared edge or
// the diagonal of a quad cannot slip between both triangles and spuriously
// reach a back face.
inline bool intersect_triangle(const Ray& r, const Vec3& a, const Vec3& b, const Vec3& c,
                               double& t_out) {
  constexpr double kBaryEps = 1e-9;
  Vec3 e1 = b - a;
  Vec3 e2 = c - a;
  Vec3 p = cross(r.dir, e2);
  double det = dot(e1, p);
  if (std::fabs(det) < 1e-300) return false;
  double inv = 1.0 / det;
  Vec3 s = r.origin - a;
  double u = dot(s, p) * inv;
  if (u < -kBaryEps || u > 1.0 + kBaryEps) return false;
  Vec3 q = cross(s, e1);
  double v = dot(r.dir, q) * inv;
  if (v < -kBaryEps || u + v > 1.0 + kBaryEps) return false;
  double t = dot(e2, q) * inv;
  if (t <= kRayTMin) return false;
  t_out = t;
  return true;
}

// Slab test against [kRayTMin, t_max]; inclusive so equal-t candidates survive.
inline bool hits_box(const Ray& r, const Vec3& inv_dir, const Aabb& box, double t_max) {
  double t0 = kRayTMin, t1 = t_max;
  for (int axis = 0; axis < 3; ++axis) {
    double lo = (box.lo[axis] - r.origin[axis]) * inv_dir[axis];
    double hi = (box.hi[axis] - r.origin[axis]) * inv_dir[axis];
    if (inv_dir[axis] < 0.0) std::swap(lo, hi);
    t0 = std::max(t0, lo);
    t1 = std::min(t1, hi);
    if (t0 > t1) return false;
  }
  return true;
}
}  // namespace

void TriMesh::build_bvh() {
  const int n = static_cast<int>(tris_.size());
  order_.resize(n);
  std::vector<Vec3> centroids(n);
  for (int i = 0; i < n; ++i) {
    order_[i] = i;
    centroids[i] = (verts_[tris_[i].a] + verts_[tris_[i].b] + verts_[tris_[i].c]) / 3.0;
  }
  nodes_.clear();
  nodes_.reserve(2 * n);
  build_node(order_, 0, n, centroids);
}

int TriMesh::build_node(std::vector<int>& order, int first, int count,
                        std::vector<Vec3>& centroids) {
  int idx = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  Aabb box;
  for (int i = first; i < first + count; ++i) box.expand(triangle_box(verts_, tris_[order[i]]));
  nodes_[idx].box = box;

  if (count <= kLeafSize) {
    // Sort leaf contents so traversal visits lower ids first.
    std::sort(order.begin() + first, order.begin() + first + count);
    nodes_[idx].first = first;
    nodes_[idx].count = count;
    return idx;
  }

  Aabb cbox;
  for (int i = first; i < first + count; ++i) cbox.expand(centroids[order[i]]);
  Vec3 ext = cbox.extent();
  int axis = 0;
  if (ext.y > ext.x) axis = 1;
  if (ext.z > ext[axis]) axis = 2;

  int mid = first + count / 2;
  std::nth_element(order.begin() + first, order.begin() + mid, order.begin() + first + count,
                   [&](int lhs, int rhs) {
                     double cl = centroids[lhs][axis], cr = centroids[rhs][axis];
                     if (cl != cr) return cl < cr;
                     return lhs < rhs;  // deterministic split
                   });

  int left = build_node(order, first, mid - first, centroids);
  int right = build_node(order, mid, first + count - mid, centroids);
  nodes_[idx].left = left;
  nodes_[idx].right = right;
  return idx;
}

std::optional<Hit> TriMesh::raycast(const Ray& ray) const {
  if (nodes_.empty()) return std::nullopt;
  Vec3 inv_dir{1.0 / ray.dir.x, 1.0 / ray.dir.y, 1.0 / ray.dir.z};

  double best_t = 1e300;
  int best_tri = -1;

  int stack[64];
  int sp = 0;
  stack[sp++] = 0;
  while (sp > 0) {
    const detail::BvhNode& node = nodes_[stack[--sp]];
    if (!hits_box(ray, inv_dir, node.box, best_t)) continue;
    if (node.leaf()) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        int tri = order_[i];
        double t;
        if (intersect_triangle(ray, verts_[tris_[tri].a], verts_[tris_[tri].b],
                               verts_[tris_[tri].c], t)) {
          if (t < best_t || (t == best_t && tri < best_tri)) {
            best_t = t;
            best_tri = tri;
          }
        }
      }
    } else {
      stack[sp++] = node.right;
      stack[sp++] = node.left;
    }
  }

  if (best_tri < 0) return std::nullopt;
  Hit h;
  h.t = best_t;
  h.triangle = best_tri;
  h.point = ray.origin + ray.dir * best_t;
  Vec3 n = normals_[best_tri];
  h.backface = dot(n, ray.dir) > 0.0;
  h.normal = h.backface ? -n : n;
  return h;
}

std::optional<Hit> TriMesh::raycast(const Ray& ray, const Pose& mesh_from_query) const {
  Ray local{mesh_from_query.apply(ray.origin), mesh_from_query.rotate(ray.dir)};
  auto h = raycast(local);
  if (!h) return std::nullopt;
  Pose query_from_mesh = mesh_from_query.inverse();
  Hit out = *h;
  out.point = query_from_mesh.apply(h->point);
  out.normal = query_from_mesh.rotate(h->normal);
  return out;
}

WatertightReport check_watertight(const TriMesh& mesh) {
  // Key = undirected edge; value counts (lo->hi, hi->lo) directed occurrences.
  std::unordered_map<std::uint64_t, std::pair<int, int>> edges;
  edges.reserve(mesh.triangles().size() * 3);
  auto add = [&](int i, int j) {
    bool fwd = i < j;
    std::uint64_t key = fwd ? (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j)
                            : (static_cast<std::uint64_t>(j) << 32) | static_cast<std::uint32_t>(i);
    auto& e = edges[key];
    (fwd ? e.first : e.second)++;
  };
  for (const auto& t : mesh.triangles()) {
    add(t.a, t.b);
    add(t.b, t.c);
    add(t.c, t.a);
  }

  WatertightReport r;
  r.closed = true;
  r.consistent_winding = true;
  for (const auto& [key, counts] : edges) {
    (void)key;
    int total = counts.first + counts.second;
    if (total == 1) {
      ++r.boundary_edges;
      r.closed = false;
    } else if (total > 2) {
      ++r.nonmanifold_edges;
      r.closed = false;
    }
    if (counts.first != 1 || counts.second != 1) r.consistent_winding = false;
  }
  return r;
}

bool is_watertight(const TriMesh& mesh) { return check_watertight(mesh).watertight(); }

MassProperties mass_properties(const TriMesh& mesh, double density) {
  if (density <= 0.0) throw BadDims("density must be positive");
  if (!is_watertight(mesh)) throw NotWatertight("mass properties require a watertight mesh");

  // Signed tetrahedra against the origin; COM is orientation-independent.
  double vol6 = 0.0;
  Vec3 moment;
  for (const auto& t : mesh.triangles()) {
    const Vec3& a = mesh.vertices()[t.a];
    const Vec3& b = mesh.vertices()[t.b];
    const Vec3& c = mesh.vertices()[t.c];
    double v = dot(a, cross(b, c));
    vol6 += v;
    moment += (a + b + c) * (v / 4.0);
  }
  double volume = vol6 / 6.0;
  Vec3 com = volume != 0.0 ? moment / vol6 : Vec3{};
  volume = std::fabs(volume);
  if (volume <= 0.0) throw NotWatertight("degenerate enclosed volume");

  MassProperties p;
  p.volume = volume;
  p.center_of_mass = com;
  p.mass = density * volume;
  return p;
}

}  // namespace tgrasp::geom
