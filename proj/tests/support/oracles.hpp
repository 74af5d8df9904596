#pragma once

// Independent reference implementations used as test oracles. These must not
// share code paths with the library implementations they check.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "tgrasp/geom/mesh.hpp"

namespace oracle {

using tgrasp::geom::Ray;
using tgrasp::geom::TriMesh;
using tgrasp::geom::Vec3;

struct BruteHit {
  double t;
  int triangle;
};

// Plane intersection plus barycentric containment (a different algorithm from
// the library's Moller-Trumbore), scanned over every triangle.
inline std::optional<BruteHit> brute_force_raycast(const TriMesh& mesh, const Ray& ray) {
  std::optional<BruteHit> best;
  const auto& v = mesh.vertices();
  for (int i = 0; i < static_cast<int>(mesh.triangles().size()); ++i) {
    const auto& tr = mesh.triangles()[i];
    Vec3 a = v[tr.a], b = v[tr.b], c = v[tr.c];
    Vec3 n = cross(b - a, c - a);
    double denom = dot(n, ray.dir);
    if (std::fabs(denom) < 1e-300) continue;
    double t = dot(n, a - ray.origin) / denom;
    if (t <= 1e-9) continue;
    Vec3 p = ray.origin + ray.dir * t;

    // Barycentric containment.
    Vec3 v0 = b - a, v1 = c - a, v2 = p - a;
    double d00 = dot(v0, v0), d01 = dot(v0, v1), d11 = dot(v1, v1);
    double d20 = dot(v2, v0), d21 = dot(v2, v1);
    double den = d00 * d11 - d01 * d01;
    if (std::fabs(den) < 1e-300) continue;
    double beta = (d11 * d20 - d01 * d21) / den;
    double gamma = (d00 * d21 - d01 * d20) / den;
    if (beta < 0.0 || gamma < 0.0 || beta + gamma > 1.0) continue;

    if (!best || t < best->t) best = BruteHit{t, i};
  }
  return best;
}

// One-sample Kolmogorov-Smirnov p-value against U[lo, hi].
inline double ks_uniform_pvalue(std::vector<double> xs, double lo, double hi) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = (xs[i] - lo) / (hi - lo);
    d = std::max(d, std::fabs((i + 1) / n - f));
    d = std::max(d, std::fabs(f - i / n));
  }
  double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
  double p = 0.0;
  for (int k = 1; k <= 100; ++k)
    p += 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(p, 0.0, 1.0);
}

// Undirected edge count (Euler oracle for closed triangle meshes: E = 3F/2).
inline long undirected_edge_count(const TriMesh& mesh) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& t : mesh.triangles()) {
    auto push = [&](int i, int j) { edges.emplace_back(std::min(i, j), std::max(i, j)); };
    push(t.a, t.b);
    push(t.b, t.c);
    push(t.c, t.a);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return static_cast<long>(edges.size());
}

}  // namespace oracle
