#include <cmath>
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tgrasp/geom/mesh.hpp"
#include "tgrasp/geom/pose.hpp"
#include "tgrasp/util/errors.hpp"
#include "tgrasp/util/rng.hpp"

using namespace tgrasp;
using namespace tgrasp::geom;

namespace {

const char* kUnitCube =
    "# unit cube\n"
    "v -0.5 -0.5 -0.5\nv 0.5 -0.5 -0.5\nv 0.5 0.5 -0.5\nv -0.5 0.5 -0.5\n"
    "v -0.5 -0.5 0.5\nv 0.5 -0.5 0.5\nv 0.5 0.5 0.5\nv -0.5 0.5 0.5\n"
    "f 1 3 2\nf 1 4 3\n"
    "f 5 6 7\nf 5 7 8\n"
    "f 1 2 6\nf 1 6 5\n"
    "f 3 4 8\nf 3 8 7\n"
    "f 2 3 7\nf 2 7 6\n"
    "f 4 1 5\nf 4 5 8\n";

TriMesh unit_cube(double scale = 1.0) { return load_mesh_text(kUnitCube, scale); }

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("load_mesh: canonical cube") {
  TriMesh m = unit_cube();
  CHECK(m.vertices().size() == 8);
  CHECK(m.triangles().size() == 12);
  CHECK(m.degenerate_dropped() == 0);
}

TEST_CASE("load_mesh: scale 0.6 shrinks extents") {
  TriMesh m = unit_cube(0.6);
  Vec3 ext = m.aabb().extent();
  CHECK(ext.x == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(ext.y == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(ext.z == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("load_mesh: zero-area triangle dropped") {
  std::string text = kUnitCube;
  text += "f 1 2 2\n";  // degenerate
  TriMesh m = load_mesh_text(text, 1.0);
  CHECK(m.triangles().size() == 12);
  CHECK(m.degenerate_dropped() == 1);
}

TEST_CASE("load_mesh: errors") {
  CHECK_THROWS_AS(load_mesh_text("v 0 0 0\n", 1.0), EmptyMesh);
  CHECK_THROWS_AS(load_mesh_text("v 0 0 nan\nv 1 0 0\nv 0 1 0\nf 1 2 3\n", 1.0), NonFinite);
  CHECK_THROWS_AS(load_mesh_text("bogus 1 2 3\n", 1.0), ParseError);
  CHECK_THROWS_AS(load_mesh_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 9\n", 1.0), ParseError);
  CHECK_THROWS_AS(load_mesh_text(kUnitCube, -1.0), BadDims);
}

TEST_CASE("make_primitive: box volume exact") {
  TriMesh m = make_primitive(PrimitiveKind::box, {0.05, 0.05, 0.05}, 0);
  CHECK(is_watertight(m));
  auto p = mass_properties(m, 1000.0);
  CHECK(p.volume == doctest::Approx(1.25e-4).epsilon(1e-12));
}

TEST_CASE("make_primitive: sphere volume within 2% of analytic") {
  TriMesh m = make_primitive(PrimitiveKind::sphere, {0.03}, 64);
  CHECK(is_watertight(m));
  auto p = mass_properties(m, 1.0);
  double analytic = 4.0 / 3.0 * M_PI * 0.03 * 0.03 * 0.03;
  CHECK(std::fabs(p.volume - analytic) / analytic < 0.02);
}

TEST_CASE("make_primitive: bad dims") {
  CHECK_THROWS_AS(make_primitive(PrimitiveKind::cylinder, {0.0, 0.1}, 32), BadDims);
  CHECK_THROWS_AS(make_primitive(PrimitiveKind::sphere, {0.03}, 4), BadDims);
  CHECK_THROWS_AS(make_primitive(PrimitiveKind::box, {0.1, -0.1, 0.1}, 0), BadDims);
}

TEST_CASE("all primitives watertight and positive volume") {
  std::vector<TriMesh> meshes;
  meshes.push_back(make_primitive(PrimitiveKind::box, {0.04, 0.06, 0.08}, 0));
  meshes.push_back(make_primitive(PrimitiveKind::cylinder, {0.02, 0.07}, 24));
  meshes.push_back(make_primitive(PrimitiveKind::sphere, {0.03}, 24));
  meshes.push_back(make_primitive(PrimitiveKind::capsule, {0.015, 0.05}, 24));
  meshes.push_back(make_primitive(PrimitiveKind::l_block, {0.06, 0.05, 0.04}, 0));
  for (const auto& m : meshes) {
    CAPTURE(m.triangles().size());
    CHECK(is_watertight(m));
    CHECK(mass_properties(m, 1.0).volume > 0.0);
  }
}

TEST_CASE("l_block volume is 3/4 of its bounding box") {
  TriMesh m = make_primitive(PrimitiveKind::l_block, {0.06, 0.05, 0.04}, 0);
  auto p = mass_properties(m, 1.0);
  CHECK(p.volume == doctest::Approx(0.75 * 0.06 * 0.05 * 0.04).epsilon(1e-9));
}

TEST_CASE("is_watertight: closed cube true, open cube false") {
  CHECK(is_watertight(unit_cube()));

  // Remove one face (two triangles).
  std::string open_text =
      "v -0.5 -0.5 -0.5\nv 0.5 -0.5 -0.5\nv 0.5 0.5 -0.5\nv -0.5 0.5 -0.5\n"
      "v -0.5 -0.5 0.5\nv 0.5 -0.5 0.5\nv 0.5 0.5 0.5\nv -0.5 0.5 0.5\n"
      "f 1 3 2\nf 1 4 3\n"
      "f 1 2 6\nf 1 6 5\n"
      "f 3 4 8\nf 3 8 7\n"
      "f 2 3 7\nf 2 7 6\n"
      "f 4 1 5\nf 4 5 8\n";
  TriMesh open_cube = load_mesh_text(open_text, 1.0);
  auto report = check_watertight(open_cube);
  CHECK_FALSE(report.watertight());
  CHECK_FALSE(report.closed);
  CHECK(report.boundary_edges == 4);
  CHECK_THROWS_AS(mass_properties(open_cube, 1.0), NotWatertight);
}

TEST_CASE("is_watertight: winding-only failure reported distinctly") {
  // Closed cube with one face flipped: closure holds, winding does not.
  std::string flipped = kUnitCube;
  std::size_t pos = flipped.find("f 5 6 7");
  flipped.replace(pos, 7, "f 5 7 6");
  pos = flipped.find("f 5 7 8");
  flipped.replace(pos, 7, "f 5 8 7");
  TriMesh m = load_mesh_text(flipped, 1.0);
  auto report = check_watertight(m);
  CHECK(report.closed);
  CHECK_FALSE(report.consistent_winding);
  CHECK_FALSE(report.watertight());
}

TEST_CASE("icosphere edge count satisfies E = 3F/2") {
  TriMesh m = make_primitive(PrimitiveKind::sphere, {0.03}, 32);
  CHECK(is_watertight(m));
  CHECK(oracle::undirected_edge_count(m) == 3 * static_cast<long>(m.triangles().size()) / 2);
}

TEST_CASE("watertightness invariant under vertex permutation and scaling") {
  TriMesh m = make_primitive(PrimitiveKind::cylinder, {0.02, 0.05}, 16);
  REQUIRE(is_watertight(m));

  // Reverse vertex order with remapped indices.
  int n = static_cast<int>(m.vertices().size());
  std::vector<Vec3> verts(n);
  for (int i = 0; i < n; ++i) verts[n - 1 - i] = m.vertices()[i] * 2.5;
  std::vector<Tri> tris;
  for (const auto& t : m.triangles())
    tris.push_back({n - 1 - t.a, n - 1 - t.b, n - 1 - t.c});
  TriMesh permuted = TriMesh::from_data(verts, tris);
  CHECK(is_watertight(permuted));
}

TEST_CASE("raycast: axis-aligned cube hits") {
  TriMesh m = unit_cube();
  auto hit = m.raycast({{0, 0, 1}, {0, 0, -1}});
  REQUIRE(hit.has_value());
  CHECK(hit->t == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hit->point.z == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dot(hit->normal, Vec3{0, 0, -1}) < 0.0);  // faces against the ray

  CHECK_FALSE(m.raycast({{2, 0, 1}, {0, 0, -1}}).has_value());
}

TEST_CASE("raycast: BVH equals brute force on 1000 rays x 5 meshes") {
  std::vector<TriMesh> meshes;
  meshes.push_back(make_primitive(PrimitiveKind::box, {0.05, 0.07, 0.04}, 0));
  meshes.push_back(make_primitive(PrimitiveKind::cylinder, {0.025, 0.08}, 32));
  meshes.push_back(make_primitive(PrimitiveKind::sphere, {0.035}, 32));
  meshes.push_back(make_primitive(PrimitiveKind::capsule, {0.02, 0.05}, 24));
  meshes.push_back(make_primitive(PrimitiveKind::l_block, {0.07, 0.06, 0.05}, 0));

  Rng rng(991);
  for (const auto& m : meshes) {
    int hits = 0;
    for (int i = 0; i < 1000; ++i) {
      Vec3 target{rng.uniform(-0.02, 0.02), rng.uniform(-0.02, 0.02), rng.uniform(-0.02, 0.02)};
      double theta = rng.uniform(0.0, 2 * M_PI);
      double phi = std::acos(rng.uniform(-1.0, 1.0));
      Vec3 origin{0.3 * std::sin(phi) * std::cos(theta), 0.3 * std::sin(phi) * std::sin(theta),
                  0.3 * std::cos(phi)};
      Ray ray{origin, normalized(target - origin)};

      auto fast = m.raycast(ray);
      auto slow = oracle::brute_force_raycast(m, ray);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        ++hits;
        CHECK(fast->triangle == slow->triangle);
        CHECK(std::fabs(fast->t - slow->t) <= 1e-12 * std::max(1.0, std::fabs(slow->t)));
      }
    }
    CHECK(hits > 500);  // the rays genuinely exercise the mesh
  }
}

TEST_CASE("mass_properties: symmetric box") {
  TriMesh m = make_primitive(PrimitiveKind::box, {0.1, 0.1, 0.1}, 0);
  auto p = mass_properties(m, 1000.0);
  CHECK(p.mass == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norm(p.center_of_mass) < 1e-12);
}

TEST_CASE("mass_properties: sphere mass within 2%") {
  TriMesh m = make_primitive(PrimitiveKind::sphere, {0.03}, 64);
  auto p = mass_properties(m, 500.0);
  double analytic = 500.0 * 4.0 / 3.0 * M_PI * std::pow(0.03, 3);
  CHECK(std::fabs(p.mass - analytic) / analytic < 0.02);
}

TEST_CASE("mass_properties scale law: volume s^3, COM s") {
  TriMesh base = make_primitive(PrimitiveKind::l_block, {0.06, 0.05, 0.04}, 0);
  auto p1 = mass_properties(base, 1.0);
  double s = 0.7;
  std::vector<Vec3> verts;
  for (const auto& v : base.vertices()) verts.push_back(v * s);
  TriMesh scaled = TriMesh::from_data(verts, base.triangles());
  auto p2 = mass_properties(scaled, 1.0);
  CHECK(p2.volume == doctest::Approx(p1.volume * s * s * s).epsilon(1e-9));
  CHECK(norm(p2.center_of_mass - p1.center_of_mass * s) < 1e-9);
}

TEST_CASE("pose: inverse round trip and distance preservation") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Quat q = Quat::from_axis_angle({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                   rng.uniform(0, 6.28));
    Pose p{q, {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    Vec3 x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Vec3 y{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};

    CHECK(norm(p.inverse().apply(p.apply(x)) - x) < 1e-9);
    CHECK(std::fabs(norm(p.apply(x) - p.apply(y)) - norm(x - y)) < 1e-9);

    // Composition associativity on points.
    Pose r{Quat::from_yaw(rng.uniform(0, 6.28)), {0.1, -0.2, 0.3}};
    Vec3 via1 = (p * r).apply(x);
    Vec3 via2 = p.apply(r.apply(x));
    CHECK(norm(via1 - via2) < 1e-9);
  }
}

TEST_CASE("quaternion norm stays unit under composition") {
  Rng rng(11);
  Quat q;
  for (int i = 0; i < 200; ++i)
    q = (q * Quat::from_axis_angle({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                   rng.uniform(0, 3.0)))
            .normalized();
  CHECK(std::fabs(q.norm() - 1.0) < 1e-6);
}

TEST_SUITE_END();
