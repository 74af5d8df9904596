#include <cmath>

#include "doctest.h"
#include "tgrasp/tactile/sensor.hpp"
#include "tgrasp/util/rng.hpp"

using namespace tgrasp;
using namespace tgrasp::tactile;
using geom::Pose;
using geom::Quat;
using geom::Vec3;

namespace {

SensorGeom default_sensor() { return SensorGeom{}; }

// Box posed so its -x face sits at sensor-frame x = -depth (pressed `depth`
// into the gel plane), covering the whole pixel grid.
Pose pressed_box_pose(double half_x, double depth) {
  return Pose{Quat{}, {half_x - depth, 0.0, 0.0}};
}

}  // namespace

TEST_SUITE_BEGIN("tactile");

TEST_CASE("render_tactile: no touching means all zeros") {
  auto box = geom::make_primitive(geom::PrimitiveKind::box, {0.02, 0.05, 0.05}, 0);
  SensorGeom s = default_sensor();
  // Face 1 mm in front of the gel plane.
  auto frame = render_tactile(box, Pose{Quat{}, {0.011, 0, 0}}, s);
  for (float d : frame.heightmap) CHECK(d == 0.f);
}

TEST_CASE("render_tactile: parallel plane pressed 0.5 mm is uniform") {
  auto box = geom::make_primitive(geom::PrimitiveKind::box, {0.02, 0.05, 0.08}, 0);
  SensorGeom s = default_sensor();
  auto frame = render_tactile(box, pressed_box_pose(0.01, 0.0005), s);
  for (float d : frame.heightmap) CHECK(std::fabs(d - 0.0005) < 1e-9);
}

TEST_CASE("render_tactile: sphere indentation patch radius is analytic") {
  const double r = 0.010, depth = 0.0005;
  auto sphere = geom::make_primitive(geom::PrimitiveKind::sphere, {r}, 128);
  SensorGeom s = default_sensor();
  // Sphere center on the gel axis, surface reaching x = -depth.
  auto frame = render_tactile(sphere, Pose{Quat{}, {r - depth, 0, 0}}, s);

  int contact = 0;
  for (float d : frame.heightmap)
    if (d > 0.f) ++contact;
  double analytic = std::sqrt(2 * r * depth - depth * depth);
  double measured = std::sqrt(contact * s.pixel_area() / M_PI);
  CHECK(std::fabs(measured - analytic) < s.pixel_pitch());

  // Peak displacement at the center pixel approaches the commanded depth.
  float peak = 0.f;
  for (float d : frame.heightmap) peak = std::max(peak, d);
  CHECK(peak <= depth + 1e-6);
  CHECK(peak > depth * 0.8);
}

TEST_CASE("contact_valid: paper thresholds are boundary-exact") {
  SensorGeom s = default_sensor();
  auto frame = TactileFrame::zeros(s.res_w, s.res_h);

  for (int i = 0; i < 100; ++i) frame.heightmap[i] = 0.0002f;
  CHECK(contact_valid(frame));  // exactly 100 deep pixels

  frame.heightmap[99] = 0.f;
  CHECK_FALSE(contact_valid(frame));  // 99 pixels

  auto shallow = TactileFrame::zeros(s.res_w, s.res_h);
  for (int i = 0; i < 500; ++i) shallow.heightmap[i] = 0.00009f;
  CHECK_FALSE(contact_valid(shallow));  // all below the depth threshold
}

TEST_CASE("contact_valid: monotone in both thresholds") {
  SensorGeom s = default_sensor();
  Rng rng(5);
  auto frame = TactileFrame::zeros(s.res_w, s.res_h);
  for (auto& d : frame.heightmap)
    if (rng.uniform() < 0.3) d = static_cast<float>(rng.uniform(0.0, 0.002));

  for (int mp : {10, 50, 100, 200}) {
    for (double md : {0.00005, 0.0001, 0.0005}) {
      bool v = contact_valid(frame, mp, md);
      // Raising either threshold can only turn true into false.
      if (!v) {
        CHECK_FALSE(contact_valid(frame, mp + 50, md));
        CHECK_FALSE(contact_valid(frame, mp, md * 2));
      }
      if (contact_valid(frame, mp + 50, md)) CHECK(v);
      if (contact_valid(frame, mp, md * 2)) CHECK(v);
    }
  }
}

TEST_CASE("contact_force: zero frame and uniform closed form") {
  SensorGeom s = default_sensor();
  auto zero = TactileFrame::zeros(s.res_w, s.res_h);
  auto cs = contact_force(zero, s);
  CHECK(cs.normal_force == 0.0);
  CHECK(cs.contact_pixels == 0);

  auto uniform = TactileFrame::zeros(s.res_w, s.res_h);
  const float d = 0.001f;
  for (auto& v : uniform.heightmap) v = d;
  auto cu = contact_force(uniform, s);
  double closed_form = s.k_gel * static_cast<double>(d) * s.gel_width * s.gel_height;
  CHECK(cu.normal_force == doctest::Approx(closed_form).epsilon(1e-9));
  CHECK(cu.contact_pixels == s.res_w * s.res_h);
}

TEST_CASE("contact_force: random frame matches direct-sum oracle") {
  SensorGeom s = default_sensor();
  Rng rng(17);
  auto frame = TactileFrame::zeros(s.res_w, s.res_h);
  for (auto& d : frame.heightmap)
    if (rng.uniform() < 0.5) d = static_cast<float>(rng.uniform(0.0, s.gel_thickness));

  // Independent summation in a different traversal order.
  double sum = 0.0;
  for (int x = 0; x < s.res_w; ++x)
    for (int y = s.res_h - 1; y >= 0; --y) sum += frame.at(x, y);
  double expect = s.k_gel * sum * s.pixel_area();

  auto cs = contact_force(frame, s);
  CHECK(cs.normal_force == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("to_intensity_image: stated rounding") {
  SensorGeom s = default_sensor();
  auto frame = TactileFrame::zeros(s.res_w, s.res_h);
  frame.heightmap[0] = 0.f;
  frame.heightmap[1] = static_cast<float>(s.gel_thickness);
  frame.heightmap[2] = static_cast<float>(s.gel_thickness / 2);
  auto img = to_intensity_image(frame, s);
  CHECK(img[0] == 255);
  CHECK(img[1] == 0);
  CHECK(img[2] == 127);  // 255 - round_half_up(127.5)
}

TEST_CASE("monotonicity: deepening a pixel never lowers force or count") {
  SensorGeom s = default_sensor();
  Rng rng(23);
  auto frame = TactileFrame::zeros(s.res_w, s.res_h);
  for (auto& d : frame.heightmap)
    if (rng.uniform() < 0.2) d = static_cast<float>(rng.uniform(0.0, 0.001));
  auto before = contact_force(frame, s);

  for (int trial = 0; trial < 200; ++trial) {
    std::size_t i = rng.uniform_int(frame.heightmap.size());
    auto deeper = frame;
    deeper.heightmap[i] =
        std::min<float>(static_cast<float>(s.gel_thickness),
                        deeper.heightmap[i] + static_cast<float>(rng.uniform(0.0, 0.001)));
    auto after = contact_force(deeper, s);
    CHECK(after.normal_force >= before.normal_force);
    CHECK(after.contact_pixels >= before.contact_pixels);
  }
}

TEST_CASE("translation parallel to gel shifts the heightmap") {
  // Edges deliberately off the pixel grid so boundary pixels cannot flip.
  auto box = geom::make_primitive(geom::PrimitiveKind::box, {0.02, 0.0061, 0.0061}, 0);
  SensorGeom s = default_sensor();
  const double pitch = s.pixel_pitch();

  auto f0 = render_tactile(box, Pose{Quat{}, {0.01 - 0.0008, 0, 0}}, s);
  auto f1 = render_tactile(box, Pose{Quat{}, {0.01 - 0.0008, 3 * pitch, 2 * pitch}}, s);

  int mismatches = 0;
  for (int y = 0; y < s.res_h; ++y) {
    for (int x = 0; x < s.res_w; ++x) {
      int sx = x - 3, sy = y - 2;  // +y is +pixel-x, +z is +pixel-y
      if (sx < 0 || sy < 0 || sx >= s.res_w || sy >= s.res_h) continue;
      if (std::fabs(f1.at(x, y) - f0.at(sx, sy)) > 1e-9) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("heightmap never exceeds gel thickness, even crushed") {
  auto box = geom::make_primitive(geom::PrimitiveKind::box, {0.02, 0.05, 0.08}, 0);
  SensorGeom s = default_sensor();
  for (double depth : {0.0005, 0.0019, 0.002, 0.0025, 0.01}) {
    auto frame = render_tactile(box, pressed_box_pose(0.01, depth), s);
    float peak = 0.f, low = 1e9f;
    for (float d : frame.heightmap) {
      peak = std::max(peak, d);
      low = std::min(low, d);
    }
    CHECK(peak <= static_cast<float>(s.gel_thickness));
    if (depth >= s.gel_thickness) {
      // Saturated: crush reads full thickness everywhere, never wraps to zero.
      CHECK(low == static_cast<float>(s.gel_thickness));
    }
  }
}

TEST_SUITE_END();
