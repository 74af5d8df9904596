#pragma once

#include <cstdint>
#include <vector>

#include "tgrasp/geom/mesh.hpp"
#include "tgrasp/geom/pose.hpp"

namespace tgrasp::tactile {

using geom::Pose;
using geom::TriMesh;

/// Gel geometry and stiffness. Sensor frame: gel plane at x = 0 with outward
/// normal +x (toward the opposing finger); pixel grid spans y (width) and
/// z (height). Pixels must be square.
struct SensorGeom {
  double gel_width = 0.016;    // meters, along sensor y
  double gel_height = 0.024;   // meters, along sensor z
  double gel_thickness = 0.002;
  int res_w = 40;              // pixels along y
  int res_h = 60;              // pixels along z
  double k_gel = 4e7;          // N per (m displacement * m^2 area)
  double smoothing_sigma_px = 0.0;  // optional Gaussian post-process, off by default

  double pixel_pitch() const { return gel_width / res_w; }
  double pixel_area() const { return pixel_pitch() * pixel_pitch(); }
};

/// Per-pixel gel displacement in meters, row-major (rows along z).
struct TactileFrame {
  int width = 0, height = 0;
  std::vector<float> heightmap;

  float at(int x, int y) const { return heightmap[static_cast<std::size_t>(y) * width + x]; }
  float& at(int x, int y) { return heightmap[static_cast<std::size_t>(y) * width + x]; }

  static TactileFrame zeros(int w, int h) {
    return {w, h, std::vector<float>(static_cast<std::size_t>(w) * h, 0.f)};
  }
};

struct ContactSummary {
  double normal_force = 0.0;  // N
  int contact_pixels = 0;     // d > depth threshold
  double centroid_x = 0.0;    // displacement-weighted, pixel coordinates
  double centroid_y = 0.0;
  double rms_radius_px = 0.0;  // RMS distance of contact pixels from centroid
};

inline constexpr int kDefaultMinPixels = 100;
inline constexpr double kDefaultMinDepth = 0.0001;  // meters

/// Renders the gel displacement map for an object posed in the sensor frame.
/// Per pixel, a ray starts one gel thickness behind the gel plane and travels
/// along +x; displacement is the object's overlap behind the plane, clamped
/// to [0, gel_thickness].
TactileFrame render_tactile(const TriMesh& mesh, const Pose& object_in_sensor,
                            const SensorGeom& sensor);

/// The dual-finger data gate: at least `min_pixels` pixels strictly deeper
/// than `min_depth`.
bool contact_valid(const TactileFrame& frame, int min_pixels = kDefaultMinPixels,
                   double min_depth = kDefaultMinDepth);

/// Linear-spring force model: F = k_gel * sum(d) * pixel_area.
ContactSummary contact_force(const TactileFrame& frame, const SensorGeom& sensor,
                             double min_depth = kDefaultMinDepth);

/// Fig-style export: bright where untouched, dark where deep.
std::vector<std::uint8_t> to_intensity_image(const TactileFrame& frame, const SensorGeom& sensor);

}  // namespace tgrasp::tactile
