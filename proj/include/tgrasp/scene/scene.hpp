#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgrasp/geom/mesh.hpp"
#include "tgrasp/geom/pose.hpp"
#include "tgrasp/util/rng.hpp"

namespace tgrasp::scene {

using geom::Pose;
using geom::TriMesh;
using geom::Vec3;

struct CameraIntrinsics {
  int width = 64;
  int height = 64;
  double vfov_deg = 60.0;
};

struct SceneConfig {
  // Axis-aligned workspace rectangle on the table plane z = 0, centered at origin.
  double workspace_x = 0.30;
  double workspace_y = 0.30;

  CameraIntrinsics camera;
  Pose camera_pose;  // camera-to-world; +z forward, +x right, +y image-down
  double far_plane = 2.0;

  int topdown_res = 96;
  double topdown_h0 = 0.5;  // ortho plane height H0
  // Ortho window defaults to the workspace rectangle.
  double topdown_window_x = 0.30;
  double topdown_window_y = 0.30;

  Vec3 light_direction{-0.3, 0.2, 0.9};  // normalized at use

  std::uint64_t rng_seed = 0;

  /// Look-at helper matching the default rig: camera at `distance` from the
  /// workspace center, `elevation_deg` above the table, azimuth about +z.
  static Pose side_camera_pose(double distance, double elevation_deg, double azimuth_deg);
};

struct SceneState {
  std::string object_id;
  const TriMesh* mesh = nullptr;
  Pose pose;  // object-to-world
};

struct CameraFrame {
  int width = 0, height = 0;
  std::vector<std::uint8_t> rgb;  // W*H*3, grey (R=G=B) for untextured objects
  std::vector<float> depth;       // W*H, meters along the ray, far when no hit
};

struct DepthImage {
  int width = 0, height = 0;
  std::vector<float> values;  // meters below the ortho plane; background = H0
  double h0 = 0.0;
  double window_x = 0.0, window_y = 0.0;  // metric extent

  double pixel_pitch_x() const { return window_x / width; }
  double pixel_pitch_y() const { return window_y / height; }
  float at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

/// Uniform x,y over the workspace (shrunk by the yawed footprint so the
/// object stays inside), uniform yaw, z such that the lowest vertex rests on
/// the table. Throws DoesNotFit when the footprint exceeds the workspace.
Pose place_object(const TriMesh& mesh, const SceneConfig& cfg, Rng& rng);

/// Primary-ray render: depth is distance along the ray; grey shade is
/// ambient 0.2 + 0.8*max(0, n.l) quantized round-half-up. Table grey 100,
/// background grey 30.
CameraFrame render_camera(const SceneState& scene, const SceneConfig& cfg);

/// Orthographic top-down depth from height H0 looking along -z; pixel value
/// is H0 minus the top-surface height (table reads exactly H0).
DepthImage render_topdown_depth(const SceneState& scene, const SceneConfig& cfg);

void write_camera_ppm(const std::string& path, const CameraFrame& frame,
                      const std::string& comment = "");
void write_depth_pgm16(const std::string& path, const std::vector<float>& depth, int w, int h,
                       double scale_max, const std::string& comment = "");

}  // namespace tgrasp::scene
