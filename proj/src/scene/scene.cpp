#include "tgrasp/scene/scene.hpp"

#include <algorithm>
#include <cmath>

#include "tgrasp/util/errors.hpp"
#include "tgrasp/util/image_io.hpp"

namespace tgrasp::scene {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr std::uint8_t kTableGrey = 100;
constexpr std::uint8_t kBackgroundGrey = 30;
constexpr double kAmbient = 0.2;
constexpr double kDiffuse = 0.8;

std::uint8_t shade_from_normal(const Vec3& n, const Vec3& light) {
  double s = kAmbient + kDiffuse * std::max(0.0, dot(n, light));
  int v = static_cast<int>(std::floor(255.0 * s + 0.5));
  return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}
}  // namespace

Pose SceneConfig::side_camera_pose(double distance, double elevation_deg, double azimuth_deg) {
  double el = elevation_deg * kPi / 180.0;
  double az = azimuth_deg * kPi / 180.0;
  Vec3 eye{distance * std::cos(el) * std::cos(az), distance * std::cos(el) * std::sin(az),
           distance * std::sin(el)};
  Vec3 forward = normalized(Vec3{0, 0, 0} - eye);
  Vec3 up{0, 0, 1};
  Vec3 right = normalized(cross(forward, up));
  Vec3 down = cross(forward, right);

  // Columns (right, down, forward) as a rotation, converted to a quaternion.
  double m[3][3] = {{right.x, down.x, forward.x},
                    {right.y, down.y, forward.y},
                    {right.z, down.z, forward.z}};
  double tr = m[0][0] + m[1][1] + m[2][2];
  geom::Quat q;
  if (tr > 0) {
    double s = std::sqrt(tr + 1.0) * 2;
    q.w = 0.25 * s;
    q.x = (m[2][1] - m[1][2]) / s;
    q.y = (m[0][2] - m[2][0]) / s;
    q.z = (m[1][0] - m[0][1]) / s;
  } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
    double s = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]) * 2;
    q.w = (m[2][1] - m[1][2]) / s;
    q.x = 0.25 * s;
    q.y = (m[0][1] + m[1][0]) / s;
    q.z = (m[0][2] + m[2][0]) / s;
  } else if (m[1][1] > m[2][2]) {
    double s = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]) * 2;
    q.w = (m[0][2] - m[2][0]) / s;
    q.x = (m[0][1] + m[1][0]) / s;
    q.y = 0.25 * s;
    q.z = (m[1][2] + m[2][1]) / s;
  } else {
    double s = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]) * 2;
    q.w = (m[1][0] - m[0][1]) / s;
    q.x = (m[0][2] + m[2][0]) / s;
    q.y = (m[1][2] + m[2][1]) / s;
    q.z = 0.25 * s;
  }
  return Pose{q.normalized(), eye};
}

Pose place_object(const TriMesh& mesh, const SceneConfig& cfg, Rng& rng) {
  double yaw = rng.uniform(0.0, 2.0 * kPi);
  geom::Quat q = geom::Quat::from_yaw(yaw);

  geom::Aabb box;
  for (const auto& v : mesh.vertices()) box.expand(q.rotate(v));

  double half_x = cfg.workspace_x / 2, half_y = cfg.workspace_y / 2;
  double lo_x = -half_x - box.lo.x, hi_x = half_x - box.hi.x;
  double lo_y = -half_y - box.lo.y, hi_y = half_y - box.hi.y;
  if (lo_x > hi_x || lo_y > hi_y) throw DoesNotFit("object footprint exceeds workspace");

  Vec3 t{rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y), -box.lo.z};
  return Pose{q, t};
}

CameraFrame render_camera(const SceneState& scene, const SceneConfig& cfg) {
  const auto& cam = cfg.camera;
  CameraFrame frame;
  frame.width = cam.width;
  frame.height = cam.height;
  frame.rgb.assign(static_cast<std::size_t>(cam.width) * cam.height * 3, 0);
  frame.depth.assign(static_cast<std::size_t>(cam.width) * cam.height, 0.f);

  double f = (cam.height / 2.0) / std::tan(cam.vfov_deg * kPi / 180.0 / 2.0);
  Vec3 light = normalized(cfg.light_direction);
  Pose object_from_world = scene.mesh ? scene.pose.inverse() : Pose::identity();

  for (int v = 0; v < cam.height; ++v) {
    for (int u = 0; u < cam.width; ++u) {
      Vec3 dir_cam{(u + 0.5 - cam.width / 2.0) / f, (v + 0.5 - cam.height / 2.0) / f, 1.0};
      geom::Ray ray{cfg.camera_pose.t, normalized(cfg.camera_pose.rotate(dir_cam))};

      double depth = cfg.far_plane;
      bool object_hit = false;
      std::uint8_t grey;

      if (scene.mesh) {
        if (auto hit = scene.mesh->raycast(ray, object_from_world);
            hit && hit->t <= cfg.far_plane) {
          depth = hit->t;
          object_hit = true;
          grey = shade_from_normal(hit->normal, light);
        }
      }
      if (!object_hit) {
        // Table plane z = 0 is a flat-grey backdrop, not depth geometry.
        double t = std::fabs(ray.dir.z) > 1e-12 ? -ray.origin.z / ray.dir.z : -1.0;
        grey = t > geom::kRayTMin ? kTableGrey : kBackgroundGrey;
      }

      std::size_t idx = static_cast<std::size_t>(v) * cam.width + u;
      frame.depth[idx] = static_cast<float>(depth);
      frame.rgb[idx * 3 + 0] = grey;
      frame.rgb[idx * 3 + 1] = grey;
      frame.rgb[idx * 3 + 2] = grey;
    }
  }
  return frame;
}

DepthImage render_topdown_depth(const SceneState& scene, const SceneConfig& cfg) {
  DepthImage img;
  img.width = cfg.topdown_res;
  img.height = cfg.topdown_res;
  img.h0 = cfg.topdown_h0;
  img.window_x = cfg.topdown_window_x;
  img.window_y = cfg.topdown_window_y;
  img.values.assign(static_cast<std::size_t>(img.width) * img.height,
                    static_cast<float>(cfg.topdown_h0));

  if (!scene.mesh) return img;
  Pose object_from_world = scene.pose.inverse();

  for (int py = 0; py < img.height; ++py) {
    for (int px = 0; px < img.width; ++px) {
      double x = -img.window_x / 2 + (px + 0.5) * img.pixel_pitch_x();
      double y = -img.window_y / 2 + (py + 0.5) * img.pixel_pitch_y();
      geom::Ray ray{{x, y, cfg.topdown_h0}, {0, 0, -1}};
      if (auto hit = scene.mesh->raycast(ray, object_from_world)) {
        double top_z = cfg.topdown_h0 - hit->t;
        img.values[static_cast<std::size_t>(py) * img.width + px] =
            static_cast<float>(cfg.topdown_h0 - top_z);
      }
    }
  }
  return img;
}

void write_camera_ppm(const std::string& path, const CameraFrame& frame,
                      const std::string& comment) {
  write_ppm(path, frame.width, frame.height, frame.rgb, comment);
}

void write_depth_pgm16(const std::string& path, const std::vector<float>& depth, int w, int h,
                       double scale_max, const std::string& comment) {
  std::vector<std::uint16_t> px(depth.size());
  for (std::size_t i = 0; i < depth.size(); ++i) {
    double v = std::clamp(depth[i] / scale_max, 0.0, 1.0);
    px[i] = static_cast<std::uint16_t>(std::lround(v * 65535.0));
  }
  write_pgm16(path, w, h, px, comment);
}

}  // namespace tgrasp::scene
