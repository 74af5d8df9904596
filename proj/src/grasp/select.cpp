#include <cmath>
#include <vector>

#include "tgrasp/grasp/pipeline.hpp"
#include "tgrasp/util/errors.hpp"

namespace tgrasp::grasp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kObjectHeightEps = 1e-6;

struct Mask {
  int w = 0, h = 0;
  std::vector<std::uint8_t> on;
  bool at(int x, int y) const {
    if (x < 0 || y < 0 || x >= w || y >= h) return false;
    return on[static_cast<std::size_t>(y) * w + x] != 0;
  }
};

Mask object_mask(const DepthImage& img) {
  Mask m{img.width, img.height, {}};
  m.on.resize(static_cast<std::size_t>(img.width) * img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      m.on[static_cast<std::size_t>(y) * img.width + x] =
          img.at(x, y) < img.h0 - kObjectHeightEps ? 1 : 0;
  return m;
}

// 2-D outward normal at a boundary-adjacent object pixel, estimated from the
// background pixels in a 7x7 window; falls back to the march direction when
// the window is all object.
void boundary_normal(const Mask& m, int bx, int by, double fx, double fy, double& nx, double& ny) {
  double sx = 0.0, sy = 0.0;
  for (int dy = -3; dy <= 3; ++dy) {
    for (int dx = -3; dx <= 3; ++dx) {
      if (!m.at(bx + dx, by + dy)) {
        sx += dx;
        sy += dy;
      }
    }
  }
  double n = std::sqrt(sx * sx + sy * sy);
  if (n < 1e-9) {
    nx = fx;
    ny = fy;
    return;
  }
  nx = sx / n;
  ny = sy / n;
}

struct Boundary {
  bool found = false;          // left the object inside the image
  double dist_px = 0.0;        // candidate center to boundary
  int last_x = 0, last_y = 0;  // last object pixel before leaving
};

Boundary march(const Mask& m, double cx, double cy, double dx, double dy) {
  Boundary b;
  const double step = 0.5;
  double prev_t = 0.0;
  int last_x = static_cast<int>(cx), last_y = static_cast<int>(cy);
  for (double t = step; t < 4.0 * std::max(m.w, m.h); t += step) {
    double x = cx + dx * t, y = cy + dy * t;
    int px = static_cast<int>(std::floor(x)), py = static_cast<int>(std::floor(y));
    if (px < 0 || py < 0 || px >= m.w || py >= m.h) return b;  // ran off the window
    if (!m.at(px, py)) {
      b.found = true;
      b.dist_px = 0.5 * (prev_t + t);
      b.last_x = last_x;
      b.last_y = last_y;
      return b;
    }
    last_x = px;
    last_y = py;
    prev_t = t;
  }
  return b;
}

std::optional<double> score_candidate(const Mask& mask, const DepthImage& topdown,
                                      const Gripper& gripper, int px, int py, int yaw_idx) {
  double yaw = kPi * yaw_idx / kGraspYawAngles;
  double ax = std::cos(yaw), ay = std::sin(yaw);  // closing axis; image axes == world axes

  double cx = px + 0.5, cy = py + 0.5;
  Boundary plus = march(mask, cx, cy, ax, ay);
  Boundary minus = march(mask, cx, cy, -ax, -ay);
  if (!plus.found || !minus.found) return std::nullopt;

  double width = (plus.dist_px + minus.dist_px) * topdown.pixel_pitch_x();
  if (width >= gripper.max_width) return std::nullopt;  // does not fit
  double width_fit = 1.0 - width / gripper.max_width;

  double nlx, nly, nrx, nry;
  boundary_normal(mask, minus.last_x, minus.last_y, -ax, -ay, nlx, nly);
  boundary_normal(mask, plus.last_x, plus.last_y, ax, ay, nrx, nry);
  double antipodality = 0.5 * (-(nlx * ax + nly * ay) + (nrx * ax + nry * ay));

  return antipodality * width_fit;
}

}  // namespace

std::optional<double> score_grasp_candidate(const DepthImage& topdown, const Gripper& gripper,
                                            int px, int py, int yaw_index) {
  Mask mask = object_mask(topdown);
  if (!mask.at(px, py)) return std::nullopt;
  return score_candidate(mask, topdown, gripper, px, py, yaw_index);
}

GraspPose select_grasp(const DepthImage& topdown, const Gripper& gripper, int num_candidates,
                       Rng& rng) {
  Mask mask = object_mask(topdown);

  std::vector<int> object_pixels;
  for (int i = 0; i < mask.w * mask.h; ++i)
    if (mask.on[i]) object_pixels.push_back(i);
  if (object_pixels.empty()) throw NoGraspFound("no object pixels in depth image");

  double best_score = 0.0;
  bool have_best = false;
  GraspPose best;

  for (int c = 0; c < num_candidates; ++c) {
    int pix = object_pixels[rng.uniform_int(object_pixels.size())];
    int yaw_idx = static_cast<int>(rng.uniform_int(kGraspYawAngles));
    int px = pix % mask.w, py = pix / mask.w;

    auto score = score_candidate(mask, topdown, gripper, px, py, yaw_idx);
    if (!score) continue;

    // Argmax; ties keep the earlier candidate.
    if (!have_best || *score > best_score) {
      have_best = true;
      best_score = *score;
      double top_z = topdown.h0 - topdown.at(px, py);
      double half_pad = gripper.pad.gel_height / 2;
      best.x = -topdown.window_x / 2 + (px + 0.5) * topdown.pixel_pitch_x();
      best.y = -topdown.window_y / 2 + (py + 0.5) * topdown.pixel_pitch_y();
      best.z = std::max(top_z - half_pad, half_pad);
      best.yaw = kPi * yaw_idx / kGraspYawAngles;
    }
  }

  if (!have_best) throw NoGraspFound("no fitting grasp candidate");
  return best;
}

}  // namespace tgrasp::grasp
