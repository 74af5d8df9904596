#include "tgrasp/tactile/sensor.hpp"

#include <algorithm>
#include <cmath>

namespace tgrasp::tactile {

namespace {

void gaussian_blur_inplace(TactileFrame& f, double sigma) {
  int radius = static_cast<int>(std::ceil(3.0 * sigma));
  if (radius < 1) return;
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += kernel[i + radius];
  }
  for (auto& k : kernel) k /= sum;

  auto pass = [&](bool horizontal) {
    TactileFrame tmp = f;
    for (int y = 0; y < f.height; ++y) {
      for (int x = 0; x < f.width; ++x) {
        double acc = 0.0;
        for (int i = -radius; i <= radius; ++i) {
          int xx = horizontal ? std::clamp(x + i, 0, f.width - 1) : x;
          int yy = horizontal ? y : std::clamp(y + i, 0, f.height - 1);
          acc += kernel[i + radius] * tmp.at(xx, yy);
        }
        f.at(x, y) = static_cast<float>(acc);
      }
    }
  };
  pass(true);
  pass(false);
}

}  // namespace

TactileFrame render_tactile(const TriMesh& mesh, const Pose& object_in_sensor,
                            const SensorGeom& sensor) {
  TactileFrame frame = TactileFrame::zeros(sensor.res_w, sensor.res_h);
  Pose object_from_sensor = object_in_sensor.inverse();

  const double pitch = sensor.pixel_pitch();
  for (int py = 0; py < sensor.res_h; ++py) {
    double z = -sensor.gel_height / 2 + (py + 0.5) * pitch;
    for (int px = 0; px < sensor.res_w; ++px) {
      double y = -sensor.gel_width / 2 + (px + 0.5) * pitch;
      geom::Ray ray{{-sensor.gel_thickness, y, z}, {1, 0, 0}};
      if (auto hit = mesh.raycast(ray, object_from_sensor)) {
        // A backface first hit means the ray origin is already inside the
        // object, i.e. penetration beyond the full gel depth.
        double penetration =
            hit->backface ? sensor.gel_thickness : sensor.gel_thickness - hit->t;
        frame.at(px, py) =
            static_cast<float>(std::clamp(penetration, 0.0, sensor.gel_thickness));
      }
    }
  }

  if (sensor.smoothing_sigma_px > 0.0) {
    gaussian_blur_inplace(frame, sensor.smoothing_sigma_px);
    for (auto& d : frame.heightmap)
      d = std::clamp(d, 0.f, static_cast<float>(sensor.gel_thickness));
  }
  return frame;
}

bool contact_valid(const TactileFrame& frame, int min_pixels, double min_depth) {
  int count = 0;
  for (float d : frame.heightmap)
    if (d > min_depth) ++count;
  return count >= min_pixels;
}

ContactSummary contact_force(const TactileFrame& frame, const SensorGeom& sensor,
                             double min_depth) {
  ContactSummary s;
  double sum_d = 0.0, wx = 0.0, wy = 0.0;
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      double d = frame.at(x, y);
      if (d <= 0.0) continue;
      sum_d += d;
      wx += d * x;
      wy += d * y;
      if (d > min_depth) ++s.contact_pixels;
    }
  }
  s.normal_force = sensor.k_gel * sum_d * sensor.pixel_area();
  if (sum_d > 0.0) {
    s.centroid_x = wx / sum_d;
    s.centroid_y = wy / sum_d;
    double r2 = 0.0;
    int n = 0;
    for (int y = 0; y < frame.height; ++y) {
      for (int x = 0; x < frame.width; ++x) {
        if (frame.at(x, y) > min_depth) {
          double dx = x - s.centroid_x, dy = y - s.centroid_y;
          r2 += dx * dx + dy * dy;
          ++n;
        }
      }
    }
    if (n > 0) s.rms_radius_px = std::sqrt(r2 / n);
  }
  return s;
}

std::vector<std::uint8_t> to_intensity_image(const TactileFrame& frame, const SensorGeom& sensor) {
  std::vector<std::uint8_t> img(frame.heightmap.size());
  for (std::size_t i = 0; i < frame.heightmap.size(); ++i) {
    double ratio = frame.heightmap[i] / sensor.gel_thickness;
    int v = 255 - static_cast<int>(std::floor(255.0 * ratio + 0.5));
    img[i] = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
  }
  return img;
}

}  // namespace tgrasp::tactile
