#pragma once

#include <cmath>

#include "tgrasp/geom/vec3.hpp"

namespace tgrasp::geom {

/// Unit quaternion, scalar-first.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  Quat conjugate() const { return {w, -x, -y, -z}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  Vec3 rotate(const Vec3& v) const {
    // q v q* via the expanded cross-product form
    Vec3 u{x, y, z};
    Vec3 t = cross(u, v) * 2.0;
    return v + t * w + cross(u, t);
  }

  static Quat from_axis_angle(const Vec3& axis, double angle) {
    Vec3 a = tgrasp::geom::normalized(axis);
    double h = 0.5 * angle;
    double s = std::sin(h);
    return {std::cos(h), a.x * s, a.y * s, a.z * s};
  }

  static Quat from_yaw(double yaw) { return from_axis_angle({0, 0, 1}, yaw); }
};

/// Rigid transform: apply(p) = R p + t.
struct Pose {
  Quat q;
  Vec3 t;

  Vec3 apply(const Vec3& p) const { return q.rotate(p) + t; }
  Vec3 rotate(const Vec3& v) const { return q.rotate(v); }

  Pose operator*(const Pose& o) const { return {(q * o.q).normalized(), q.rotate(o.t) + t}; }

  Pose inverse() const {
    Quat qi = q.conjugate();
    return {qi, qi.rotate(t) * -1.0};
  }

  static Pose identity() { return {}; }
};

}  // namespace tgrasp::geom
