#include <algorithm>
#include <cmath>

#include "tgrasp/grasp/pipeline.hpp"
#include "tgrasp/util/errors.hpp"

namespace tgrasp::grasp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

scene::Pose finger_pose_in_world(const GraspPose& grasp, double width, bool left) {
  using geom::Quat;
  scene::Pose world_from_gripper{Quat::from_yaw(grasp.yaw), {grasp.x, grasp.y, grasp.z}};
  // Gel planes face each other across the closing axis; the right finger is
  // yawed pi about z so its outward normal points back toward the left.
  scene::Pose gripper_from_sensor =
      left ? scene::Pose{Quat{}, {-width / 2, 0, 0}}
           : scene::Pose{Quat::from_yaw(kPi), {width / 2, 0, 0}};
  return world_from_gripper * gripper_from_sensor;
}

namespace {

struct StepState {
  tactile::TactileFrame left, right;
  double left_force = 0.0, right_force = 0.0;
  double min_force() const { return std::min(left_force, right_force); }
};

StepState evaluate_width(const SceneState& scene, const GraspPose& grasp, const Gripper& gripper,
                         double width) {
  StepState s;
  for (bool is_left : {true, false}) {
    scene::Pose world_from_sensor = finger_pose_in_world(grasp, width, is_left);
    scene::Pose object_in_sensor = world_from_sensor.inverse() * scene.pose;
    auto frame = tactile::render_tactile(*scene.mesh, object_in_sensor, gripper.pad);
    auto summary = tactile::contact_force(frame, gripper.pad);
    if (is_left) {
      s.left = std::move(frame);
      s.left_force = summary.normal_force;
    } else {
      s.right = std::move(frame);
      s.right_force = summary.normal_force;
    }
  }
  return s;
}

}  // namespace

CloseResult close_gripper(const SceneState& scene, const GraspPose& grasp,
                          const Gripper& gripper) {
  const double step = gripper.close_step;
  const int last = static_cast<int>(std::ceil(gripper.max_width / step));
  auto width_at = [&](int k) { return std::max(0.0, gripper.max_width - k * step); };

  // Per-pixel penetration grows monotonically as the jaws advance, so force
  // is non-decreasing in the step index and the first step reaching the
  // threshold can be found by bisection; the result equals a linear scan.
  StepState at_last = evaluate_width(scene, grasp, gripper, width_at(last));
  if (at_last.min_force() < gripper.force_min)
    throw NoContact("force threshold unreachable, gripper fully closed");

  int lo = 0, hi = last;  // predicate false at lo (unless it holds at 0), true at hi
  StepState at_zero = evaluate_width(scene, grasp, gripper, width_at(0));
  StepState result;
  if (at_zero.min_force() >= gripper.force_min) {
    result = std::move(at_zero);
    hi = 0;
  } else {
    StepState at_hi = std::move(at_last);
    while (hi - lo > 1) {
      int mid = lo + (hi - lo) / 2;
      StepState s = evaluate_width(scene, grasp, gripper, width_at(mid));
      if (s.min_force() >= gripper.force_min) {
        hi = mid;
        at_hi = std::move(s);
      } else {
        lo = mid;
      }
    }
    result = std::move(at_hi);
  }

  CloseResult out;
  out.left = std::move(result.left);
  out.right = std::move(result.right);
  out.left_force = result.left_force;
  out.right_force = result.right_force;
  out.width = width_at(hi);
  return out;
}

}  // namespace tgrasp::grasp
