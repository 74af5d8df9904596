#pragma once

#include "tgrasp/tactile/sensor.hpp"

namespace tgrasp::grasp {

/// Parallel-jaw gripper. Closing axis is +x in the gripper frame, approach
/// is top-down (-z). Both finger pads carry the same sensor.
struct Gripper {
  double max_width = 0.085;     // meters
  double close_step = 0.0002;   // meters per closing step
  double force_min = 2.0;       // N, per-finger stop threshold
  int candidates = 64;          // grasp candidates sampled per selection
  tactile::SensorGeom pad;
};

struct GraspPose {
  double x = 0.0, y = 0.0;  // meters, workspace coordinates
  double z = 0.0;           // pad center height
  double yaw = 0.0;         // radians about +z
};

struct LiftParams {
  double speed = 0.1;             // m/s
  double duration = 1.5;          // s
  double mu_s = 0.6;
  double mu_k = 0.5;
  double gravity = 9.81;
  double success_fraction = 0.8;

  double lift_target() const { return speed * duration; }
};

struct GraspOutcome {
  bool success = false;  // implies valid
  bool valid = false;    // both tactile frames passed the data gate
  double left_force = 0.0, right_force = 0.0;
  double final_object_rise = 0.0;
  double lift_target = 0.0;
};

}  // namespace tgrasp::grasp
