#pragma once

#include <optional>

#include "tgrasp/grasp/gripper.hpp"
#include "tgrasp/scene/scene.hpp"
#include "tgrasp/tactile/sensor.hpp"
#include "tgrasp/util/rng.hpp"

namespace tgrasp::grasp {

using scene::DepthImage;
using scene::SceneConfig;
using scene::SceneState;

/// Discrete yaw grid used for candidate sampling, covering [0, pi).
inline constexpr int kGraspYawAngles = 18;

/// Samples candidate pixels/yaws on the top-down depth image and scores them
/// by antipodality times width fit. Deterministic given the rng state.
/// Throws NoGraspFound when the image has no object pixels or nothing fits.
GraspPose select_grasp(const DepthImage& topdown, const Gripper& gripper, int num_candidates,
                       Rng& rng);

/// Score of one (pixel, yaw index) candidate; nullopt when the candidate is
/// off the object, runs off the window, or does not fit the jaw opening.
std::optional<double> score_grasp_candidate(const DepthImage& topdown, const Gripper& gripper,
                                            int px, int py, int yaw_index);

struct CloseResult {
  tactile::TactileFrame left, right;
  double width = 0.0;
  double left_force = 0.0, right_force = 0.0;
};

/// Pose of a finger's sensor frame in the world for a given jaw width.
scene::Pose finger_pose_in_world(const GraspPose& grasp, double width, bool left);

/// Closes from max_width in close_step decrements until both finger forces
/// reach force_min; throws NoContact if width reaches zero first. Forces are
/// monotone in closing, so the stopping step is located by bisection and is
/// identical to a linear scan.
CloseResult close_gripper(const SceneState& scene, const GraspPose& pose, const Gripper& gripper);

struct LiftResult {
  double final_object_rise = 0.0;
  bool success = false;
};

/// Quasi-static 1-D stick-slip along z: the object tracks the gripper when
/// static friction carries its weight, otherwise kinetic friction either
/// accelerates it up to gripper speed or it never leaves the table.
LiftResult lift_object(double left_force, double right_force, double mass, const LiftParams& lp);

enum class AttemptStatus { ok, no_grasp, no_contact, invalid_tactile };

struct AttemptTelemetry {
  long attempts_total = 0;
  long no_grasp = 0;
  long no_contact = 0;
  long invalid_tactile = 0;
  long saved = 0;

  long discarded() const { return no_grasp + no_contact + invalid_tactile; }
  void merge(const AttemptTelemetry& o) {
    attempts_total += o.attempts_total;
    no_grasp += o.no_grasp;
    no_contact += o.no_contact;
    invalid_tactile += o.invalid_tactile;
    saved += o.saved;
  }
};

struct AttemptResult {
  AttemptStatus status = AttemptStatus::no_grasp;
  // Populated when closing succeeded (status ok or invalid_tactile):
  bool lift_success = false;  // lift outcome ignoring the tactile data gate
  GraspPose pose;
  CloseResult close;
  scene::CameraFrame camera;
  GraspOutcome outcome;
  scene::Pose object_pose;
};

struct AttemptConfig {
  SceneConfig scene;
  Gripper gripper;
  LiftParams lift;
  double density = 500.0;  // kg/m^3
  int min_pixels = tactile::kDefaultMinPixels;     // dual-finger data gate
  double min_depth = tactile::kDefaultMinDepth;
};

/// One full grasp attempt: place, render, select, close, validity gate, lift.
/// Per-attempt failures come back as statuses, not exceptions.
AttemptResult execute_attempt(const geom::TriMesh& mesh, const AttemptConfig& cfg, Rng& rng);
AttemptResult execute_attempt(const geom::TriMesh& mesh, const geom::MassProperties& mass_props,
                              const AttemptConfig& cfg, Rng& rng);

}  // namespace tgrasp::grasp
