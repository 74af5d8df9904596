#include <cmath>

#include "tgrasp/grasp/pipeline.hpp"
#include "tgrasp/util/errors.hpp"

namespace tgrasp::grasp {

namespace {

// World-frame contact centroid of a finger's tactile frame.
geom::Vec3 centroid_world(const tactile::ContactSummary& s, const tactile::SensorGeom& pad,
                          const scene::Pose& world_from_sensor) {
  double pitch = pad.pixel_pitch();
  geom::Vec3 local{0.0, -pad.gel_width / 2 + (s.centroid_x + 0.5) * pitch,
                   -pad.gel_height / 2 + (s.centroid_y + 0.5) * pitch};
  return world_from_sensor.apply(local);
}

}  // namespace

AttemptResult execute_attempt(const geom::TriMesh& mesh, const geom::MassProperties& mass_props,
                              const AttemptConfig& cfg, Rng& rng) {
  AttemptResult res;

  SceneState scene;
  scene.mesh = &mesh;
  scene.pose = scene::place_object(mesh, cfg.scene, rng);  // DoesNotFit propagates
  res.object_pose = scene.pose;

  auto topdown = scene::render_topdown_depth(scene, cfg.scene);
  res.camera = scene::render_camera(scene, cfg.scene);

  try {
    res.pose = select_grasp(topdown, cfg.gripper, cfg.gripper.candidates, rng);
  } catch (const NoGraspFound&) {
    res.status = AttemptStatus::no_grasp;
    return res;
  }

  try {
    res.close = close_gripper(scene, res.pose, cfg.gripper);
  } catch (const NoContact&) {
    res.status = AttemptStatus::no_contact;
    return res;
  }

  auto left = tactile::contact_force(res.close.left, cfg.gripper.pad);
  auto right = tactile::contact_force(res.close.right, cfg.gripper.pad);

  LiftResult lift = lift_object(res.close.left_force, res.close.right_force,
                                mass_props.mass, cfg.lift);

  // Rotational gate: an off-center grasp whose gravity torque exceeds what
  // friction over the contact patch can resist fails even if it sticks
  // vertically.
  bool torque_ok = true;
  {
    double fn = res.close.left_force + res.close.right_force;
    double pitch = cfg.gripper.pad.pixel_pitch();
    double r_patch = 0.5 * (left.rms_radius_px + right.rms_radius_px) * pitch;
    r_patch = std::max(r_patch, pitch / 2);
    geom::Vec3 cl = centroid_world(left, cfg.gripper.pad,
                                   finger_pose_in_world(res.pose, res.close.width, true));
    geom::Vec3 cr = centroid_world(right, cfg.gripper.pad,
                                   finger_pose_in_world(res.pose, res.close.width, false));
    geom::Vec3 grip_center = (cl + cr) * 0.5;
    geom::Vec3 com = scene.pose.apply(mass_props.center_of_mass);
    double dx = com.x - grip_center.x, dy = com.y - grip_center.y;
    double offset = std::sqrt(dx * dx + dy * dy);
    if (offset * mass_props.mass * cfg.lift.gravity > cfg.lift.mu_s * fn * r_patch)
      torque_ok = false;
  }

  res.lift_success = lift.success && torque_ok;

  bool valid = tactile::contact_valid(res.close.left, cfg.min_pixels, cfg.min_depth) &&
               tactile::contact_valid(res.close.right, cfg.min_pixels, cfg.min_depth);

  res.outcome.valid = valid;
  res.outcome.success = res.lift_success && valid;
  res.outcome.left_force = res.close.left_force;
  res.outcome.right_force = res.close.right_force;
  res.outcome.lift_target = cfg.lift.lift_target();
  res.outcome.final_object_rise = torque_ok ? lift.final_object_rise : 0.0;

  res.status = valid ? AttemptStatus::ok : AttemptStatus::invalid_tactile;
  return res;
}

AttemptResult execute_attempt(const geom::TriMesh& mesh, const AttemptConfig& cfg, Rng& rng) {
  return execute_attempt(mesh, geom::mass_properties(mesh, cfg.density), cfg, rng);
}

}  // namespace tgrasp::grasp
