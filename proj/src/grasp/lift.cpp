#include <algorithm>

#include "tgrasp/grasp/pipeline.hpp"

namespace tgrasp::grasp {

LiftResult lift_object(double left_force, double right_force, double mass, const LiftParams& lp) {
  const double fn = std::max(0.0, left_force) + std::max(0.0, right_force);
  const double weight = mass * lp.gravity;
  const double target = lp.lift_target();

  double rise;
  if (lp.mu_s * fn >= weight) {
    // Full stick: the object tracks the gripper for the whole move.
    rise = target;
  } else {
    // Kinetic regime. With mu_k <= mu_s the net acceleration is downward and
    // the object never leaves the table; the a > 0 branch keeps the
    // piecewise integration general.
    double a = (lp.mu_k * fn - weight) / mass;
    if (a <= 0.0) {
      rise = 0.0;
    } else {
      double t_match = lp.speed / a;  // slip ends when speeds match
      if (t_match >= lp.duration)
        rise = 0.5 * a * lp.duration * lp.duration;
      else
        rise = 0.5 * a * t_match * t_match + lp.speed * (lp.duration - t_match);
    }
  }

  LiftResult r;
  r.final_object_rise = std::clamp(rise, 0.0, target);
  r.success = r.final_object_rise >= lp.success_fraction * target;
  return r;
}

}  // namespace tgrasp::grasp
