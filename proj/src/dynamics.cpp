#include "narrowpass/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace narrowpass {

VehicleState step_single_track(const VehicleState& s, double steering_cmd, double accel_cmd,
                               double dt, const VehicleParams& p) {
  const double steering = std::clamp(steering_cmd, -p.max_steering, p.max_steering);
  const double accel = std::clamp(accel_cmd, -p.max_acceleration, p.max_acceleration);

  VehicleState out = s;
  // Position and heading integrate with the pre-step speed.
  out.x = s.x + s.speed * std::cos(s.heading) * dt;
  out.y = s.y + s.speed * std::sin(s.heading) * dt;
  out.heading = s.heading + s.speed * std::tan(steering) / p.wheelbase * dt;
  out.speed = std::max(0.0, s.speed + accel * dt);
  out.steering = steering;
  out.acceleration = accel;
  return out;
}

double lateral_control(double lateral_pos, double heading_error, double y_goal,
                       const ControlGains& g, const VehicleParams& p) {
  const double cmd = g.lateral_k_y * (y_goal - lateral_pos) - g.lateral_k_heading * heading_error;
  return std::clamp(cmd, -p.max_steering, p.max_steering);
}

double longitudinal_control(double speed, double v_goal, const ControlGains& g,
                            const VehicleParams& p) {
  const double cmd = g.longitudinal_k_v * (v_goal - speed);
  return std::clamp(cmd, -p.max_acceleration, p.max_acceleration);
}

BehaviorSetpoint behavior_setpoints(Behavior b, double dist_next_parked_ego_lane) {
  switch (b) {
    case Behavior::kFollowShared:
      return {kLaneShared, kCruiseSpeed};
    case Behavior::kHaltShared:
      return {kLaneShared, 0.0};
    case Behavior::kPullOver:
      return {kLaneEgo,
              dist_next_parked_ego_lane < kPullOverStopDistance ? 0.0 : kCreepSpeed};
  }
  return {kLaneShared, 0.0};
}

}  // namespace narrowpass
