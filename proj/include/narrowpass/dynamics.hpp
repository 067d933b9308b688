#pragma once

#include "narrowpass/geometry.hpp"

namespace narrowpass {

// Passenger-car constants shared by parked and moving vehicles.
struct VehicleParams {
  double length = 4.5;
  double width = 1.8;
  double wheelbase = 2.7;
  double max_steering = 0.5;    // rad
  double max_acceleration = 3.0;  // m/s^2
};

struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;   // rad, world frame
  double speed = 0.0;     // m/s, >= 0
  double steering = 0.0;  // rad, last applied command
  double acceleration = 0.0;  // m/s^2, last applied command

  Obb footprint(const VehicleParams& p) const {
    return Obb{{x, y}, 0.5 * p.length, 0.5 * p.width, heading};
  }
};

// Kinematic single-track step, forward Euler. Commands saturate at the
// actuator limits; speed clamps at zero (no reverse gear).
VehicleState step_single_track(const VehicleState& s, double steering_cmd, double accel_cmd,
                               double dt, const VehicleParams& p);

struct ControlGains {
  double lateral_k_y = 0.4;      // rad per m of lateral error
  double lateral_k_heading = 2.1;  // heading damping (critical for k_y, wheelbase 2.7)
  double longitudinal_k_v = 1.5;   // (m/s^2) per (m/s) of speed error
};

// Proportional lateral law with heading damping, in the agent's own frame
// (heading_error = deviation from straight-ahead). Saturates at max_steering.
double lateral_control(double lateral_pos, double heading_error, double y_goal,
                       const ControlGains& g, const VehicleParams& p);

// Proportional speed tracking, saturating at +-max_acceleration.
double longitudinal_control(double speed, double v_goal, const ControlGains& g,
                            const VehicleParams& p);

// The three behavior decisions an agent can take.
enum class Behavior { kFollowShared = 0, kPullOver = 1, kHaltShared = 2 };
inline constexpr int kNumBehaviors = 3;

struct BehaviorSetpoint {
  double y_goal = 0.0;  // egocentric lateral target, m
  double v_goal = 0.0;  // m/s
};

inline constexpr double kLaneEgo = 2.1;     // m from the agent's right curb
inline constexpr double kLaneShared = 4.5;  // m from the agent's right curb
inline constexpr double kCruiseSpeed = 8.0;
inline constexpr double kCreepSpeed = 2.0;
inline constexpr double kPullOverStopDistance = 10.0;  // m to next parked car in ego lane

// dist_next_parked_ego_lane: longitudinal distance (own frame, ahead) to the
// nearest parked vehicle on the agent's own curb side; +inf when none.
BehaviorSetpoint behavior_setpoints(Behavior b, double dist_next_parked_ego_lane);

}  // namespace narrowpass
