#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "narrowpass/dynamics.hpp"
#include "narrowpass/geometry.hpp"
#include "narrowpass/rng.hpp"

namespace narrowpass {

// Difficulty regimes, defined by the parked-vehicle count distribution.
enum class Stage { kA = 0, kB = 1, kC = 2 };

Stage stage_from_string(const std::string& s);
std::string stage_to_string(Stage s);

struct RoadSpec {
  double length = 200.0;
  double width = 9.0;
  double lane_y_ego = 2.1;     // offset of the ego-lane center from an agent's right curb
  double lane_y_shared = 4.5;  // offset of the shared-lane center (the road center)

  double goal_margin = 5.0;  // goal line sits this far from the far road end
};

// Curb side in world frame: kLow is the y=0 curb, kHigh the y=width curb.
enum class Side { kLow = 0, kHigh = 1 };

struct ParkedVehicle {
  Side side = Side::kLow;
  double center_x = 0.0;
  double length = 4.5;
  double width = 1.8;

  Obb footprint(const RoadSpec& road) const {
    const double cy = side == Side::kLow ? 0.5 * width : road.width - 0.5 * width;
    return Obb{{center_x, cy}, 0.5 * length, 0.5 * width, 0.0};
  }
};

struct ScenarioInit {
  RoadSpec road;
  std::vector<ParkedVehicle> parked;
  VehicleState agent_starts[2];  // agent 0 drives +x, agent 1 drives -x
  Stage stage = Stage::kA;
  std::uint64_t seed = 0;
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Longitudinal clearance added around each parked footprint when free gaps
// are enumerated, and the slack a gap needs beyond one car length to count
// as stoppable.
inline constexpr double kGapClearance = 0.25;
inline constexpr double kStoppableGapSlack = 2.0;

struct Gap {
  double start_x = 0.0;
  double end_x = 0.0;
  double length() const { return end_x - start_x; }
};

// Parked-vehicle count per side. Sampling probabilities over {6, 7, 8}:
// stage A (1, 0, 0), stage B (0.8, 0.1, 0.1), stage C (0.5, 0.3, 0.2).
int sample_vehicle_count(Stage stage, Rng& rng);

// Deterministic function of (stage, seed). Rejection-samples parked layouts
// per side until they are overlap-free and leave at least one stoppable gap
// (length >= vehicle length + 2 m); throws GenerationError after 1000
// rejected attempts for a side.
ScenarioInit generate_scenario(Stage stage, std::uint64_t seed);

// Maximal free intervals along one curb, sorted by x: the complement within
// [0, road length] of the parked footprints inflated by `clearance`.
std::vector<Gap> enumerate_gaps(const ScenarioInit& scenario, Side side,
                                double clearance = kGapClearance);

bool has_stoppable_gap(const ScenarioInit& scenario, Side side);

std::string scenario_to_json(const ScenarioInit& scenario);
ScenarioInit scenario_from_json(const std::string& text);

// Test-set container: `count` scenarios generated from sub-seeds of `seed`.
struct TestSet {
  Stage stage = Stage::kB;
  std::uint64_t seed = 0;
  std::vector<ScenarioInit> scenarios;
};

TestSet generate_test_set(Stage stage, int count, std::uint64_t seed);
std::string test_set_to_json(const TestSet& ts);
TestSet test_set_from_json(const std::string& text);
void save_test_set(const TestSet& ts, const std::string& path);
TestSet load_test_set(const std::string& path);

}  // namespace narrowpass
