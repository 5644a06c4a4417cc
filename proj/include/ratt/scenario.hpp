#pragma once

#include <cstdint>
#include <vector>

#include "ratt/ekf.hpp"
#include "ratt/models.hpp"

namespace ratt {

struct RobotSpec {
  RobotState state;
  std::vector<ControlInput> inputs;  // U_i, non-empty
};

struct TargetSpec {
  TargetState state;    // ground truth, used only by the simulation harness
  TargetBelief belief;  // what the team currently knows
};

// One full problem instance. Planning reads everything except the targets'
// true states; those exist so the harness can sample measurements and score
// estimation error.
struct Scenario {
  std::vector<RobotSpec> robots;
  std::vector<TargetSpec> targets;
  SensorNoiseParams sensor;
  double tau{1.0};      // sampling period [s]
  double arena_w{100.0};
  double arena_h{100.0};
  std::uint64_t seed{0};

  int robot_count() const { return static_cast<int>(robots.size()); }
  int target_count() const { return static_cast<int>(targets.size()); }
};

}  // namespace ratt
