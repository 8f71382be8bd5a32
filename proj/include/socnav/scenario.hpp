// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_SCENARIO_HPP_
#define SOCNAV_SCENARIO_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "socnav/geometry.hpp"
#include "socnav/planner.hpp"

namespace socnav {

enum class SpawnRule { kCircleCrossing, kRandom };
enum class HumanPolicy { kConstantVelocityWaypoint, kSocialForceLite };

/// Everything needed to reproduce an episode. The arena is centred on the
/// origin. Timing (dt, T_max) and the proxemic knobs live in
/// `planner.compliance` so that the planner and the simulator share one copy.
struct ScenarioConfig {
  int n_humans = 5;
  double arena_width = 12.0;
  double arena_height = 12.0;
  Vec2d robot_start = Vec2d(0.0, -4.0);
  Vec2d robot_goal = Vec2d(0.0, 4.0);
  SpawnRule spawn_rule = SpawnRule::kCircleCrossing;
  HumanPolicy human_policy = HumanPolicy::kConstantVelocityWaypoint;
  std::uint64_t seed = 0;
  double goal_radius = 0.3;
  double robot_radius = 0.3;
  double human_radius = 0.3;
  double circle_radius = 4.0;
  double human_speed = 1.0;
  std::map<std::string, double> activity_weights = default_activity_weights();
  int activity_switch_interval = 0;  // ticks between activity redraws; 0 = static
  std::string task_label = "reach the destination";
  PlannerConfig planner;

  static std::map<std::string, double> default_activity_weights();

  double dt() const { return planner.compliance.dt; }
  double t_max() const { return planner.compliance.t_max; }

  /// ConfigError on any violated invariant.
  void validate() const;
};

const char* spawn_rule_name(SpawnRule rule);
const char* human_policy_name(HumanPolicy policy);

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, malformed
/// values and failed validation raise ConfigError naming the line.
ScenarioConfig parse_scenario_config(const std::string& text);
ScenarioConfig load_scenario_config(const std::string& path);
/// Canonical text form; parse_scenario_config(to_config_text(c)) == c.
std::string to_config_text(const ScenarioConfig& config);

}  // namespace socnav

#endif  // SOCNAV_SCENARIO_HPP_
