// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_SIMULATOR_HPP_
#define SOCNAV_SIMULATOR_HPP_

#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "socnav/deduction.hpp"
#include "socnav/observation.hpp"
#include "socnav/scenario.hpp"

namespace socnav {

enum class EpisodeStatus { kRunning, kSuccess, kCollision, kTimeout, kAborted };

const char* status_name(EpisodeStatus status);
EpisodeStatus parse_status(const std::string& text);

/// Simulator-private motion intent of a human. Never copied into the
/// observation frame.
struct HumanPlan {
  Vec2d origin;
  Vec2d waypoint;
};

struct EpisodeState {
  ObservationFrame frame;
  int tick = 0;
  EpisodeStatus status = EpisodeStatus::kRunning;
  std::vector<HumanPlan> plans;  // parallel to frame.humans
  std::mt19937_64 rng;
};

/// Humans with these activities hold their position.
bool is_stationary(const Activity& activity);

/// Deterministic in `config.seed`. Humans never overlap the robot, its goal
/// or each other (with a 0.2 m margin); ConfigError when packing fails.
EpisodeState spawn_scenario(const ScenarioConfig& config);

/// Advances one dt. Collision is tested at four interpolated sub-steps and
/// takes precedence over success, which takes precedence over timeout.
/// StateError when `state` is already terminal.
EpisodeState step(const ScenarioConfig& config, const EpisodeState& state, const Vec2d& command);

struct PolicyDecision {
  CandidateAction action;
  std::optional<DeductionOutcome> outcome;
  bool repaired = false;
};

/// Maps the current (and, after the first tick, previous) frame to an action.
using Policy =
    std::function<PolicyDecision(const ObservationFrame& curr, const ObservationFrame* prev)>;

struct StepRecord {
  CandidateAction action;
  std::optional<DeductionOutcome> outcome;
  bool repaired = false;
};

struct EpisodeResult {
  std::uint64_t seed = 0;
  double dt = 0.25;
  EpisodeStatus status = EpisodeStatus::kRunning;
  std::vector<ObservationFrame> trajectory;  // terminal tick + 1 frames
  std::vector<StepRecord> steps;             // action taken at each non-terminal tick
  std::string abort_reason;
  std::exception_ptr abort_error;

  int terminal_tick() const { return static_cast<int>(trajectory.size()) - 1; }
};

/// Runs spawn -> (policy -> step)* until a terminal status. An exception from
/// the policy ends the episode with kAborted.
EpisodeResult run_episode(const ScenarioConfig& config, const Policy& policy);

/// Executes plan_step directly.
Policy planner_policy(const PlannerConfig& config);
/// Always stops.
Policy stationary_policy();

}  // namespace socnav

#endif  // SOCNAV_SIMULATOR_HPP_
