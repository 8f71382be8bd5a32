// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/planner.hpp"

#include <cmath>
#include <numbers>

#include "socnav/errors.hpp"

namespace socnav {

ActionSpace ActionSpace::standard(double max_speed) {
  ActionSpace space;
  for (double fraction : {0.25, 0.5, 0.75, 1.0}) {
    space.speeds.push_back(fraction * max_speed);
  }
  space.headings = even_headings(12);
  space.includes_stop = true;
  return space;
}

std::vector<double> ActionSpace::even_headings(int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(2.0 * std::numbers::pi * k / count);
  }
  return out;
}

void ActionSpace::validate(double max_speed) const {
  if (size() == 0) {
    throw ConfigError("action space is empty");
  }
  if (speeds.empty() != headings.empty()) {
    throw ConfigError("action space needs both speeds and headings, or neither");
  }
  for (double s : speeds) {
    if (!(s > 0.0) || s > max_speed) {
      throw ConfigError("action speed " + std::to_string(s) + " outside (0, max_speed]");
    }
  }
  for (double h : headings) {
    if (!(h >= 0.0) || h >= 2.0 * std::numbers::pi) {
      throw ConfigError("action heading " + std::to_string(h) + " outside [0, 2pi)");
    }
  }
}

void PlannerConfig::validate() const {
  compliance.validate();
  space.validate(compliance.max_speed);
  if (horizon_steps < 1) {
    throw ConfigError("horizon_steps must be at least 1");
  }
}

std::vector<CandidateAction> sample_actions(const ActionSpace& space) {
  std::vector<CandidateAction> out;
  out.reserve(space.size());
  if (space.includes_stop) {
    out.push_back({Vec2d::Zero(), 0});
  }
  for (double speed : space.speeds) {
    for (double heading : space.headings) {
      out.push_back({speed * unit_heading(heading), static_cast<int>(out.size())});
    }
  }
  return out;
}

Rollout rollout(const CandidateAction& action, const ObservationFrame& frame, int horizon_steps,
                double dt) {
  if (horizon_steps < 1) {
    throw InputError("rollout horizon must be at least one step");
  }
  if (!(dt > 0.0)) {
    throw InputError("rollout dt must be positive");
  }
  Rollout out;
  out.duration = horizon_steps * dt;
  out.robot_radius = frame.robot.radius;
  out.goal = frame.robot.goal;
  const auto n = static_cast<Eigen::Index>(frame.humans.size());
  Points2d human_vel(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& h = frame.humans[static_cast<std::size_t>(i)];
    human_vel.col(i) = h.velocity;
    out.humans.push_back({h.radius, h.activity});
  }

  Vec2d robot = frame.robot.position;
  Points2d humans = frame.human_positions();
  out.steps.reserve(static_cast<std::size_t>(horizon_steps));
  for (int k = 0; k < horizon_steps; ++k) {
    robot += action.velocity * dt;
    humans += human_vel * dt;
    out.steps.push_back({robot, humans});
  }
  return out;
}

double score(const CandidateAction& action, const ObservationFrame& frame, int horizon_steps,
             double dt) {
  const Vec2d end = frame.robot.position + action.velocity * (horizon_steps * dt);
  return -distance(end, frame.robot.goal);
}

std::vector<ScoredCandidate> evaluate_candidates(const ObservationFrame& frame,
                                                 const PlannerConfig& config) {
  validate_frame(frame);
  const auto& params = config.compliance;
  const auto actions = sample_actions(config.space);
  std::vector<ScoredCandidate> out;
  out.reserve(actions.size());
  for (const auto& a : actions) {
    const auto r = rollout(a, frame, config.horizon_steps, params.dt);
    out.push_back({a, evaluate_predicates(r, frame.robot.elapsed_time, params),
                   score(a, frame, config.horizon_steps, params.dt)});
  }
  return out;
}

DeductionOutcome plan_step(const ObservationFrame& frame, const PlannerConfig& config) {
  const auto candidates = evaluate_candidates(frame, config);
  return degrade_and_select(candidates);
}

}  // namespace socnav
