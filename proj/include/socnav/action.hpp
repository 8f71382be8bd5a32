// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_ACTION_HPP_
#define SOCNAV_ACTION_HPP_

#include <vector>

#include "socnav/geometry.hpp"
#include "socnav/observation.hpp"

namespace socnav {

/// Discrete velocity-command space: every (speed, heading) pair, plus an
/// optional stop command.
struct ActionSpace {
  std::vector<double> speeds;
  std::vector<double> headings;  // radians in [0, 2pi)
  bool includes_stop = true;

  /// 4 speeds x 12 evenly spaced headings + stop.
  static ActionSpace standard(double max_speed = 1.0);
  static std::vector<double> even_headings(int count);

  std::size_t size() const {
    return speeds.size() * headings.size() + (includes_stop ? 1 : 0);
  }
  /// Throws ConfigError when empty, when a speed is outside (0, max_speed],
  /// or a heading outside [0, 2pi).
  void validate(double max_speed) const;
};

struct CandidateAction {
  Vec2d velocity = Vec2d::Zero();
  int index = 0;

  bool operator==(const CandidateAction& other) const {
    return index == other.index && velocity == other.velocity;
  }
};

struct RolloutStep {
  Vec2d robot;
  Points2d humans;  // one column per human, same order as the frame
};

struct HumanShape {
  double radius;
  Activity activity;
};

/// Predicted short-horizon future of one candidate action.
struct Rollout {
  std::vector<RolloutStep> steps;
  double duration = 0.0;
  double robot_radius = 0.3;
  Vec2d goal = Vec2d::Zero();
  std::vector<HumanShape> humans;
};

}  // namespace socnav

#endif  // SOCNAV_ACTION_HPP_
