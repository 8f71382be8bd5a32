// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_OBSERVATION_HPP_
#define SOCNAV_OBSERVATION_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "socnav/geometry.hpp"

namespace socnav {

/// Observable human activity. The five built-in names cover the default
/// preference table; any other non-empty name is accepted as an extension and
/// must then be given a preference distance by the configuration.
class Activity {
 public:
  Activity() : name_("walking") {}
  explicit Activity(std::string name);

  static Activity walking() { return Activity("walking"); }
  static Activity talking() { return Activity("talking"); }
  static Activity standing() { return Activity("standing"); }
  static Activity sitting() { return Activity("sitting"); }
  static Activity phone() { return Activity("phone"); }

  static const std::vector<Activity>& builtins();

  const std::string& name() const { return name_; }
  bool is_builtin() const;

  auto operator<=>(const Activity&) const = default;

 private:
  std::string name_;
};

/// Agent identifier: index 0 is the robot, humans are 1..n in scenario order.
class AgentId {
 public:
  constexpr AgentId() = default;
  static constexpr AgentId robot() { return AgentId(0); }
  static constexpr AgentId human(int k) { return AgentId(k); }

  constexpr bool is_robot() const { return index_ == 0; }
  constexpr int index() const { return index_; }
  std::string name() const;

  /// Inverse of name(); throws InputError on anything else.
  static AgentId parse(std::string_view text);

  auto operator<=>(const AgentId&) const = default;

 private:
  constexpr explicit AgentId(int index) : index_(index) {}
  int index_ = 0;
};

struct RobotVertex {
  Vec2d position = Vec2d::Zero();
  Vec2d velocity = Vec2d::Zero();
  double radius = 0.3;
  Vec2d goal = Vec2d::Zero();
  std::string task_label = "reach the destination";
  double elapsed_time = 0.0;
};

// No goal or intent fields: the robot only observes what a bystander could.
struct HumanVertex {
  int id = 1;
  Vec2d position = Vec2d::Zero();
  Vec2d velocity = Vec2d::Zero();
  double radius = 0.3;
  Activity activity;

  AgentId agent() const { return AgentId::human(id); }
};

struct ObservationFrame {
  double time = 0.0;
  RobotVertex robot;
  std::vector<HumanVertex> humans;

  /// Human positions as columns, in list order.
  Points2d human_positions() const;
  const HumanVertex* find_human(int id) const;
};

/// Throws InputError on non-finite values, negative times or non-positive
/// radii, IdentityError on duplicate or non-positive human ids.
void validate_frame(const ObservationFrame& frame);

}  // namespace socnav

#endif  // SOCNAV_OBSERVATION_HPP_
