// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/world_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "socnav/errors.hpp"

namespace socnav {

Trend trend_of(double delta) {
  if (std::abs(delta) <= kTrendTolerance) return Trend::kUnchanged;
  return delta > 0.0 ? Trend::kIncreased : Trend::kDecreased;
}

const char* trend_word(Trend trend) {
  switch (trend) {
    case Trend::kIncreased: return "increased";
    case Trend::kDecreased: return "decreased";
    case Trend::kUnchanged: return "unchanged";
  }
  return "unchanged";
}

namespace {

std::vector<const HumanVertex*> humans_by_id(const ObservationFrame& frame) {
  std::vector<const HumanVertex*> out;
  for (const auto& h : frame.humans) out.push_back(&h);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->id < b->id; });
  return out;
}

double goal_distance(const RobotVertex& r) { return distance(r.position, r.goal); }

double speed(const HumanVertex& h) { return h.velocity.norm(); }

// Spatial edges of one frame: robot-human pairs first, then human-human pairs
// with i < j, all in id order.
std::vector<SpatialEdge> spatial_edges(const ObservationFrame& frame) {
  const auto humans = humans_by_id(frame);
  std::vector<SpatialEdge> out;
  for (const auto* h : humans) {
    out.push_back({h->agent(), AgentId::robot(), distance(h->position, frame.robot.position), {}, {}});
  }
  for (std::size_t i = 0; i < humans.size(); ++i) {
    for (std::size_t j = i + 1; j < humans.size(); ++j) {
      out.push_back({humans[i]->agent(), humans[j]->agent(),
                     distance(humans[i]->position, humans[j]->position), {}, {}});
    }
  }
  return out;
}

const Vec2d& position_of(const ObservationFrame& frame, AgentId id) {
  if (id.is_robot()) return frame.robot.position;
  const auto* h = frame.find_human(id.index());
  if (h == nullptr) throw IdentityError("no agent " + id.name() + " in frame");
  return h->position;
}

}  // namespace

WorldGraph build_world_graph(const ObservationFrame& curr, double social_distance) {
  validate_frame(curr);
  WorldGraph g;
  g.frame = curr;
  g.spatial_edges = spatial_edges(curr);
  g.social_distance = social_distance;
  return g;
}

WorldGraph build_world_graph(const ObservationFrame& prev, const ObservationFrame& curr,
                             double social_distance) {
  validate_frame(prev);
  WorldGraph g = build_world_graph(curr, social_distance);
  if (!(prev.time < curr.time)) {
    throw InputError("previous frame must be strictly earlier than the current frame");
  }
  for (const auto& h : prev.humans) {
    if (curr.find_human(h.id) == nullptr) {
      throw IdentityError("human_" + std::to_string(h.id) + " disappeared between frames");
    }
  }

  for (auto& e : g.spatial_edges) {
    const bool seen = (e.from.is_robot() || prev.find_human(e.from.index()) != nullptr) &&
                      (e.to.is_robot() || prev.find_human(e.to.index()) != nullptr);
    if (!seen) continue;
    const double before = distance(position_of(prev, e.from), position_of(prev, e.to));
    e.delta = e.distance - before;
    e.trend = trend_of(*e.delta);
  }

  const double goal_now = goal_distance(curr.robot);
  const double goal_delta = goal_now - goal_distance(prev.robot);
  g.temporal_edges.push_back({AgentId::robot(), TemporalKind::kRobotGoalDistance, goal_now,
                              goal_delta, trend_of(goal_delta)});
  for (const auto* h : humans_by_id(curr)) {
    const auto* before = prev.find_human(h->id);
    if (before == nullptr) continue;
    const double now = speed(*h);
    const double delta = now - speed(*before);
    g.temporal_edges.push_back(
        {h->agent(), TemporalKind::kHumanSpeed, now, delta, trend_of(delta)});
  }
  return g;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string format_point(const Vec2d& p) {
  return "(" + format_number(p.x()) + ", " + format_number(p.y()) + ")";
}

namespace {

std::string slot(const std::string& s) { return "[" + s + "]"; }

}  // namespace

std::string render_vertex_text(const RobotVertex& r, double social_distance) {
  return slot(AgentId::robot().name()) + " is located at " + slot(format_point(r.position)) +
         " with velocity " + slot(format_point(r.velocity)) + " toward the destination " +
         slot(format_point(r.goal)) + ", executing task " + slot(r.task_label) +
         " with social distance " + slot(format_number(social_distance)) + ".";
}

std::string render_vertex_text(const HumanVertex& h) {
  return slot(h.agent().name()) + " is located at " + slot(format_point(h.position)) +
         " with velocity " + slot(format_point(h.velocity)) + " and the collision radius " +
         slot(format_number(h.radius)) + ", performing personal activity " +
         slot(h.activity.name()) + ".";
}

std::string render_edge_text(const SpatialEdge& e) {
  const std::string head = "The relative distance " + slot(format_number(e.distance)) +
                           " between " + slot(e.from.name()) + " and " + slot(e.to.name());
  if (!e.delta || !e.trend) {
    return head + " is observed for the first time at the current timestep.";
  }
  return head + " has " + slot(trend_word(*e.trend)) +
         " compared to the last timestep, with a difference " + slot(format_number(*e.delta)) +
         ".";
}

std::string render_edge_text(const TemporalEdge& e, const ObservationFrame& frame) {
  if (e.kind == TemporalKind::kRobotGoalDistance) {
    return "The absolute distance " + slot(format_number(e.value)) + " between agent " +
           slot(e.agent.name()) + " and destination " + slot(format_point(frame.robot.goal)) +
           " has " + slot(trend_word(e.trend)) +
           ", compared to the last timestep with a difference " + slot(format_number(e.delta)) +
           ".";
  }
  return "The velocity " + slot(format_number(e.value)) + " of agent " + slot(e.agent.name()) +
         " has " + slot(trend_word(e.trend)) +
         " compared to the last timestep, with a difference " + slot(format_number(e.delta)) + ".";
}

std::string render_observation_prompt(const WorldGraph& g) {
  std::string out = render_vertex_text(g.frame.robot, g.social_distance) + "\n";
  for (const auto* h : humans_by_id(g.frame)) {
    out += render_vertex_text(*h) + "\n";
  }
  for (const auto& e : g.temporal_edges) {
    out += render_edge_text(e, g.frame) + "\n";
  }
  for (const auto& e : g.spatial_edges) {
    out += render_edge_text(e) + "\n";
  }
  return out;
}

namespace {

std::string shortest(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string render_environment_summary(const ScenarioConfig& cfg) {
  const auto& p = cfg.planner.compliance;
  const auto& space = cfg.planner.space;
  const double hw = cfg.arena_width / 2;
  const double hh = cfg.arena_height / 2;
  std::ostringstream os;
  os << "Environment configuration:\n";
  os << "- Arena: " << format_number(cfg.arena_width) << " m x " << format_number(cfg.arena_height)
     << " m centred at the origin, x in [" << format_number(-hw) << ", " << format_number(hw)
     << "], y in [" << format_number(-hh) << ", " << format_number(hh) << "].\n";
  os << "- Time limit: T_max = " << shortest(p.t_max) << " s; the robot must reach its "
     << "destination within this time.\n";
  os << "- Minimum social distance: d_min = " << shortest(p.d_min) << " m.\n";
  os << "- Collision radii: robot " << format_number(cfg.robot_radius) << " m, humans "
     << format_number(cfg.human_radius) << " m.\n";
  os << "- Preferred distance by activity:";
  for (const auto& [name, d] : p.pref_table) {
    os << " " << name << " " << format_number(d) << " m;";
  }
  os << "\n";
  os << "- Distances are measured centre to centre; every threshold is increased by both "
        "radii.\n";
  os << "- Prediction: each command is held for " << cfg.planner.horizon_steps << " steps of "
     << format_number(p.dt) << " s; humans keep their observed velocity; maximum robot speed "
     << format_number(p.max_speed) << " m/s.\n";
  os << "- Action space: " << space.size() << " velocity commands";
  if (space.includes_stop) os << " (stop first)";
  os << ", speeds {";
  for (std::size_t i = 0; i < space.speeds.size(); ++i) {
    os << (i ? ", " : "") << format_number(space.speeds[i]);
  }
  os << "} m/s x headings {";
  for (std::size_t i = 0; i < space.headings.size(); ++i) {
    os << (i ? ", " : "") << format_number(space.headings[i] * 180.0 / std::numbers::pi);
  }
  os << "} degrees, speed-major:\n";
  for (const auto& a : sample_actions(space)) {
    os << "  a_" << a.index << " = " << format_point(a.velocity) << "\n";
  }
  return os.str();
}

}  // namespace socnav
