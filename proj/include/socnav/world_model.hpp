// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_WORLD_MODEL_HPP_
#define SOCNAV_WORLD_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "socnav/observation.hpp"
#include "socnav/scenario.hpp"

namespace socnav {

enum class Trend { kIncreased, kDecreased, kUnchanged };

/// |delta| at or below this renders as "unchanged" (meters or m/s).
inline constexpr double kTrendTolerance = 1e-3;

Trend trend_of(double delta);
const char* trend_word(Trend trend);

/// Distance between two agents. Robot edges are stored human-first so they
/// read "[h] and [r]". Delta and trend are absent when either endpoint was not
/// observed in the previous frame.
struct SpatialEdge {
  AgentId from;
  AgentId to;
  double distance = 0.0;
  std::optional<double> delta;
  std::optional<Trend> trend;
};

enum class TemporalKind { kRobotGoalDistance, kHumanSpeed };

struct TemporalEdge {
  AgentId agent;
  TemporalKind kind = TemporalKind::kRobotGoalDistance;
  double value = 0.0;
  double delta = 0.0;
  Trend trend = Trend::kUnchanged;
};

struct WorldGraph {
  ObservationFrame frame;
  std::vector<SpatialEdge> spatial_edges;
  std::vector<TemporalEdge> temporal_edges;
  double social_distance = 0.0;  // rendered in the robot vertex sentence
};

/// First-frame graph: spatial edges only.
WorldGraph build_world_graph(const ObservationFrame& curr, double social_distance = 0.0);

/// Graph with temporal edges and deltas against `prev`. Every human of `prev`
/// must still be present in `curr` (IdentityError) and `prev` must be strictly
/// earlier (InputError).
WorldGraph build_world_graph(const ObservationFrame& prev, const ObservationFrame& curr,
                             double social_distance = 0.0);

/// Fixed two-decimal number, never "-0.00".
std::string format_number(double v);
/// "(x, y)" with format_number components.
std::string format_point(const Vec2d& p);

std::string render_vertex_text(const RobotVertex& robot, double social_distance);
std::string render_vertex_text(const HumanVertex& human);
std::string render_edge_text(const SpatialEdge& edge);
std::string render_edge_text(const TemporalEdge& edge, const ObservationFrame& frame);

/// Robot line, human lines by id, temporal edges, spatial edges; one sentence
/// per line, newline-terminated.
std::string render_observation_prompt(const WorldGraph& graph);

/// Static preamble describing the arena, limits, preference table and the
/// enumerated action space.
std::string render_environment_summary(const ScenarioConfig& config);

}  // namespace socnav

#endif  // SOCNAV_WORLD_MODEL_HPP_
