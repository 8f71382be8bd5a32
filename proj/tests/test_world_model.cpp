// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "socnav/errors.hpp"
#include "socnav/world_model.hpp"
#include "templates.hpp"

namespace socnav {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

ObservationFrame frame_at(double t, Vec2d robot, std::vector<Vec2d> humans) {
  ObservationFrame f;
  f.time = t;
  f.robot.position = robot;
  f.robot.goal = Vec2d(0, 6);
  int id = 1;
  for (const auto& p : humans) {
    HumanVertex h;
    h.id = id++;
    h.position = p;
    f.humans.push_back(h);
  }
  return f;
}

TEST(WorldGraph, FirstFrameThreeFourFive) {
  const auto g = build_world_graph(frame_at(0, Vec2d(0, 0), {Vec2d(3, 4)}));
  ASSERT_EQ(g.spatial_edges.size(), 1u);
  EXPECT_DOUBLE_EQ(g.spatial_edges[0].distance, 5.0);
  EXPECT_FALSE(g.spatial_edges[0].delta.has_value());
  EXPECT_TRUE(g.temporal_edges.empty());
}

TEST(WorldGraph, RobotGoalDeltaDecreased) {
  const auto prev = frame_at(0, Vec2d(0, 0), {});
  const auto curr = frame_at(0.25, Vec2d(0, 1), {});
  const auto g = build_world_graph(prev, curr);
  ASSERT_EQ(g.temporal_edges.size(), 1u);
  EXPECT_DOUBLE_EQ(g.temporal_edges[0].delta, -1.0);
  EXPECT_EQ(g.temporal_edges[0].trend, Trend::kDecreased);
}

TEST(WorldGraph, EdgeDistancesMatchPairwiseScan) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto f = oracle::random_frame(rng, 8);
    const auto g = build_world_graph(f);
    const std::size_t n = f.humans.size();
    ASSERT_EQ(g.spatial_edges.size(), n + n * (n - 1) / 2 + (n == 0 ? 0 : 0));
    for (const auto& e : g.spatial_edges) {
      auto pos = [&](AgentId a) {
        return a.is_robot() ? f.robot.position : f.find_human(a.index())->position;
      };
      const Vec2d a = pos(e.from);
      const Vec2d b = pos(e.to);
      EXPECT_NEAR(e.distance, std::hypot(a.x() - b.x(), a.y() - b.y()), 1e-12);
    }
  }
}

TEST(WorldGraph, RejectsOutOfOrderAndVanishingHumans) {
  const auto a = frame_at(1.0, Vec2d(0, 0), {Vec2d(1, 1)});
  const auto b = frame_at(1.0, Vec2d(0, 0), {Vec2d(1, 1)});
  EXPECT_THROW(build_world_graph(a, b), InputError);
  const auto c = frame_at(2.0, Vec2d(0, 0), {});
  EXPECT_THROW(build_world_graph(a, c), IdentityError);
}

TEST(WorldGraph, NewHumanHasNoDelta) {
  const auto prev = frame_at(0, Vec2d(0, 0), {Vec2d(1, 1)});
  const auto curr = frame_at(0.25, Vec2d(0, 0), {Vec2d(1, 1), Vec2d(2, 2)});
  const auto g = build_world_graph(prev, curr);
  int without = 0;
  for (const auto& e : g.spatial_edges) without += e.delta ? 0 : 1;
  EXPECT_EQ(without, 2);  // robot-human_2 and human_1-human_2
  EXPECT_EQ(g.temporal_edges.size(), 2u);
}

TEST(Trend, ToleranceBoundary) {
  EXPECT_EQ(trend_of(0.0), Trend::kUnchanged);
  EXPECT_EQ(trend_of(kTrendTolerance), Trend::kUnchanged);
  EXPECT_EQ(trend_of(0.2), Trend::kIncreased);
  EXPECT_EQ(trend_of(-1.0), Trend::kDecreased);
  EXPECT_STREQ(trend_word(Trend::kUnchanged), "unchanged");
}

TEST(Render, RobotVertexTemplate) {
  RobotVertex r;
  r.position = Vec2d(1, -2.5);
  r.velocity = Vec2d(0.5, 0);
  r.goal = Vec2d(0, 4);
  EXPECT_EQ(render_vertex_text(r, 1.2),
            golden::fill(golden::kRobotVertex, {{"r", "robot"},
                                                {"p", "(1.00, -2.50)"},
                                                {"v", "(0.50, 0.00)"},
                                                {"g", "(0.00, 4.00)"},
                                                {"T", "reach the destination"},
                                                {"d", "1.20"}}));
}

TEST(Render, HumanVertexTemplateWithZeroVelocity) {
  HumanVertex h;
  h.id = 2;
  h.position = Vec2d(3, 4);
  h.activity = Activity::sitting();
  const auto text = render_vertex_text(h);
  EXPECT_EQ(text, "[human_2] is located at [(3.00, 4.00)] with velocity [(0.00, 0.00)] and the "
                  "collision radius [0.30], performing personal activity [sitting].");
}

TEST(Render, TemporalEdges) {
  ObservationFrame f;
  f.robot.goal = Vec2d(0, 4);
  const TemporalEdge human{AgentId::human(1), TemporalKind::kHumanSpeed, 1.0, 0.2, Trend::kIncreased};
  EXPECT_EQ(render_edge_text(human, f),
            "The velocity [1.00] of agent [human_1] has [increased] compared to the last "
            "timestep, with a difference [0.20].");
  const TemporalEdge robot{AgentId::robot(), TemporalKind::kRobotGoalDistance, 5.0, -1.0,
                           Trend::kDecreased};
  EXPECT_EQ(render_edge_text(robot, f),
            golden::fill(golden::kRobotTemporal, {{"s", "5.00"},
                                                  {"r", "robot"},
                                                  {"g", "(0.00, 4.00)"},
                                                  {"y", "decreased"},
                                                  {"ds", "-1.00"}}));
}

TEST(Render, PromptLineCountsAndOrder) {
  const auto prev = frame_at(0, Vec2d(0, 0), {});
  const auto curr = frame_at(0.25, Vec2d(0, 0.25), {});
  auto lines = lines_of(render_observation_prompt(build_world_graph(prev, curr)));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].rfind("[robot] is located", 0), 0u);
  EXPECT_EQ(lines[1].rfind("The absolute distance", 0), 0u);

  const auto p2 = frame_at(0, Vec2d(0, 0), {Vec2d(1, 0), Vec2d(2, 0)});
  const auto c2 = frame_at(0.25, Vec2d(0, 0.25), {Vec2d(1, 0.1), Vec2d(2, 0.2)});
  lines = lines_of(render_observation_prompt(build_world_graph(p2, c2)));
  // 1 robot + 2 humans + 3 temporal + 3 spatial
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[1].rfind("[human_1]", 0), 0u);
  EXPECT_EQ(lines[2].rfind("[human_2]", 0), 0u);
  EXPECT_EQ(lines[3].rfind("The absolute distance", 0), 0u);
  EXPECT_EQ(lines[4].rfind("The velocity", 0), 0u);
  EXPECT_EQ(lines[6].rfind("The relative distance", 0), 0u);
}

// Parses each rendered sentence back into its slot values and compares them
// with the quantized inputs.
TEST(Render, ParseBackOnRandomGraphs) {
  std::mt19937_64 rng(23);
  const std::regex human_re(
      R"(\[human_(\d+)\] is located at \[\((-?\d+\.\d\d), (-?\d+\.\d\d)\)\] with velocity )"
      R"(\[\((-?\d+\.\d\d), (-?\d+\.\d\d)\)\] and the collision radius \[(\d+\.\d\d)\], )"
      R"(performing personal activity \[(\w+)\]\.)");
  const std::regex spatial_re(
      R"(The relative distance \[(\d+\.\d\d)\] between \[(\w+)\] and \[(\w+)\] has \[(\w+)\] )"
      R"(compared to the last timestep, with a difference \[(-?\d+\.\d\d)\]\.)");
  for (int i = 0; i < 1000; ++i) {
    auto prev = oracle::random_frame(rng, 6);
    prev.time = 0.0;
    auto curr = prev;
    curr.time = 0.25;
    curr.robot.position += curr.robot.velocity * 0.25;
    for (auto& h : curr.humans) h.position += h.velocity * 0.25;
    const auto g = build_world_graph(prev, curr, 0.8);
    const auto lines = lines_of(render_observation_prompt(g));
    std::size_t humans = 0, spatial = 0;
    for (const auto& line : lines) {
      std::smatch m;
      if (std::regex_match(line, m, human_re)) {
        const auto* h = curr.find_human(std::stoi(m[1]));
        ASSERT_NE(h, nullptr);
        EXPECT_EQ(m[2].str(), golden::num(h->position.x()));
        EXPECT_EQ(m[3].str(), golden::num(h->position.y()));
        EXPECT_EQ(m[4].str(), golden::num(h->velocity.x()));
        EXPECT_EQ(m[5].str(), golden::num(h->velocity.y()));
        EXPECT_EQ(m[6].str(), golden::num(h->radius));
        EXPECT_EQ(m[7].str(), h->activity.name());
        ++humans;
      } else if (std::regex_match(line, m, spatial_re)) {
        const auto from = AgentId::parse(m[2].str());
        const auto to = AgentId::parse(m[3].str());
        auto pos = [](const ObservationFrame& f, AgentId a) {
          return a.is_robot() ? f.robot.position : f.find_human(a.index())->position;
        };
        const double now = (pos(curr, from) - pos(curr, to)).norm();
        const double before = (pos(prev, from) - pos(prev, to)).norm();
        EXPECT_EQ(m[1].str(), golden::num(now));
        EXPECT_EQ(m[4].str(), golden::word(now - before));
        EXPECT_EQ(m[5].str(), golden::num(now - before));
        ++spatial;
      }
    }
    const auto n = curr.humans.size();
    EXPECT_EQ(humans, n);
    EXPECT_EQ(spatial, n + n * (n - 1) / 2);
  }
}

TEST(EnvironmentSummary, ContainsTimeLimitAndIsLocal) {
  ScenarioConfig cfg;
  const auto a = render_environment_summary(cfg);
  EXPECT_NE(a.find("T_max = 50 s"), std::string::npos);
  EXPECT_EQ(a, render_environment_summary(cfg));
  ScenarioConfig changed = cfg;
  changed.planner.compliance.d_min = 0.7;
  const auto b = render_environment_summary(changed);
  const auto la = lines_of(a);
  const auto lb = lines_of(b);
  ASSERT_EQ(la.size(), lb.size());
  int differing = 0;
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) {
      ++differing;
      EXPECT_NE(la[i].find("d_min"), std::string::npos);
    }
  }
  EXPECT_EQ(differing, 1);
}

}  // namespace
}  // namespace socnav
