// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "socnav/errors.hpp"
#include "socnav/observation.hpp"

namespace socnav {
namespace {

ObservationFrame two_humans() {
  ObservationFrame f;
  f.robot.goal = Vec2d(0, 4);
  HumanVertex a;
  a.id = 1;
  a.position = Vec2d(1, 1);
  HumanVertex b;
  b.id = 2;
  b.position = Vec2d(-1, 2);
  b.activity = Activity::talking();
  f.humans = {a, b};
  return f;
}

TEST(AgentId, NamesAndParsing) {
  EXPECT_EQ(AgentId::robot().name(), "robot");
  EXPECT_EQ(AgentId::human(3).name(), "human_3");
  EXPECT_EQ(AgentId::parse("human_12"), AgentId::human(12));
  EXPECT_EQ(AgentId::parse("robot"), AgentId::robot());
  EXPECT_THROW(AgentId::parse("human_0"), InputError);
  EXPECT_THROW(AgentId::parse("droid"), InputError);
}

TEST(Activity, BuiltinsAndCustom) {
  EXPECT_EQ(Activity::builtins().size(), 5u);
  EXPECT_TRUE(Activity::phone().is_builtin());
  EXPECT_FALSE(Activity("jogging").is_builtin());
  EXPECT_THROW(Activity(""), InputError);
}

TEST(ObservationFrame, PositionsAndLookup) {
  const auto f = two_humans();
  const auto p = f.human_positions();
  ASSERT_EQ(p.cols(), 2);
  EXPECT_EQ(p.col(1), Vec2d(-1, 2));
  ASSERT_NE(f.find_human(2), nullptr);
  EXPECT_EQ(f.find_human(2)->activity, Activity::talking());
  EXPECT_EQ(f.find_human(9), nullptr);
}

TEST(ObservationFrame, ValidationRejectsBadInput) {
  EXPECT_NO_THROW(validate_frame(two_humans()));

  auto f = two_humans();
  f.humans[1].id = 1;
  EXPECT_THROW(validate_frame(f), IdentityError);

  f = two_humans();
  f.humans[0].id = 0;
  EXPECT_THROW(validate_frame(f), IdentityError);

  f = two_humans();
  f.humans[0].position.x() = NAN;
  EXPECT_THROW(validate_frame(f), InputError);

  f = two_humans();
  f.robot.radius = 0.0;
  EXPECT_THROW(validate_frame(f), InputError);

  f = two_humans();
  f.time = -1.0;
  EXPECT_THROW(validate_frame(f), InputError);
}

}  // namespace
}  // namespace socnav
