// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "socnav/constraints.hpp"
#include "socnav/errors.hpp"
#include "socnav/planner.hpp"

namespace socnav {
namespace {

// Robot fixed at the origin; one human on the x axis at the given distances.
Rollout line_rollout(std::vector<double> dists, Activity activity = Activity::talking()) {
  Rollout r;
  r.robot_radius = 0.3;
  r.duration = 0.25 * static_cast<double>(dists.size());
  r.goal = Vec2d(0, 1);
  r.humans.push_back({0.3, activity});
  for (double d : dists) {
    Points2d h(2, 1);
    h.col(0) = Vec2d(d, 0);
    r.steps.push_back({Vec2d::Zero(), h});
  }
  return r;
}

TEST(ActivityAwareness, ConstantDistanceAboveThreshold) {
  ComplianceParams p;
  EXPECT_TRUE(eval_activity_awareness(line_rollout({2.0, 2.0, 2.0}), p));
}

TEST(ActivityAwareness, SingleStepViolation) {
  ComplianceParams p;
  EXPECT_FALSE(eval_activity_awareness(line_rollout({2.0, 1.7, 2.0}), p));
}

TEST(ActivityAwareness, UnknownActivityIsConfigError) {
  ComplianceParams p;
  EXPECT_THROW(eval_activity_awareness(line_rollout({2.0}, Activity("juggling")), p),
               ConfigError);
}

TEST(DistanceAwareness, Threshold) {
  ComplianceParams p;
  EXPECT_TRUE(eval_distance_awareness(line_rollout({1.2}), p));
  EXPECT_FALSE(eval_distance_awareness(line_rollout({1.0}), p));
}

TEST(CollisionFree, Threshold) {
  ComplianceParams p;
  EXPECT_FALSE(eval_collision_free(line_rollout({0.5}), p));
  EXPECT_TRUE(eval_collision_free(line_rollout({1.0}), p));
}

TEST(TimeConstraint, Examples) {
  ComplianceParams p;
  Rollout r = line_rollout({5.0, 5.0, 5.0, 5.0});
  r.duration = 1.0;
  r.goal = Vec2d(0, 5);
  EXPECT_TRUE(eval_time_constraint(r, 10.0, p));
  r.goal = Vec2d(0, 0.1);
  EXPECT_FALSE(eval_time_constraint(r, 49.5, p));
  // Exactly T_max: 44 + 1 + 5 = 50.
  r.goal = Vec2d(0, 5);
  EXPECT_TRUE(eval_time_constraint(r, 44.0, p));
  EXPECT_FALSE(eval_time_constraint(r, 44.0 + 1e-9, p));
}

TEST(Predicates, EmptyRolloutRejected) {
  ComplianceParams p;
  Rollout r;
  EXPECT_THROW(eval_collision_free(r, p), InputError);
  EXPECT_THROW(eval_time_constraint(r, 0.0, p), InputError);
}

TEST(Predicates, NoHumansOnlyTimeCanFail) {
  ComplianceParams p;
  Rollout r;
  r.duration = 0.25;
  r.goal = Vec2d(0, 100);
  r.steps.push_back({Vec2d::Zero(), Points2d(2, 0)});
  const auto v = evaluate_predicates(r, 0.0, p);
  EXPECT_TRUE(v.es && v.ed && v.not_ec);
  EXPECT_FALSE(v.et);
}

TEST(Predicates, AgreeWithScanOracleOnRandomRollouts) {
  std::mt19937_64 rng(11);
  ComplianceParams p;
  PlannerConfig cfg;
  const auto actions = sample_actions(cfg.space);
  std::uniform_int_distribution<std::size_t> pick(0, actions.size() - 1);
  int flips[4] = {0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    const auto f = oracle::random_frame(rng, 6);
    const auto& a = actions[pick(rng)];
    const auto v = evaluate_predicates(rollout(a, f, 5, p.dt), f.robot.elapsed_time, p);
    const auto o = oracle::scan(f, a.velocity.x(), a.velocity.y(), 5, p.dt, p);
    ASSERT_EQ(v.es, o.es) << i;
    ASSERT_EQ(v.ed, o.ed) << i;
    ASSERT_EQ(v.not_ec, o.nec) << i;
    ASSERT_EQ(v.et, o.et) << i;
    flips[0] += v.es;
    flips[1] += v.ed;
    flips[2] += v.not_ec;
    flips[3] += v.et;
  }
  // Both outcomes occur for every predicate.
  for (int k = 0; k < 4; ++k) {
    EXPECT_GT(flips[k], 50);
    EXPECT_LT(flips[k], 950);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({true, true, true, true}), ComplianceLevel::kLevel1);
  EXPECT_EQ(classify({false, true, true, true}), ComplianceLevel::kLevel3);
  EXPECT_EQ(classify({true, false, true, true}), ComplianceLevel::kLevel2);
  for (unsigned bits = 0; bits < 16; ++bits) {
    auto v = PredicateVector::from_bits(bits);
    if (!v.not_ec) {
      EXPECT_EQ(classify(v), ComplianceLevel::kNone);
    }
  }
}

TEST(Classify, RandomVectorsMatchDisjuncts) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 10000; ++i) {
    const PredicateVector v{coin(rng), coin(rng), coin(rng), coin(rng)};
    EXPECT_EQ(static_cast<int>(classify(v)), oracle::eq1_level(v.es, v.ed, v.not_ec, v.et));
  }
}

TEST(PredicateVector, BitsRoundTrip) {
  for (unsigned bits = 0; bits < 16; ++bits) {
    EXPECT_EQ(PredicateVector::from_bits(bits).bits(), bits);
  }
}

TEST(Levels, NamesAndPredicates) {
  EXPECT_EQ(level_name(ComplianceLevel::kLevel2), "D2");
  EXPECT_EQ(parse_level("D4"), ComplianceLevel::kLevel4);
  EXPECT_EQ(level_predicates(ComplianceLevel::kLevel1).size(), 4u);
  EXPECT_EQ(level_predicates(ComplianceLevel::kLevel2).size(), 3u);
  EXPECT_EQ(level_predicates(ComplianceLevel::kLevel3).size(), 3u);
  EXPECT_EQ(level_predicates(ComplianceLevel::kLevel4).size(), 2u);
}

TEST(ComplianceParams, PrefTableAndValidation) {
  ComplianceParams p;
  EXPECT_DOUBLE_EQ(p.pref(Activity::talking()), 1.2);
  EXPECT_TRUE(p.prefs_dominate_d_min());
  p.pref_table["sitting"] = 0.1;
  EXPECT_FALSE(p.prefs_dominate_d_min());
  p.d_min = -1.0;
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(SocialDistance, MaxPrefInViewOrDmin) {
  ComplianceParams p;
  ObservationFrame f;
  EXPECT_DOUBLE_EQ(active_social_distance(f, p), p.d_min);
  HumanVertex h;
  h.activity = Activity::standing();
  f.humans.push_back(h);
  h.id = 2;
  h.activity = Activity::phone();
  f.humans.push_back(h);
  EXPECT_DOUBLE_EQ(active_social_distance(f, p), 0.8);
}

}  // namespace
}  // namespace socnav
