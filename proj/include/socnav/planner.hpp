// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_PLANNER_HPP_
#define SOCNAV_PLANNER_HPP_

#include <vector>

#include "socnav/action.hpp"
#include "socnav/constraints.hpp"
#include "socnav/deduction.hpp"
#include "socnav/observation.hpp"

namespace socnav {

struct PlannerConfig {
  ComplianceParams compliance;
  ActionSpace space = ActionSpace::standard();
  int horizon_steps = 5;

  void validate() const;
};

/// Stop command first (when enabled), then speed-major, heading-minor.
std::vector<CandidateAction> sample_actions(const ActionSpace& space);

/// Robot integrates the command, humans keep their observed velocity.
/// InputError when `horizon_steps` < 1 or `dt` <= 0.
Rollout rollout(const CandidateAction& action, const ObservationFrame& frame, int horizon_steps,
                double dt);

/// Negative end-of-rollout distance to the goal; higher is better.
double score(const CandidateAction& action, const ObservationFrame& frame, int horizon_steps,
             double dt);

/// Rollout, predicates and score for every sampled action, in sample order.
std::vector<ScoredCandidate> evaluate_candidates(const ObservationFrame& frame,
                                                 const PlannerConfig& config);

/// One receding-horizon planning cycle. Elapsed time comes from the robot
/// vertex.
DeductionOutcome plan_step(const ObservationFrame& frame, const PlannerConfig& config);

}  // namespace socnav

#endif  // SOCNAV_PLANNER_HPP_
