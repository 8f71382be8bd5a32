// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/constraints.hpp"

#include <algorithm>
#include <cmath>

#include "socnav/errors.hpp"

namespace socnav {

std::map<std::string, double> ComplianceParams::default_pref_table() {
  return {{"talking", 1.2}, {"walking", 0.8}, {"standing", 0.6},
          {"sitting", 0.6}, {"phone", 0.8}};
}

double ComplianceParams::pref(const Activity& activity) const {
  auto it = pref_table.find(activity.name());
  if (it == pref_table.end()) {
    throw ConfigError("no preferred distance configured for activity '" + activity.name() + "'");
  }
  return it->second;
}

void ComplianceParams::validate() const {
  if (!(d_min > 0.0)) throw ConfigError("d_min must be positive");
  if (!(t_max > 0.0)) throw ConfigError("T_max must be positive");
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(max_speed > 0.0)) throw ConfigError("max_speed must be positive");
  for (const auto& a : Activity::builtins()) {
    pref(a);
  }
  for (const auto& [name, value] : pref_table) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw ConfigError("preferred distance for '" + name + "' must be finite and >= 0");
    }
  }
}

bool ComplianceParams::prefs_dominate_d_min() const {
  return std::all_of(pref_table.begin(), pref_table.end(),
                     [this](const auto& kv) { return kv.second >= d_min; });
}

double active_social_distance(const ObservationFrame& frame, const ComplianceParams& params) {
  if (frame.humans.empty()) {
    return params.d_min;
  }
  double best = 0.0;
  for (const auto& h : frame.humans) {
    best = std::max(best, params.pref(h.activity));
  }
  return best;
}

const char* predicate_name(Predicate p) {
  switch (p) {
    case Predicate::kEs: return "Es";
    case Predicate::kEd: return "Ed";
    case Predicate::kNotEc: return "not_Ec";
    case Predicate::kEt: return "Et";
  }
  return "?";
}

bool PredicateVector::holds(Predicate p) const {
  switch (p) {
    case Predicate::kEs: return es;
    case Predicate::kEd: return ed;
    case Predicate::kNotEc: return not_ec;
    case Predicate::kEt: return et;
  }
  return false;
}

unsigned PredicateVector::bits() const {
  return (es ? 1u : 0u) | (ed ? 2u : 0u) | (not_ec ? 4u : 0u) | (et ? 8u : 0u);
}

PredicateVector PredicateVector::from_bits(unsigned bits) {
  return {(bits & 1u) != 0, (bits & 2u) != 0, (bits & 4u) != 0, (bits & 8u) != 0};
}

std::string level_name(ComplianceLevel level) {
  switch (level) {
    case ComplianceLevel::kLevel1: return "D1";
    case ComplianceLevel::kLevel2: return "D2";
    case ComplianceLevel::kLevel3: return "D3";
    case ComplianceLevel::kLevel4: return "D4";
    case ComplianceLevel::kNone: return "none";
  }
  return "none";
}

ComplianceLevel parse_level(const std::string& text) {
  for (auto level : kLevels) {
    if (text == level_name(level)) return level;
  }
  if (text == "none") return ComplianceLevel::kNone;
  throw InputError("unknown compliance level '" + text + "'");
}

std::span<const Predicate> level_predicates(ComplianceLevel level) {
  using P = Predicate;
  static constexpr std::array<P, 4> kD1 = {P::kEs, P::kEd, P::kNotEc, P::kEt};
  static constexpr std::array<P, 3> kD2 = {P::kEs, P::kNotEc, P::kEt};
  static constexpr std::array<P, 3> kD3 = {P::kEd, P::kNotEc, P::kEt};
  static constexpr std::array<P, 2> kD4 = {P::kNotEc, P::kEt};
  switch (level) {
    case ComplianceLevel::kLevel1: return kD1;
    case ComplianceLevel::kLevel2: return kD2;
    case ComplianceLevel::kLevel3: return kD3;
    case ComplianceLevel::kLevel4: return kD4;
    case ComplianceLevel::kNone: break;
  }
  return {};
}

namespace {

void require_steps(const Rollout& rollout) {
  if (rollout.steps.empty()) {
    throw InputError("rollout has no steps");
  }
}

// True iff every human stays at least `margin(h) + rho_R + rho_H` away from the
// robot at every rollout step.
template <typename MarginFn>
bool clearance_holds(const Rollout& rollout, MarginFn margin) {
  require_steps(rollout);
  const auto n = static_cast<Eigen::Index>(rollout.humans.size());
  if (n == 0) {
    return true;
  }
  Eigen::ArrayXd threshold(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& shape = rollout.humans[static_cast<std::size_t>(i)];
    threshold(i) = margin(shape) + rollout.robot_radius + shape.radius;
  }
  for (const auto& step : rollout.steps) {
    if (step.humans.cols() != n) {
      throw InputError("rollout step human count does not match the rollout");
    }
    if (!(distances_from(step.robot, step.humans).transpose() >= threshold).all()) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool eval_activity_awareness(const Rollout& rollout, const ComplianceParams& params) {
  return clearance_holds(rollout, [&](const HumanShape& h) { return params.pref(h.activity); });
}

bool eval_distance_awareness(const Rollout& rollout, const ComplianceParams& params) {
  return clearance_holds(rollout, [&](const HumanShape&) { return params.d_min; });
}

bool eval_collision_free(const Rollout& rollout, const ComplianceParams&) {
  return clearance_holds(rollout, [](const HumanShape&) { return 0.0; });
}

bool eval_time_constraint(const Rollout& rollout, double elapsed, const ComplianceParams& params) {
  require_steps(rollout);
  const double remaining = distance(rollout.steps.back().robot, rollout.goal);
  return elapsed + rollout.duration + remaining / params.max_speed <= params.t_max;
}

PredicateVector evaluate_predicates(const Rollout& rollout, double elapsed,
                                    const ComplianceParams& params) {
  return {eval_activity_awareness(rollout, params), eval_distance_awareness(rollout, params),
          eval_collision_free(rollout, params), eval_time_constraint(rollout, elapsed, params)};
}

ComplianceLevel classify(const PredicateVector& facts) {
  for (auto level : kLevels) {
    const auto preds = level_predicates(level);
    if (std::all_of(preds.begin(), preds.end(), [&](Predicate p) { return facts.holds(p); })) {
      return level;
    }
  }
  return ComplianceLevel::kNone;
}

std::pair<ComplianceLevel, PredicateVector> compliance_level(const Rollout& rollout, double elapsed,
                                                             const ComplianceParams& params) {
  const auto facts = evaluate_predicates(rollout, elapsed, params);
  return {classify(facts), facts};
}

}  // namespace socnav
