// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_CONSTRAINTS_HPP_
#define SOCNAV_CONSTRAINTS_HPP_

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "socnav/action.hpp"
#include "socnav/observation.hpp"

namespace socnav {

/// Numerical knobs of the four social predicates.
struct ComplianceParams {
  double d_min = 0.5;
  double t_max = 50.0;
  std::map<std::string, double> pref_table = default_pref_table();
  double dt = 0.25;
  double max_speed = 1.0;

  static std::map<std::string, double> default_pref_table();

  /// Preferred social distance for `activity`; ConfigError when absent.
  double pref(const Activity& activity) const;
  /// Throws ConfigError on non-positive d_min/t_max/dt/max_speed or a
  /// built-in activity without a preference entry.
  void validate() const;
  /// True when every preference distance is at least d_min, i.e. the activity
  /// zone always contains the d_min zone.
  bool prefs_dominate_d_min() const;
};

/// Largest preference distance among the humans in view, or d_min when the
/// crowd is empty.
double active_social_distance(const ObservationFrame& frame, const ComplianceParams& params);

enum class Predicate { kEs, kEd, kNotEc, kEt };

const char* predicate_name(Predicate p);

struct PredicateVector {
  bool es = false;
  bool ed = false;
  bool not_ec = false;
  bool et = false;

  bool holds(Predicate p) const;
  /// Bit i set iff the i-th predicate in (es, ed, not_ec, et) order holds.
  unsigned bits() const;
  static PredicateVector from_bits(unsigned bits);

  bool operator==(const PredicateVector&) const = default;
};

/// Level1..Level4 are the disjuncts of the relaxation hierarchy, most
/// stringent first; kNone means no disjunct holds.
enum class ComplianceLevel { kLevel1 = 1, kLevel2 = 2, kLevel3 = 3, kLevel4 = 4, kNone = 5 };

inline constexpr std::array<ComplianceLevel, 4> kLevels = {
    ComplianceLevel::kLevel1, ComplianceLevel::kLevel2, ComplianceLevel::kLevel3,
    ComplianceLevel::kLevel4};

/// "D1".."D4" or "none".
std::string level_name(ComplianceLevel level);
/// Inverse of level_name; InputError on anything else.
ComplianceLevel parse_level(const std::string& text);

/// Conjuncts of `level` in canonical order. Empty for kNone.
std::span<const Predicate> level_predicates(ComplianceLevel level);

bool eval_activity_awareness(const Rollout& rollout, const ComplianceParams& params);
bool eval_distance_awareness(const Rollout& rollout, const ComplianceParams& params);
bool eval_collision_free(const Rollout& rollout, const ComplianceParams& params);
/// Optimistic completion-time bound: elapsed time, plus the rollout, plus the
/// straight-line remaining distance at max speed, must not exceed t_max.
bool eval_time_constraint(const Rollout& rollout, double elapsed, const ComplianceParams& params);

PredicateVector evaluate_predicates(const Rollout& rollout, double elapsed,
                                    const ComplianceParams& params);

/// Most stringent level whose conjunction holds under `facts`.
ComplianceLevel classify(const PredicateVector& facts);

std::pair<ComplianceLevel, PredicateVector> compliance_level(const Rollout& rollout, double elapsed,
                                                             const ComplianceParams& params);

}  // namespace socnav

#endif  // SOCNAV_CONSTRAINTS_HPP_
