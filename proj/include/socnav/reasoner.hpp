// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_REASONER_HPP_
#define SOCNAV_REASONER_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "socnav/backend.hpp"
#include "socnav/constraints.hpp"
#include "socnav/deduction.hpp"
#include "socnav/observation.hpp"
#include "socnav/planner.hpp"
#include "socnav/scenario.hpp"
#include "socnav/simulator.hpp"

namespace socnav {

/// Fenced-block tag each guidance step asks the backend to answer with.
enum class StepSchema { kWorld, kEs, kEd, kNotEc, kEt, kLevel, kVerify, kAction };

const char* schema_tag(StepSchema schema);

struct GuidanceStep {
  std::string objective;
  StepSchema schema = StepSchema::kWorld;
  std::string reference;  // predicate or level the step is about
};

struct GuidanceChain {
  std::vector<GuidanceStep> steps;
  bool operator==(const GuidanceChain& other) const;
};

/// Canonical eight steps: restate the world, Es, Ed, not Ec, Et per candidate,
/// classify the level, verify, emit the action. Thresholds from `params` are
/// written into the step texts.
GuidanceChain build_guidance_chain(const ComplianceParams& params, int horizon_steps = 5);

/// Degenerate one-query chain that asks for the action directly.
GuidanceChain build_single_step_chain(const ComplianceParams& params, int horizon_steps = 5);

/// Chain read from a JSON array of {"schema": <tag>, "objective": <text>}.
/// The last step must be an action step. ConfigError on bad input.
GuidanceChain load_guidance_chain(const std::string& path);

struct WorldRestatement {
  int n_humans = 0;
  double goal_distance = 0.0;
};

struct PredicateVerdicts {
  Predicate predicate = Predicate::kEs;
  std::map<int, bool> by_candidate;
};

struct LevelClaim {
  ComplianceLevel level = ComplianceLevel::kNone;
  int candidate = 0;
  std::optional<bool> verified;  // set by the verification step
};

struct ActionClaim {
  Vec2d velocity = Vec2d::Zero();
  ComplianceLevel level = ComplianceLevel::kNone;
};

using StepPayload = std::variant<WorldRestatement, PredicateVerdicts, LevelClaim, ActionClaim>;

struct StepResult {
  std::optional<StepPayload> payload;
  bool parse_ok = false;
};

/// Extracts the last ```<tag> fenced block of the requested schema; text
/// outside the block is ignored.
StepResult parse_step_reply(StepSchema schema, const std::string& reply);

/// Text of the step prompt's trailing instruction; the oracle backend reads the
/// requested schema back out of it.
std::string render_step_instruction(const GuidanceStep& step, std::size_t index,
                                    std::size_t count);

struct EvidenceEntry {
  std::size_t step = 0;
  std::string prompt;
  std::string reply;
  StepPayload payload;
};

struct EvidenceChain {
  std::vector<EvidenceEntry> entries;
};

class ChainError : public Error {
 public:
  enum class Kind { kTransport, kParse };
  ChainError(Kind kind, std::size_t step, const std::string& what)
      : Error(what), kind_(kind), step_(step) {}
  Kind kind() const { return kind_; }
  std::size_t step() const { return step_; }

 private:
  Kind kind_;
  std::size_t step_;
};

/// Retries per step after the first attempt.
inline constexpr int kStepRetries = 2;

struct ChainResult {
  EvidenceChain evidence;
  ActionClaim claim;
};

/// Runs the chain strictly in order. Step i's prompt is the environment
/// summary, the observation prompt, every earlier instruction and reply, then
/// step i's instruction. Transport failures and unparseable replies are retried
/// kStepRetries times before ChainError. FixtureError passes through.
ChainResult run_chain(ReasoningBackend& backend, const std::string& env_summary,
                      const std::string& obs_prompt, const GuidanceChain& chain);

/// Deterministic backend that answers each step from the constraint and
/// planner modules for one frame.
class OracleBackend : public ReasoningBackend {
 public:
  OracleBackend(ObservationFrame frame, PlannerConfig config);
  BackendInfo info() const override;
  std::string complete(const std::string& prompt) override;

 private:
  ObservationFrame frame_;
  PlannerConfig config_;
  std::vector<ScoredCandidate> candidates_;
  DeductionOutcome decision_;
};

std::shared_ptr<ReasoningBackend> oracle_backend(const ObservationFrame& frame,
                                                 const PlannerConfig& config);

/// Nearest sampled candidate to `velocity` (ties to the lowest index).
CandidateAction snap_to_candidate(const Vec2d& velocity, const ActionSpace& space);

struct ValidatedOutcome {
  DeductionOutcome outcome;
  bool repaired = false;
};

/// Re-checks a backend's claim. The claimed velocity is snapped into the
/// action space; if its predicates do not support the claimed level, or there
/// is no claim, plan_step decides instead and the outcome is marked repaired.
ValidatedOutcome validate_and_repair(const std::optional<ActionClaim>& claim,
                                     const ObservationFrame& frame, const PlannerConfig& config);

struct ReasonedStep {
  ValidatedOutcome validated;
  std::optional<EvidenceChain> evidence;
  std::string chain_failure;
};

/// World graph -> prompts -> chain -> validation for one control step.
ReasonedStep reason_step(ReasoningBackend& backend, const ObservationFrame& curr,
                         const ObservationFrame* prev, const ScenarioConfig& config,
                         const GuidanceChain& chain);

using BackendFactory =
    std::function<std::shared_ptr<ReasoningBackend>(const ObservationFrame& frame)>;

/// Episode policy that runs reason_step with a backend from `factory`.
Policy reasoner_policy(BackendFactory factory, ScenarioConfig config, GuidanceChain chain);

}  // namespace socnav

#endif  // SOCNAV_REASONER_HPP_
