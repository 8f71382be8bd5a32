// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_DEDUCTION_HPP_
#define SOCNAV_DEDUCTION_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "socnav/action.hpp"
#include "socnav/constraints.hpp"

namespace socnav {

enum class Atom { kEs, kEd, kEc, kEt, kInActionSpace };

enum class Connective { kAtom, kNot, kAnd, kOr, kImplies, kExists };

/// First-order formula over the navigation atoms. Atoms carry their argument
/// term; an existential carries its bound variable in `term` and the body as
/// its single child.
struct Formula {
  Connective kind = Connective::kAtom;
  Atom atom = Atom::kEs;
  std::string term;
  std::vector<Formula> children;

  static Formula make_atom(Atom atom, std::string term);
  static Formula negation(Formula body);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula exists(std::string variable, Formula body);

  /// Replaces free occurrences of `variable` by `replacement`.
  Formula substitute(const std::string& variable, const std::string& replacement) const;
  std::string to_string() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
};

/// Name of the term that stands for candidate `index` inside proofs.
std::string action_term(int index);

/// The objective event: the four-disjunct relaxation hierarchy applied to
/// `action_var`.
Formula build_objective(const std::string& action_var);

enum class InferenceRule {
  kAssumption,
  kImpliesIntro,
  kImpliesElim,
  kAndIntro,
  kExistsElim,
  kVerificationStep,
};

const char* rule_name(InferenceRule rule);

struct ProofNode {
  Formula conclusion;
  InferenceRule rule = InferenceRule::kAssumption;
  std::vector<ProofNode> premises;
  std::vector<int> discharged;
  int label = 0;  // assumption label; leaves only
};

struct ProofTree {
  ProofNode root;
  ComplianceLevel target_level = ComplianceLevel::kLevel1;
  std::string subject;

  /// One node per line, two spaces of indent per depth level:
  /// `<rule> | <conclusion> | discharged=[..]`.
  std::string serialize() const;
};

struct ProofFailure {
  Predicate falsified;
};

using ProofResult = std::variant<ProofTree, ProofFailure>;

/// Builds the verification tree for `level` on `action`, or reports the first
/// conjunct of the level that `facts` falsifies. InputError for kNone.
ProofResult prove_level(const CandidateAction& action, ComplianceLevel level,
                        const PredicateVector& facts);

/// Same tree shape as prove_level without consulting the facts. Used for the
/// forced fallback, whose tree then fails check_proof.
ProofTree assemble_proof(const CandidateAction& action, ComplianceLevel level);

/// Independent schema check of every node plus agreement of the asserted
/// literals with `facts`. Malformed trees yield false.
bool check_proof(const ProofTree& tree, const PredicateVector& facts);

struct ScoredCandidate {
  CandidateAction action;
  PredicateVector facts;
  double score = 0.0;
};

struct DeductionOutcome {
  CandidateAction action;
  ComplianceLevel level = ComplianceLevel::kLevel4;
  ProofTree tree;
  PredicateVector facts;
  bool verified = false;
  bool forced = false;
};

/// Tries D1..D4 in order and returns the best-scoring provable candidate of the
/// first level that has one (ties to the lowest action index). When nothing is
/// provable even at D4, the candidate violating the fewest D4 conjuncts is
/// forced out unverified; among equal counts a collision-free candidate wins,
/// then score, then index. InputError on an empty list.
DeductionOutcome degrade_and_select(std::span<const ScoredCandidate> candidates);

}  // namespace socnav

#endif  // SOCNAV_DEDUCTION_HPP_
