// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/deduction.hpp"

#include <algorithm>
#include <tuple>

#include "socnav/errors.hpp"

namespace socnav {

const char* rule_name(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::kAssumption: return "Assumption";
    case InferenceRule::kImpliesIntro: return "ImpliesIntro";
    case InferenceRule::kImpliesElim: return "ImpliesElim";
    case InferenceRule::kAndIntro: return "AndIntro";
    case InferenceRule::kExistsElim: return "ExistsElim";
    case InferenceRule::kVerificationStep: return "VerificationStep";
  }
  return "?";
}

namespace {

constexpr const char* kBoundVariable = "a";

Formula literal(Predicate p, const std::string& term) {
  switch (p) {
    case Predicate::kEs: return Formula::make_atom(Atom::kEs, term);
    case Predicate::kEd: return Formula::make_atom(Atom::kEd, term);
    case Predicate::kNotEc: return Formula::negation(Formula::make_atom(Atom::kEc, term));
    case Predicate::kEt: return Formula::make_atom(Atom::kEt, term);
  }
  return {};
}

ProofNode assumption(Formula f, int label) {
  ProofNode n;
  n.conclusion = std::move(f);
  n.rule = InferenceRule::kAssumption;
  n.label = label;
  return n;
}

ProofNode infer(InferenceRule rule, Formula conclusion, std::vector<ProofNode> premises,
                std::vector<int> discharged = {}) {
  ProofNode n;
  n.rule = rule;
  n.conclusion = std::move(conclusion);
  n.premises = std::move(premises);
  n.discharged = std::move(discharged);
  return n;
}

void serialize_node(const ProofNode& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(node.rule);
  if (node.label > 0) {
    out += "[" + std::to_string(node.label) + "]";
  }
  out += " | " + node.conclusion.to_string() + " | discharged=[";
  for (std::size_t i = 0; i < node.discharged.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(node.discharged[i]);
  }
  out += "]\n";
  for (const auto& p : node.premises) {
    serialize_node(p, depth + 1, out);
  }
}

}  // namespace

std::string ProofTree::serialize() const {
  std::string out;
  serialize_node(root, 0, out);
  return out;
}

ProofTree assemble_proof(const CandidateAction& action, ComplianceLevel level) {
  const auto preds = level_predicates(level);
  if (preds.empty()) {
    throw InputError("no proof exists for compliance level 'none'");
  }
  const std::string subject = action_term(action.index);
  const std::string var = kBoundVariable;

  // Left branch: from "exists a in A" to the objective instantiated on the
  // subject action.
  auto some_action = assumption(
      Formula::exists(var, Formula::make_atom(Atom::kInActionSpace, var)), 1);
  auto objective_intro = infer(
      InferenceRule::kImpliesIntro,
      Formula::implication(Formula::make_atom(Atom::kInActionSpace, var), build_objective(var)),
      {std::move(some_action)}, {1});
  auto witness = assumption(
      Formula::exists(subject, Formula::make_atom(Atom::kInActionSpace, subject)), 2);
  auto objective = infer(InferenceRule::kExistsElim, build_objective(subject),
                         {std::move(objective_intro), std::move(witness)}, {1, 2});

  // Right branch: the level's conjuncts, one assumption each from label 3 on.
  std::vector<ProofNode> leaves;
  std::vector<Formula> conjuncts;
  int label = 3;
  for (Predicate p : preds) {
    conjuncts.push_back(literal(p, subject));
    leaves.push_back(assumption(conjuncts.back(), label++));
  }
  const auto target = Formula::conjunction(conjuncts);
  auto conj = infer(InferenceRule::kAndIntro, target, std::move(leaves));
  auto cond = infer(InferenceRule::kImpliesIntro,
                    Formula::implication(build_objective(subject), target), {std::move(conj)});
  auto derived = infer(InferenceRule::kImpliesElim, target, {std::move(objective), std::move(cond)});

  ProofTree tree;
  tree.root = infer(InferenceRule::kVerificationStep, target, {std::move(derived)});
  tree.target_level = level;
  tree.subject = subject;
  return tree;
}

ProofResult prove_level(const CandidateAction& action, ComplianceLevel level,
                        const PredicateVector& facts) {
  const auto preds = level_predicates(level);
  if (preds.empty()) {
    throw InputError("no proof exists for compliance level 'none'");
  }
  for (Predicate p : preds) {
    if (!facts.holds(p)) {
      return ProofFailure{p};
    }
  }
  return assemble_proof(action, level);
}

DeductionOutcome degrade_and_select(std::span<const ScoredCandidate> candidates) {
  if (candidates.empty()) {
    throw InputError("degrade_and_select needs at least one candidate");
  }
  // Higher score first, then lower action index.
  auto better = [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.action.index < b.action.index;
  };

  for (auto level : kLevels) {
    const ScoredCandidate* best = nullptr;
    std::optional<ProofTree> best_tree;
    for (const auto& c : candidates) {
      if (best != nullptr && !better(c, *best)) continue;
      auto result = prove_level(c.action, level, c.facts);
      if (auto* tree = std::get_if<ProofTree>(&result)) {
        best = &c;
        best_tree = std::move(*tree);
      }
    }
    if (best != nullptr) {
      DeductionOutcome out;
      out.action = best->action;
      out.level = level;
      out.facts = best->facts;
      out.tree = std::move(*best_tree);
      out.verified = check_proof(out.tree, out.facts);
      out.forced = false;
      return out;
    }
  }

  auto violations = [](const ScoredCandidate& c) {
    return (c.facts.not_ec ? 0 : 1) + (c.facts.et ? 0 : 1);
  };
  const ScoredCandidate* pick = &candidates.front();
  for (const auto& c : candidates) {
    const int vc = violations(c);
    const int vp = violations(*pick);
    // Equal counts: a collision-free candidate beats one that only meets the
    // time limit.
    const bool safer = c.facts.not_ec && !pick->facts.not_ec;
    const bool same_safety = c.facts.not_ec == pick->facts.not_ec;
    if (vc < vp || (vc == vp && (safer || (same_safety && better(c, *pick))))) {
      pick = &c;
    }
  }
  DeductionOutcome out;
  out.action = pick->action;
  out.level = ComplianceLevel::kLevel4;
  out.facts = pick->facts;
  out.tree = assemble_proof(pick->action, ComplianceLevel::kLevel4);
  out.verified = check_proof(out.tree, out.facts);
  out.forced = !out.verified;
  return out;
}

}  // namespace socnav
