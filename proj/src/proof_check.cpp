// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

// Proof checking re-derives every node from its rule schema. It deliberately
// shares nothing with the proof builder beyond the Formula type and the
// objective definition.

#include <algorithm>
#include <set>

#include "socnav/deduction.hpp"

namespace socnav {
namespace {

bool is_membership(const Formula& f, const std::string& term) {
  return f.kind == Connective::kAtom && f.atom == Atom::kInActionSpace && f.term == term;
}

// exists v in A
bool is_existential_membership(const Formula& f) {
  return f.kind == Connective::kExists && f.children.size() == 1 &&
         is_membership(f.children[0], f.term);
}

bool is_social_atom(const Formula& f) {
  return f.kind == Connective::kAtom && f.atom != Atom::kInActionSpace;
}

bool is_literal(const Formula& f) {
  if (is_social_atom(f)) return true;
  return f.kind == Connective::kNot && f.children.size() == 1 && is_social_atom(f.children[0]);
}

// Truth of a quantifier-free social formula about `subject` under the facts.
// Anything else (other terms, quantifiers, membership) is not decidable here.
std::optional<bool> truth(const Formula& f, const PredicateVector& facts,
                          const std::string& subject) {
  switch (f.kind) {
    case Connective::kAtom:
      if (f.term != subject) return std::nullopt;
      switch (f.atom) {
        case Atom::kEs: return facts.es;
        case Atom::kEd: return facts.ed;
        case Atom::kEc: return !facts.not_ec;
        case Atom::kEt: return facts.et;
        case Atom::kInActionSpace: return std::nullopt;
      }
      return std::nullopt;
    case Connective::kNot: {
      if (f.children.size() != 1) return std::nullopt;
      auto v = truth(f.children[0], facts, subject);
      if (!v) return std::nullopt;
      return !*v;
    }
    case Connective::kAnd:
    case Connective::kOr: {
      if (f.children.empty()) return std::nullopt;
      const bool is_and = f.kind == Connective::kAnd;
      bool acc = is_and;
      for (const auto& c : f.children) {
        auto v = truth(c, facts, subject);
        if (!v) return std::nullopt;
        acc = is_and ? (acc && *v) : (acc || *v);
      }
      return acc;
    }
    default:
      return std::nullopt;
  }
}

class Checker {
 public:
  Checker(const ProofTree& tree, const PredicateVector& facts) : tree_(tree), facts_(facts) {}

  bool run() {
    const auto& root = tree_.root;
    if (root.rule != InferenceRule::kVerificationStep) return false;
    const int level = static_cast<int>(tree_.target_level);
    if (level < 1 || level > 4) return false;
    const auto objective = build_objective(tree_.subject);
    if (root.conclusion != objective.children[static_cast<std::size_t>(level - 1)]) return false;
    return node_ok(root, /*is_root=*/true);
  }

 private:
  bool node_ok(const ProofNode& n, bool is_root) {
    for (const auto& p : n.premises) {
      if (!node_ok(p, false)) return false;
    }
    switch (n.rule) {
      case InferenceRule::kAssumption: return assumption_ok(n);
      case InferenceRule::kImpliesIntro: return implies_intro_ok(n);
      case InferenceRule::kImpliesElim: return implies_elim_ok(n);
      case InferenceRule::kAndIntro: return and_intro_ok(n);
      case InferenceRule::kExistsElim: return exists_elim_ok(n);
      case InferenceRule::kVerificationStep: return is_root && verification_ok(n);
    }
    return false;
  }

  bool assumption_ok(const ProofNode& n) {
    if (!n.premises.empty() || !n.discharged.empty() || n.label <= 0) return false;
    if (!labels_.insert(n.label).second) return false;
    if (is_existential_membership(n.conclusion)) return true;
    if (!is_literal(n.conclusion)) return false;
    auto v = truth(n.conclusion, facts_, tree_.subject);
    return v.has_value() && *v;
  }

  // Two shapes: objective introduction (from "exists v in A" to
  // "v in A -> objective(v)", discharging the assumption) and plain
  // vacuous introduction (consequent equals the premise).
  bool implies_intro_ok(const ProofNode& n) {
    if (n.premises.size() != 1) return false;
    const auto& c = n.conclusion;
    if (c.kind != Connective::kImplies || c.children.size() != 2) return false;
    const auto& p = n.premises[0];
    if (p.rule == InferenceRule::kAssumption && is_existential_membership(p.conclusion)) {
      const auto& v = p.conclusion.term;
      return is_membership(c.children[0], v) && c.children[1] == build_objective(v) &&
             n.discharged == std::vector<int>{p.label};
    }
    return n.discharged.empty() && c.children[1] == p.conclusion;
  }

  bool implies_elim_ok(const ProofNode& n) {
    if (n.premises.size() != 2 || !n.discharged.empty()) return false;
    const auto& minor = n.premises[0].conclusion;
    const auto& major = n.premises[1].conclusion;
    return major.kind == Connective::kImplies && major.children.size() == 2 &&
           major.children[0] == minor && major.children[1] == n.conclusion;
  }

  bool and_intro_ok(const ProofNode& n) {
    if (n.premises.size() < 2 || !n.discharged.empty()) return false;
    const auto& c = n.conclusion;
    if (c.kind != Connective::kAnd || c.children.size() != n.premises.size()) return false;
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      if (c.children[i] != n.premises[i].conclusion) return false;
    }
    return true;
  }

  // From "v in A -> B(v)" and the witness assumption "exists w in A", conclude
  // B(w). The witness must be the proof's subject action.
  bool exists_elim_ok(const ProofNode& n) {
    if (n.premises.size() != 2) return false;
    const auto& general = n.premises[0];
    const auto& witness = n.premises[1];
    if (witness.rule != InferenceRule::kAssumption ||
        !is_existential_membership(witness.conclusion) ||
        witness.conclusion.term != tree_.subject) {
      return false;
    }
    const auto& g = general.conclusion;
    if (g.kind != Connective::kImplies || g.children.size() != 2) return false;
    if (g.children[0].kind != Connective::kAtom || g.children[0].atom != Atom::kInActionSpace) {
      return false;
    }
    const auto& v = g.children[0].term;
    if (n.conclusion != g.children[1].substitute(v, witness.conclusion.term)) return false;
    std::vector<int> expected = general.discharged;
    expected.push_back(witness.label);
    std::sort(expected.begin(), expected.end());
    std::vector<int> got = n.discharged;
    std::sort(got.begin(), got.end());
    return got == expected;
  }

  bool verification_ok(const ProofNode& n) {
    if (n.premises.size() != 1 || !n.discharged.empty() || n.label != 0) return false;
    if (n.conclusion != n.premises[0].conclusion) return false;
    auto v = truth(n.conclusion, facts_, tree_.subject);
    return v.has_value() && *v;
  }

  const ProofTree& tree_;
  const PredicateVector& facts_;
  std::set<int> labels_;
};

}  // namespace

bool check_proof(const ProofTree& tree, const PredicateVector& facts) {
  return Checker(tree, facts).run();
}

}  // namespace socnav
