// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#include "socnav/deduction.hpp"

namespace socnav {

Formula Formula::make_atom(Atom atom, std::string term) {
  Formula f;
  f.kind = Connective::kAtom;
  f.atom = atom;
  f.term = std::move(term);
  return f;
}

Formula Formula::negation(Formula body) {
  Formula f;
  f.kind = Connective::kNot;
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind = Connective::kAnd;
  f.children = std::move(parts);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind = Connective::kOr;
  f.children = std::move(parts);
  return f;
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  Formula f;
  f.kind = Connective::kImplies;
  f.children.push_back(std::move(antecedent));
  f.children.push_back(std::move(consequent));
  return f;
}

Formula Formula::exists(std::string variable, Formula body) {
  Formula f;
  f.kind = Connective::kExists;
  f.term = std::move(variable);
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::substitute(const std::string& variable, const std::string& replacement) const {
  Formula out = *this;
  switch (kind) {
    case Connective::kAtom:
      if (out.term == variable) out.term = replacement;
      return out;
    case Connective::kExists:
      if (term == variable) return out;  // bound here
      break;
    default:
      break;
  }
  for (auto& c : out.children) {
    c = c.substitute(variable, replacement);
  }
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (kind != other.kind || children.size() != other.children.size()) {
    return false;
  }
  if (kind == Connective::kAtom && (atom != other.atom || term != other.term)) {
    return false;
  }
  if (kind == Connective::kExists && term != other.term) {
    return false;
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i] != other.children[i]) return false;
  }
  return true;
}

namespace {

const char* atom_symbol(Atom a) {
  switch (a) {
    case Atom::kEs: return "Es";
    case Atom::kEd: return "Ed";
    case Atom::kEc: return "Ec";
    case Atom::kEt: return "Et";
    case Atom::kInActionSpace: return "InA";
  }
  return "?";
}

std::string wrapped(const Formula& f) {
  const bool simple = f.kind == Connective::kAtom || f.kind == Connective::kNot;
  return simple ? f.to_string() : "(" + f.to_string() + ")";
}

std::string join(const std::vector<Formula>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += wrapped(parts[i]);
  }
  return out;
}

}  // namespace

std::string Formula::to_string() const {
  switch (kind) {
    case Connective::kAtom:
      if (atom == Atom::kInActionSpace) return term + " in A";
      return std::string(atom_symbol(atom)) + "(" + term + ")";
    case Connective::kNot:
      return "~" + wrapped(children.at(0));
    case Connective::kAnd:
      return join(children, " & ");
    case Connective::kOr:
      return join(children, " | ");
    case Connective::kImplies:
      return wrapped(children.at(0)) + " -> " + wrapped(children.at(1));
    case Connective::kExists: {
      const auto& body = children.at(0);
      if (body.kind == Connective::kAtom && body.atom == Atom::kInActionSpace && body.term == term) {
        return "exists " + term + " in A";
      }
      return "exists " + term + ". " + wrapped(body);
    }
  }
  return "?";
}

std::string action_term(int index) { return "a_" + std::to_string(index); }

Formula build_objective(const std::string& a) {
  auto es = Formula::make_atom(Atom::kEs, a);
  auto ed = Formula::make_atom(Atom::kEd, a);
  auto not_ec = Formula::negation(Formula::make_atom(Atom::kEc, a));
  auto et = Formula::make_atom(Atom::kEt, a);
  return Formula::disjunction({
      Formula::conjunction({es, ed, not_ec, et}),
      Formula::conjunction({es, not_ec, et}),
      Formula::conjunction({ed, not_ec, et}),
      Formula::conjunction({not_ec, et}),
  });
}

}  // namespace socnav
