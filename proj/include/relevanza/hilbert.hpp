/* Copyright 2026 The Relevanza Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Axiom schemes, logic presets and a Hilbert-style proof checker.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relevanza/errors.hpp"
#include "relevanza/formula.hpp"
#include "relevanza/parser.hpp"

namespace relevanza {

struct Scheme {
  std::string id;
  std::string name;
  Formula formula;
};

namespace detail {
inline const std::vector<Scheme>& scheme_table() {
  static const std::vector<Scheme> table = [] {
    const std::vector<std::pair<const char*, const char*>> src = {
        {"1", "phi -> phi"},
        {"2", "phi & psi -> phi"},
        {"3", "phi & psi -> psi"},
        {"4", "(phi -> psi) & (phi -> chi) -> (phi -> psi & chi)"},
        {"5", "phi -> phi | psi"},
        {"6", "psi -> phi | psi"},
        {"7", "(phi -> chi) & (psi -> chi) -> (phi | psi -> chi)"},
        {"8", "phi & (psi | chi) -> phi & psi | phi & chi"},
        {"9", "(phi -> psi) & (psi -> chi) -> (phi -> chi)"},
        {"10", "(phi -> psi) -> (chi -> phi) -> (chi -> psi)"},
        {"11", "(phi -> psi) -> (psi -> chi) -> (phi -> chi)"},
        {"13", "phi & (phi -> psi) -> psi"},
        {"14", "(phi -> phi -> psi) -> (phi -> psi)"},
        {"15a", "((phi -> phi) -> psi) -> psi"},
        {"15b", "((phi -> phi) -> phi) & ((psi -> psi) -> psi) -> (phi & psi -> phi & psi) -> phi & psi"},
        {"16", "phi -> (phi -> psi) -> psi"},
        {"15t", "(t! -> phi) -> phi"},
    };
    const std::vector<std::string> names = {
        "identity",      "conjunction elimination (left)", "conjunction elimination (right)",
        "conjunction introduction", "disjunction introduction (left)", "disjunction introduction (right)",
        "disjunction elimination", "distribution", "hypothetical syllogism", "prefixing", "suffixing",
        "pseudo-modus ponens", "contraction", "E axiom", "E axiom (box conjunction)", "assertion",
        "E axiom (truth form)"};
    std::vector<Scheme> out;
    for (std::size_t i = 0; i < src.size(); ++i) out.push_back({src[i].first, names[i], parse(src[i].second)});
    return out;
  }();
  return table;
}
}  // namespace detail

/// Every known scheme in numeric order, then the truth form of the E axiom
/// (no preset uses it; the correspondence tests do).
inline const std::vector<Scheme>& all_schemes() { return detail::scheme_table(); }

inline const Scheme& scheme(std::string_view id) {
  for (const Scheme& s : all_schemes()) {
    if (s.id == id) return s;
  }
  throw InputError("unknown axiom scheme '" + std::string(id) + "'");
}

enum class Rule { MP, Adj, Prefix, Suffix };

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::MP: return "mp";
    case Rule::Adj: return "adj";
    case Rule::Prefix: return "prefix";
    case Rule::Suffix: return "suffix";
  }
  return "";
}

struct LogicPreset {
  std::string name;
  std::vector<std::string> axioms;
  std::vector<Rule> rules;

  bool has_rule(Rule r) const { return std::find(rules.begin(), rules.end(), r) != rules.end(); }
  bool has_axiom(std::string_view id) const { return std::find(axioms.begin(), axioms.end(), id) != axioms.end(); }
};

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"B+", "TWJ+", "C+", "T+", "E+", "R+"};
  return names;
}

inline LogicPreset preset(std::string_view name) {
  std::vector<std::string> ax = {"1", "2", "3", "4", "5", "6", "7", "8"};
  if (name == "B+") return {"B+", ax, {Rule::MP, Rule::Adj, Rule::Prefix, Rule::Suffix}};
  ax.insert(ax.end(), {"9", "10", "11"});
  const std::vector<std::pair<std::string, std::vector<std::string>>> chain = {
      {"TWJ+", {}}, {"C+", {"13"}}, {"T+", {"14"}}, {"E+", {"15a", "15b"}}, {"R+", {"16"}}};
  for (const auto& [n, extra] : chain) {
    ax.insert(ax.end(), extra.begin(), extra.end());
    if (n == name) return {n, ax, {Rule::MP, Rule::Adj}};
  }
  throw InputError("unknown logic preset '" + std::string(name) + "'");
}

inline std::vector<Formula> preset_axioms(const LogicPreset& p) {
  std::vector<Formula> out;
  for (const auto& id : p.axioms) out.push_back(scheme(id).formula);
  return out;
}

/// First-order matching of `pattern` (every atom a metavariable) against `f`.
inline bool match_scheme(const Formula& pattern, const Formula& f, Assignment& sigma) {
  if (pattern.is_atom()) {
    auto [it, inserted] = sigma.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.op() != f.op()) return false;
  if (!pattern.is_binary()) return true;
  return match_scheme(pattern.lhs(), f.lhs(), sigma) && match_scheme(pattern.rhs(), f.rhs(), sigma);
}

struct AxiomMatch {
  std::string scheme;
  Assignment substitution;
};

/// Lowest-numbered scheme of `p` of which f is an instance.
inline std::optional<AxiomMatch> match_axiom(const Formula& f, const LogicPreset& p) {
  for (const auto& id : p.axioms) {
    Assignment sigma;
    if (match_scheme(scheme(id).formula, f, sigma)) return AxiomMatch{id, std::move(sigma)};
  }
  return std::nullopt;
}

enum class StepKind { Axiom, MP, Adj, Prefix, Suffix, Hypothesis };

inline std::string_view step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Axiom: return "axiom";
    case StepKind::MP: return "mp";
    case StepKind::Adj: return "adj";
    case StepKind::Prefix: return "prefix";
    case StepKind::Suffix: return "suffix";
    case StepKind::Hypothesis: return "hypothesis";
  }
  return "";
}

/// One proof line. For MP, `i` is the minor premise and `j` the major one.
/// `formula` is the claimed result; it is mandatory for hypotheses and
/// optional elsewhere (checked when present). For axioms, an empty `scheme`
/// asks the checker to recognise `formula`.
struct ProofStep {
  StepKind kind = StepKind::Axiom;
  std::string scheme;
  Assignment substitution;
  int i = -1;
  int j = -1;
  std::optional<Formula> chi;
  std::optional<Formula> formula;

  static ProofStep axiom(std::string id, Assignment sigma, std::optional<Formula> claim = std::nullopt) {
    ProofStep s;
    s.scheme = std::move(id);
    s.substitution = std::move(sigma);
    s.formula = std::move(claim);
    return s;
  }
  static ProofStep mp(int minor, int major, std::optional<Formula> claim = std::nullopt) {
    ProofStep s;
    s.kind = StepKind::MP;
    s.i = minor;
    s.j = major;
    s.formula = std::move(claim);
    return s;
  }
  static ProofStep adj(int a, int b, std::optional<Formula> claim = std::nullopt) {
    ProofStep s;
    s.kind = StepKind::Adj;
    s.i = a;
    s.j = b;
    s.formula = std::move(claim);
    return s;
  }
  static ProofStep prefix(int from, Formula c, std::optional<Formula> claim = std::nullopt) {
    ProofStep s;
    s.kind = StepKind::Prefix;
    s.i = from;
    s.chi = std::move(c);
    s.formula = std::move(claim);
    return s;
  }
  static ProofStep suffix(int from, Formula c, std::optional<Formula> claim = std::nullopt) {
    ProofStep s = prefix(from, std::move(c), std::move(claim));
    s.kind = StepKind::Suffix;
    return s;
  }
  static ProofStep hypothesis(Formula f) {
    ProofStep s;
    s.kind = StepKind::Hypothesis;
    s.formula = std::move(f);
    return s;
  }
};

struct Proof {
  std::vector<ProofStep> steps;
  std::optional<Formula> conclusion;
  bool rule_derivation = false;
};

enum class ProofError {
  None,
  EmptyProof,
  IndexOutOfRange,
  NotImplication,
  PremiseMismatch,
  UnmatchedAxiom,
  SchemeNotInPreset,
  IncompleteSubstitution,
  ClaimMismatch,
  RuleNotAvailable,
  HypothesisNotAllowed,
  MissingFormula,
  ConclusionMismatch,
};

inline std::string_view proof_error_name(ProofError e) {
  switch (e) {
    case ProofError::None: return "none";
    case ProofError::EmptyProof: return "empty_proof";
    case ProofError::IndexOutOfRange: return "index_out_of_range";
    case ProofError::NotImplication: return "not_implication";
    case ProofError::PremiseMismatch: return "premise_mismatch";
    case ProofError::UnmatchedAxiom: return "unmatched_axiom";
    case ProofError::SchemeNotInPreset: return "scheme_not_in_preset";
    case ProofError::IncompleteSubstitution: return "incomplete_substitution";
    case ProofError::ClaimMismatch: return "claim_mismatch";
    case ProofError::RuleNotAvailable: return "rule_not_available";
    case ProofError::HypothesisNotAllowed: return "hypothesis_not_allowed";
    case ProofError::MissingFormula: return "missing_formula";
    case ProofError::ConclusionMismatch: return "conclusion_mismatch";
  }
  return "";
}

struct ProofVerdict {
  bool ok = false;
  int step = -1;  // failing step, or the number of steps for conclusion errors
  ProofError error = ProofError::None;
  std::string reason;
  std::vector<Formula> lines;       // formulas established before the failure
  std::vector<Formula> hypotheses;  // recorded for rule derivations
};

/// Checks each step in order and stops at the first bad one.
inline ProofVerdict check_proof(const Proof& pr, const LogicPreset& p) {
  ProofVerdict v;
  auto fail = [&](int step, ProofError e, std::string why) {
    v.ok = false;
    v.step = step;
    v.error = e;
    v.reason = std::move(why);
    return v;
  };
  if (pr.steps.empty()) return fail(0, ProofError::EmptyProof, "proof has no steps");

  for (int k = 0; k < static_cast<int>(pr.steps.size()); ++k) {
    const ProofStep& s = pr.steps[k];
    auto ref = [&](int idx) { return idx >= 0 && idx < k; };
    std::optional<Formula> got;
    switch (s.kind) {
      case StepKind::Hypothesis:
        if (!pr.rule_derivation) return fail(k, ProofError::HypothesisNotAllowed, "hypotheses need a rule derivation");
        if (!s.formula) return fail(k, ProofError::MissingFormula, "hypothesis without a formula");
        got = *s.formula;
        v.hypotheses.push_back(*got);
        break;
      case StepKind::Axiom: {
        if (s.scheme.empty()) {
          if (!s.formula) return fail(k, ProofError::MissingFormula, "axiom step needs a scheme or a formula");
          if (!match_axiom(*s.formula, p)) {
            return fail(k, ProofError::UnmatchedAxiom, "not an axiom of " + p.name);
          }
          got = *s.formula;
          break;
        }
        if (!p.has_axiom(s.scheme)) {
          return fail(k, ProofError::SchemeNotInPreset, "scheme " + s.scheme + " is not an axiom of " + p.name);
        }
        const Formula& sch = scheme(s.scheme).formula;
        for (const auto& meta : letters(sch)) {
          if (!s.substitution.count(meta)) {
            return fail(k, ProofError::IncompleteSubstitution, "no substitution for " + meta);
          }
        }
        got = substitute(sch, s.substitution);
        break;
      }
      case StepKind::MP: {
        if (!ref(s.i) || !ref(s.j)) return fail(k, ProofError::IndexOutOfRange, "premise index out of range");
        const Formula& major = v.lines[s.j];
        if (major.op() != Connective::Imp) {
          return fail(k, ProofError::NotImplication, "major premise " + std::to_string(s.j) + " is not an implication");
        }
        if (!(major.lhs() == v.lines[s.i])) {
          return fail(k, ProofError::PremiseMismatch, "minor premise does not match the antecedent");
        }
        got = major.rhs();
        break;
      }
      case StepKind::Adj:
        if (!ref(s.i) || !ref(s.j)) return fail(k, ProofError::IndexOutOfRange, "premise index out of range");
        got = conj(v.lines[s.i], v.lines[s.j]);
        break;
      case StepKind::Prefix:
      case StepKind::Suffix: {
        const Rule r = s.kind == StepKind::Prefix ? Rule::Prefix : Rule::Suffix;
        if (!p.has_rule(r)) {
          return fail(k, ProofError::RuleNotAvailable, std::string(rule_name(r)) + " rule is not part of " + p.name);
        }
        if (!ref(s.i)) return fail(k, ProofError::IndexOutOfRange, "premise index out of range");
        if (!s.chi) return fail(k, ProofError::MissingFormula, "affixing step needs chi");
        const Formula& prem = v.lines[s.i];
        if (prem.op() != Connective::Imp) return fail(k, ProofError::NotImplication, "premise is not an implication");
        const Formula& a = prem.lhs();
        const Formula& b = prem.rhs();
        got = r == Rule::Prefix ? imp(imp(*s.chi, a), imp(*s.chi, b)) : imp(imp(b, *s.chi), imp(a, *s.chi));
        break;
      }
    }
    if (s.formula && !(*s.formula == *got)) {
      return fail(k, ProofError::ClaimMismatch, "step derives " + to_string(*got));
    }
    v.lines.push_back(*got);
  }
  if (pr.conclusion && !(*pr.conclusion == v.lines.back())) {
    return fail(static_cast<int>(pr.steps.size()), ProofError::ConclusionMismatch,
                "last step derives " + to_string(v.lines.back()));
  }
  v.ok = true;
  return v;
}

}  // namespace relevanza
