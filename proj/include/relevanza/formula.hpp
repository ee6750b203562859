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

// Object language: atoms, conjunction, disjunction, implication, fusion and
// the Ackermann constant. Formulas are immutable trees with shared subterms.

#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relevanza/errors.hpp"

namespace relevanza {

enum class Connective { Atom, And, Or, Imp, Fusion, Truth };

/// Letters, digits and underscore; first character a letter.
inline bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

class Formula {
 public:
  static Formula atom(std::string name) {
    if (!is_identifier(name)) throw InputError("invalid propositional letter '" + name + "'");
    return Formula(std::make_shared<const Node>(Connective::Atom, std::move(name)));
  }
  static Formula truth() {
    static const Formula t(std::make_shared<const Node>(Connective::Truth, std::string{}));
    return t;
  }
  static Formula conj(Formula a, Formula b) { return binary(Connective::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Connective::Or, std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) { return binary(Connective::Imp, std::move(a), std::move(b)); }
  static Formula fuse(Formula a, Formula b) { return binary(Connective::Fusion, std::move(a), std::move(b)); }

  static Formula binary(Connective op, Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(op, std::move(a), std::move(b)));
  }

  Connective op() const { return node_->op; }
  bool is_atom() const { return node_->op == Connective::Atom; }
  bool is_binary() const { return node_->lhs != nullptr; }
  const std::string& name() const { return node_->name; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  /// Identity of the underlying node; equal ids imply structural equality.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    if (a.is_atom()) return a.name() == b.name();
    if (!a.is_binary()) return true;
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }

  /// Number of nodes in the tree (shared subterms counted per occurrence).
  std::size_t size() const { return is_binary() ? 1 + lhs().size() + rhs().size() : 1; }
  std::size_t depth() const {
    return is_binary() ? 1 + std::max(lhs().depth(), rhs().depth()) : 0;
  }

 private:
  struct Node {
    Node(Connective o, std::string n) : op(o), name(std::move(n)) {}
    Node(Connective o, Formula a, Formula b)
        : op(o), lhs(std::make_unique<Formula>(std::move(a))), rhs(std::make_unique<Formula>(std::move(b))) {}
    Connective op;
    std::string name;
    std::unique_ptr<Formula> lhs, rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline Formula atom(std::string name) { return Formula::atom(std::move(name)); }
inline Formula conj(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
inline Formula imp(Formula a, Formula b) { return Formula::imp(std::move(a), std::move(b)); }
inline Formula fuse(Formula a, Formula b) { return Formula::fuse(std::move(a), std::move(b)); }

/// Right-associated fold; `parts` must be nonempty.
inline Formula fold_right(Connective op, std::span<const Formula> parts) {
  if (parts.empty()) throw PreconditionError("fold over an empty operand list");
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::binary(op, parts[i], acc);
  return acc;
}
inline Formula conj_all(std::span<const Formula> parts) { return fold_right(Connective::And, parts); }
inline Formula disj_all(std::span<const Formula> parts) { return fold_right(Connective::Or, parts); }

/// Inverse of fold_right: the operands of a maximal right spine of `op`.
inline std::vector<Formula> flatten_right(const Formula& f, Connective op) {
  std::vector<Formula> out;
  const Formula* cur = &f;
  while (cur->op() == op) {
    out.push_back(cur->lhs());
    cur = &cur->rhs();
  }
  out.push_back(*cur);
  return out;
}

using Assignment = std::map<std::string, Formula>;

/// Simultaneous uniform substitution; letters outside the map are kept.
inline Formula substitute(const Formula& f, const Assignment& sigma) {
  switch (f.op()) {
    case Connective::Atom: {
      auto it = sigma.find(f.name());
      return it == sigma.end() ? f : it->second;
    }
    case Connective::Truth:
      return f;
    default: {
      Formula l = substitute(f.lhs(), sigma);
      Formula r = substitute(f.rhs(), sigma);
      if (l.id() == f.lhs().id() && r.id() == f.rhs().id()) return f;
      return Formula::binary(f.op(), std::move(l), std::move(r));
    }
  }
}

namespace detail {
inline void collect_letters(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
  } else if (f.is_binary()) {
    collect_letters(f.lhs(), out);
    collect_letters(f.rhs(), out);
  }
}

// Binding strength: imp < or < and < fusion < primary.
inline int level(Connective op) {
  switch (op) {
    case Connective::Imp: return 0;
    case Connective::Or: return 1;
    case Connective::And: return 2;
    case Connective::Fusion: return 3;
    default: return 4;
  }
}

inline const char* token(Connective op) {
  switch (op) {
    case Connective::Imp: return " -> ";
    case Connective::Or: return " | ";
    case Connective::And: return " & ";
    case Connective::Fusion: return " * ";
    default: return "";
  }
}

inline void print_into(const Formula& f, int min_level, std::string& out) {
  if (f.is_atom()) {
    out += f.name();
    return;
  }
  if (f.op() == Connective::Truth) {
    out += "t!";
    return;
  }
  const int lvl = level(f.op());
  const bool paren = lvl < min_level;
  if (paren) out += '(';
  // Every binary connective is right-associative.
  print_into(f.lhs(), lvl + 1, out);
  out += token(f.op());
  print_into(f.rhs(), lvl, out);
  if (paren) out += ')';
}
}  // namespace detail

inline std::set<std::string> letters(const Formula& f) {
  std::set<std::string> out;
  detail::collect_letters(f, out);
  return out;
}

/// Minimal-parenthesis rendering in the text grammar accepted by parse().
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_into(f, 0, out);
  return out;
}

}  // namespace relevanza
