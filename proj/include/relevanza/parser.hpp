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

// Recursive-descent parser for the formula grammar
//
//   imp  := or ("->" imp)?
//   or   := and ("|" or)?
//   and  := fus ("&" and)?
//   fus  := atom ("*" fus)?
//   atom := IDENT | "t!" | "(" imp ")"
//
// All binary connectives associate to the right.

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "relevanza/errors.hpp"
#include "relevanza/formula.hpp"

namespace relevanza {

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept("->")) return imp(lhs, parse_imp());
    return lhs;
  }
  Formula parse_or() {
    Formula lhs = parse_and();
    if (accept("|")) return disj(lhs, parse_or());
    return lhs;
  }
  Formula parse_and() {
    Formula lhs = parse_fus();
    if (accept("&")) return conj(lhs, parse_and());
    return lhs;
  }
  Formula parse_fus() {
    Formula lhs = parse_atom();
    if (accept("*")) return fuse(lhs, parse_fus());
    return lhs;
  }
  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula inner = parse_imp();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a formula");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "t" && pos_ < text_.size() && text_[pos_] == '!') {
      ++pos_;
      return Formula::truth();
    }
    return atom(std::move(name));
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text`; throws ParseError carrying the offending offset.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace relevanza
