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

// JSON file formats. Every reader throws InputError on malformed input.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "relevanza/errors.hpp"
#include "relevanza/extraction.hpp"
#include "relevanza/frame.hpp"
#include "relevanza/gridmodel.hpp"
#include "relevanza/hilbert.hpp"
#include "relevanza/parser.hpp"
#include "relevanza/semantics.hpp"
#include "relevanza/tiling.hpp"

namespace relevanza::io {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

inline Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

namespace detail {
template <typename T>
T get(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(what + ": field '" + key + "': " + e.what());
  }
}

inline PointSet point_set(const Json& arr, int size, const std::string& what) {
  if (!arr.is_array()) throw InputError(what + ": expected an array of elements");
  PointSet s = 0;
  for (const Json& v : arr) {
    if (!v.is_number_integer()) throw InputError(what + ": elements must be integers");
    const int x = v.get<int>();
    if (x < 0 || x >= size) throw InputError(what + ": element " + std::to_string(x) + " out of range");
    s |= singleton(x);
  }
  return s;
}
}  // namespace detail

// Frames: {"size": n, "normal": [..], "rel": [[x,y,z], ..]}

inline Frame frame_from_json(const Json& j) {
  const int size = detail::get<int>(j, "size", "frame");
  if (size < 1 || size > kMaxPoints) throw InputError("frame: size must be in 1..64");
  if (!j.contains("normal")) throw InputError("frame: missing field 'normal'");
  const PointSet normal = detail::point_set(j.at("normal"), size, "frame normal");
  if (!j.contains("rel") || !j.at("rel").is_array()) throw InputError("frame: missing array 'rel'");
  std::vector<Triple> rel;
  for (const Json& t : j.at("rel")) {
    if (!t.is_array() || t.size() != 3) throw InputError("frame: each triple needs three elements");
    for (const Json& v : t) {
      if (!v.is_number_integer()) throw InputError("frame: triple entries must be integers");
    }
    rel.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return Frame(size, normal, rel);
}

inline Json to_json(const Frame& f) {
  Json rel = Json::array();
  for (const Triple& t : f.triples()) rel.push_back({t[0], t[1], t[2]});
  return {{"size", f.size()}, {"normal", members(f.normal())}, {"rel", rel}};
}

// Semilattices: {"size": n, "zero": i, "join": [[row], ..]}

inline Semilattice semilattice_from_json(const Json& j) {
  const int size = detail::get<int>(j, "size", "semilattice");
  const int zero = detail::get<int>(j, "zero", "semilattice");
  const auto rows = detail::get<std::vector<std::vector<int>>>(j, "join", "semilattice");
  if (rows.size() != static_cast<std::size_t>(size)) throw InputError("semilattice: join needs one row per element");
  std::vector<int> table;
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(size)) throw InputError("semilattice: join rows must be square");
    table.insert(table.end(), r.begin(), r.end());
  }
  return Semilattice(size, zero, std::move(table));
}

inline Json to_json(const Semilattice& s) {
  Json rows = Json::array();
  for (int x = 0; x < s.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < s.size(); ++y) row.push_back(s.join(x, y));
    rows.push_back(row);
  }
  return {{"size", s.size()}, {"zero", s.zero()}, {"join", rows}};
}

// Valuations: {"letter": [elements], ..}

inline Valuation valuation_from_json(const Json& j, int size) {
  if (!j.is_object()) throw InputError("valuation: expected an object");
  Valuation v;
  for (const auto& [letter, arr] : j.items()) {
    if (!is_identifier(letter)) throw InputError("valuation: '" + letter + "' is not a letter");
    v.set(letter, detail::point_set(arr, size, "valuation of '" + letter + "'"));
  }
  return v;
}

inline Json to_json(const Valuation& v) {
  Json j = Json::object();
  for (const auto& [letter, set] : v.sets()) j[letter] = members(set);
  return j;
}

// Tile sets: {"tiles": [[w,e,n,s], ..]}

inline TileSet tileset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("tiles") || !j.at("tiles").is_array()) {
    throw InputError("tile set: missing array 'tiles'");
  }
  std::vector<Tile> tiles;
  for (const Json& t : j.at("tiles")) {
    if (!t.is_array() || t.size() != 4) throw InputError("tile set: each tile needs four colours [w,e,n,s]");
    for (const Json& c : t) {
      if (!c.is_number_unsigned()) throw InputError("tile set: colours must be non-negative integers");
    }
    tiles.push_back({t[0].get<Color>(), t[1].get<Color>(), t[2].get<Color>(), t[3].get<Color>()});
  }
  return TileSet(std::move(tiles));
}

inline Json to_json(const TileSet& ts) {
  Json tiles = Json::array();
  for (const Tile& t : ts.tiles()) tiles.push_back({t.west, t.east, t.north, t.south});
  return {{"tiles", tiles}};
}

// Tilings: {"region": "octant:3", "cells": [[m, n, tile], ..]}

inline Json to_json(const Tiling& t) {
  Json cells = Json::array();
  for (const auto& [c, tile] : t.assignment()) cells.push_back({c.m, c.n, tile});
  return {{"region", t.region().to_string()}, {"cells", cells}};
}

inline Tiling tiling_from_json(const Json& j) {
  Tiling t(parse_region(detail::get<std::string>(j, "region", "tiling")));
  for (const auto& c : detail::get<std::vector<std::vector<int>>>(j, "cells", "tiling")) {
    if (c.size() != 3) throw InputError("tiling: each cell needs [m, n, tile]");
    if (!t.region().contains({c[0], c[1]})) throw InputError("tiling: cell outside the region");
    t.set({c[0], c[1]}, c[2]);
  }
  return t;
}

// Periodic tilings: {"tileset": {...}, "p": 2, "q": 2, "window": [[..], ..]}
// window[n][m] holds the tile at (m, n); row 0 is the bottom row.

inline PeriodicTiling periodic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("tileset")) throw InputError("periodic tiling: missing 'tileset'");
  TileSet ts = tileset_from_json(j.at("tileset"));
  const int p = detail::get<int>(j, "p", "periodic tiling");
  const int q = detail::get<int>(j, "q", "periodic tiling");
  auto rows = detail::get<std::vector<std::vector<int>>>(j, "window", "periodic tiling");
  return make_periodic_tiling(std::move(ts), rows, p, q);
}

inline Json to_json(const PeriodicTiling& pt) {
  Json rows = Json::array();
  for (int n = 0; n <= pt.q; ++n) {
    Json row = Json::array();
    for (int m = 0; m <= pt.p; ++m) row.push_back(pt.window.at(m, n));
    rows.push_back(row);
  }
  return {{"tileset", to_json(pt.tileset)}, {"p", pt.p}, {"q", pt.q}, {"window", rows}};
}

// Proofs, one JSON object per line:
//   {"conclusion": "...", "rule_derivation": true}       (optional header)
//   {"kind": "axiom", "scheme": "2", "sub": {"phi": "p"}, "formula": "..."}
//   {"kind": "mp", "minor": 0, "major": 1}
//   {"kind": "adj", "left": 0, "right": 1}
//   {"kind": "prefix", "from": 0, "chi": "r"}        (also "suffix")
//   {"kind": "hypothesis", "formula": "p -> q"}
// Step indices are 0-based over step lines. "formula" is optional except on
// hypotheses.

namespace detail {
inline Formula formula_field(const Json& j, const char* key, const std::string& what) {
  const std::string text = get<std::string>(j, key, what);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(what + ": " + e.what());
  }
}
}  // namespace detail

inline ProofStep proof_step_from_json(const Json& j, std::size_t line) {
  const std::string what = "proof line " + std::to_string(line);
  const std::string kind = detail::get<std::string>(j, "kind", what);
  std::optional<Formula> claim;
  if (j.contains("formula")) claim = detail::formula_field(j, "formula", what);
  if (kind == "axiom") {
    Assignment sigma;
    if (j.contains("sub")) {
      if (!j.at("sub").is_object()) throw InputError(what + ": 'sub' must be an object");
      for (const auto& [var, text] : j.at("sub").items()) {
        if (!text.is_string()) throw InputError(what + ": substitution values must be formulas");
        try {
          sigma.emplace(var, parse(text.get<std::string>()));
        } catch (const ParseError& e) {
          throw InputError(what + ": " + e.what());
        }
      }
    }
    const std::string id = j.contains("scheme") ? detail::get<std::string>(j, "scheme", what) : "";
    return ProofStep::axiom(id, std::move(sigma), std::move(claim));
  }
  if (kind == "mp") {
    return ProofStep::mp(detail::get<int>(j, "minor", what), detail::get<int>(j, "major", what), std::move(claim));
  }
  if (kind == "adj") {
    return ProofStep::adj(detail::get<int>(j, "left", what), detail::get<int>(j, "right", what), std::move(claim));
  }
  if (kind == "prefix" || kind == "suffix") {
    const int from = detail::get<int>(j, "from", what);
    Formula chi = detail::formula_field(j, "chi", what);
    return kind == "prefix" ? ProofStep::prefix(from, std::move(chi), std::move(claim))
                            : ProofStep::suffix(from, std::move(chi), std::move(claim));
  }
  if (kind == "hypothesis") {
    if (!claim) throw InputError(what + ": hypothesis needs 'formula'");
    return ProofStep::hypothesis(*claim);
  }
  throw InputError(what + ": unknown step kind '" + kind + "'");
}

inline Proof proof_from_jsonl(const std::string& text) {
  Proof pr;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = parse_json(raw, "proof line " + std::to_string(line));
    if (j.is_object() && !j.contains("kind")) {
      if (j.contains("conclusion")) pr.conclusion = detail::formula_field(j, "conclusion", "proof header");
      if (j.contains("rule_derivation")) pr.rule_derivation = detail::get<bool>(j, "rule_derivation", "proof header");
      continue;
    }
    pr.steps.push_back(proof_step_from_json(j, line));
  }
  return pr;
}

inline Json to_json(const ProofStep& s) {
  Json j{{"kind", std::string(step_kind_name(s.kind))}};
  switch (s.kind) {
    case StepKind::Axiom: {
      if (!s.scheme.empty()) j["scheme"] = s.scheme;
      Json sub = Json::object();
      for (const auto& [var, f] : s.substitution) sub[var] = to_string(f);
      j["sub"] = sub;
      break;
    }
    case StepKind::MP: j["minor"] = s.i; j["major"] = s.j; break;
    case StepKind::Adj: j["left"] = s.i; j["right"] = s.j; break;
    case StepKind::Prefix:
    case StepKind::Suffix:
      j["from"] = s.i;
      if (s.chi) j["chi"] = to_string(*s.chi);
      break;
    case StepKind::Hypothesis: break;
  }
  if (s.formula) j["formula"] = to_string(*s.formula);
  return j;
}

inline std::string to_jsonl(const Proof& pr) {
  std::string out;
  if (pr.conclusion || pr.rule_derivation) {
    Json h = Json::object();
    if (pr.conclusion) h["conclusion"] = to_string(*pr.conclusion);
    if (pr.rule_derivation) h["rule_derivation"] = true;
    out += h.dump() + "\n";
  }
  for (const ProofStep& s : pr.steps) out += to_json(s).dump() + "\n";
  return out;
}

inline Json to_json(const ProofVerdict& v) {
  Json j{{"ok", v.ok}};
  if (!v.ok) {
    j["step"] = v.step;
    j["error"] = std::string(proof_error_name(v.error));
    j["reason"] = v.reason;
  }
  Json lines = Json::array();
  for (const Formula& f : v.lines) lines.push_back(to_string(f));
  j["lines"] = lines;
  Json hyps = Json::array();
  for (const Formula& f : v.hypotheses) hyps.push_back(to_string(f));
  j["hypotheses"] = hyps;
  return j;
}

// Certificates and traces

inline Json to_json(GridPoint g) { return Json::array({g.m, g.n}); }

inline Json to_json(const RefutationCertificate& c) {
  Json checks = Json::array();
  for (const SubCheck& s : c.checks) {
    Json j{{"name", s.name}, {"passed", s.passed}, {"cells_examined", s.cells_examined}};
    if (s.failing_cell) j["failing_cell"] = to_json(*s.failing_cell);
    if (!s.conjunct.empty()) j["conjunct"] = s.conjunct;
    if (!s.detail.empty()) j["detail"] = s.detail;
    checks.push_back(j);
  }
  return {{"passed", c.passed()}, {"checks", checks}};
}

inline Json to_json(const ExtractionTrace& t) {
  auto points = [](const std::map<Cell, int>& m) {
    Json arr = Json::array();
    for (const auto& [c, g] : m) arr.push_back({c.m, c.n, g});
    return arr;
  };
  Json triples = Json::array();
  for (const TracedTriple& r : t.triples) triples.push_back({{"label", r.label}, {"triple", {r.x, r.y, r.z}}});
  return {{"x", t.xs}, {"y", t.ys}, {"octant", points(t.octant)}, {"lower", points(t.lower)}, {"triples", triples}};
}

inline Json to_json(const CheckResult& r) {
  Json j{{"passed", r.passed}};
  if (!r.passed) j["witness"] = r.witness;
  return j;
}

}  // namespace relevanza::io
