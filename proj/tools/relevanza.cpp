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

// relevanza: command-line front end.
//
// Exit codes: 0 success or pass, 1 checked and failed, 2 usage or input
// error, 3 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relevanza.hpp"

namespace {

using relevanza::io::Json;
namespace rz = relevanza;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Globals {
  bool text = false;
  int jobs = 1;
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.text) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::uint64_t seed_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("RELEVANZA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw rz::InputError("RELEVANZA_SEED must be an unsigned integer");
    }
  }
  return fallback;
}

rz::Formula parse_formula(const std::string& text) { return rz::parse(text); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string witness_text(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// Frame source shared by several commands: --frame or --semilattice.
struct FrameSource {
  std::string frame_path, semilattice_path;

  void add(CLI::App* cmd) {
    auto* f = cmd->add_option("--frame", frame_path, "frame JSON file");
    auto* s = cmd->add_option("--semilattice", semilattice_path, "semilattice JSON file");
    f->excludes(s);
  }
  rz::Frame load() const {
    if (!frame_path.empty()) return rz::io::frame_from_json(rz::io::load_json(frame_path));
    if (!semilattice_path.empty()) {
      return rz::semilattice_to_frame(rz::io::semilattice_from_json(rz::io::load_json(semilattice_path)));
    }
    throw rz::InputError("one of --frame or --semilattice is required");
  }
};

// ---------------------------------------------------------------- parse

int cmd_parse(const Globals& g, const std::string& text) {
  const rz::Formula f = parse_formula(text);
  const auto ls = rz::letters(f);
  Json j{{"formula", rz::to_string(f)}, {"letters", std::vector<std::string>(ls.begin(), ls.end())}};
  emit(g, j, rz::to_string(f));
  return kOk;
}

// ---------------------------------------------------------- frame-check

int cmd_frame_check(const Globals& g, const FrameSource& src, const std::string& conditions) {
  const rz::Frame f = src.load();
  std::vector<rz::Condition> conds;
  if (conditions.empty()) {
    conds.assign(rz::kAllConditions.begin(), rz::kAllConditions.end());
  } else {
    for (const std::string& name : split(conditions, ',')) conds.push_back(rz::parse_condition(name));
  }
  const rz::FrameAxiomReport ax = rz::check_frame_axioms(f);
  Json axioms{{"reflexivity", rz::io::to_json(ax.reflexivity)},
              {"transitivity", rz::io::to_json(ax.transitivity)},
              {"upset", rz::io::to_json(ax.upset)},
              {"down_down_up", rz::io::to_json(ax.down_down_up)}};
  std::ostringstream text;
  text << "frame axioms: " << (ax.ok() ? "pass" : "FAIL") << '\n';
  Json cj = Json::object();
  bool ok = ax.ok();
  for (rz::Condition c : conds) {
    const rz::CheckResult r = rz::check_condition(f, c);
    ok = ok && r.passed;
    cj[std::string(rz::condition_name(c))] = rz::io::to_json(r);
    text << rz::condition_name(c) << ": " << (r.passed ? "pass" : "FAIL " + witness_text(r.witness)) << '\n';
  }
  emit(g, {{"passed", ok}, {"axioms", axioms}, {"conditions", cj}}, text.str());
  return ok ? kOk : kFailed;
}

// ------------------------------------------------------------- validate

int cmd_validate(const Globals& g, const FrameSource& src, const std::string& formula, const std::string& val_path,
                 int point) {
  const rz::Frame f = src.load();
  const rz::Formula phi = parse_formula(formula);
  if (!val_path.empty()) {
    const rz::Model m(f, rz::io::valuation_from_json(rz::io::load_json(val_path), f.size()));
    if (point >= 0) {
      const bool holds = rz::satisfies(m, point, phi);
      emit(g, {{"point", point}, {"satisfied", holds}}, holds ? "satisfied" : "not satisfied");
      return holds ? kOk : kFailed;
    }
    const auto bad = rz::model_refutes(m, phi);
    Json j{{"valid_in_model", !bad}, {"extension", rz::members(rz::extension(m, phi))}};
    if (bad) j["refuting_point"] = *bad;
    emit(g, j, bad ? "refuted at normal point " + std::to_string(*bad) : "true at every normal point");
    return bad ? kFailed : kOk;
  }
  const auto ref = rz::find_refuting_valuation(f, phi, g.jobs);
  Json j{{"frame_valid", !ref}};
  std::string text = "frame valid";
  if (ref) {
    j["refutation"] = {{"valuation", rz::io::to_json(ref->valuation)}, {"point", ref->point}};
    text = "refuted at normal point " + std::to_string(ref->point) + " under " +
           rz::io::to_json(ref->valuation).dump();
  }
  emit(g, j, text);
  return ref ? kFailed : kOk;
}

// --------------------------------------------------------------- axioms

int cmd_axioms(const Globals& g, const std::string& preset_name, const std::string& match) {
  const rz::LogicPreset p = rz::preset(preset_name);
  if (!match.empty()) {
    const auto m = rz::match_axiom(parse_formula(match), p);
    Json j{{"preset", p.name}, {"matched", m.has_value()}};
    std::string text = "no scheme of " + p.name + " matches";
    if (m) {
      Json sub = Json::object();
      for (const auto& [var, f] : m->substitution) sub[var] = rz::to_string(f);
      j["scheme"] = m->scheme;
      j["substitution"] = sub;
      text = "scheme " + m->scheme + " " + sub.dump();
    }
    emit(g, j, text);
    return m ? kOk : kFailed;
  }
  Json arr = Json::array();
  std::ostringstream text;
  for (const std::string& id : p.axioms) {
    const rz::Scheme& s = rz::scheme(id);
    arr.push_back({{"id", s.id}, {"name", s.name}, {"formula", rz::to_string(s.formula)}});
    text << s.id << "\t" << rz::to_string(s.formula) << "\t(" << s.name << ")\n";
  }
  Json rules = Json::array();
  for (rz::Rule r : p.rules) rules.push_back(std::string(rz::rule_name(r)));
  emit(g, {{"preset", p.name}, {"axioms", arr}, {"rules", rules}}, text.str());
  return kOk;
}

// ---------------------------------------------------------------- prove

int cmd_prove(const Globals& g, const std::string& path, const std::string& preset_name, bool rule_derivation) {
  rz::Proof pr = rz::io::proof_from_jsonl(rz::io::read_file(path));
  if (rule_derivation) pr.rule_derivation = true;
  const rz::ProofVerdict v = rz::check_proof(pr, rz::preset(preset_name));
  std::string text = v.ok ? "ok" : "rejected at step " + std::to_string(v.step) + ": " +
                                       std::string(rz::proof_error_name(v.error)) + " (" + v.reason + ")";
  emit(g, rz::io::to_json(v), text);
  return v.ok ? kOk : kFailed;
}

// ----------------------------------------------------------- tile-solve

int cmd_tile_solve(const Globals& g, const std::string& tiles, const std::string& region, std::uint64_t budget) {
  const rz::TileSet ts = rz::io::tileset_from_json(rz::io::load_json(tiles));
  const rz::SolveResult r = rz::solve(ts, rz::parse_region(region), budget);
  Json j{{"status", std::string(rz::solve_status_name(r.status))}, {"nodes", r.nodes}};
  std::string text(rz::solve_status_name(r.status));
  if (r.tiling) {
    j["tiling"] = rz::io::to_json(*r.tiling);
    text = rz::render_text(*r.tiling);
  }
  emit(g, j, text);
  switch (r.status) {
    case rz::SolveStatus::Found: return kOk;
    case rz::SolveStatus::Unsatisfiable: return kFailed;
    case rz::SolveStatus::BudgetExhausted: return kBudget;
  }
  return kFailed;
}

// ---------------------------------------------------------- tile-render

int cmd_tile_render(const Globals& g, const std::string& tiles, const std::string& tiling, bool svg, int cell_px) {
  const rz::TileSet ts = rz::io::tileset_from_json(rz::io::load_json(tiles));
  const rz::Tiling t = rz::io::tiling_from_json(rz::io::load_json(tiling));
  rz::require_well_formed(t, ts);
  const rz::TilingCheck c = rz::validate_tiling(t, ts);
  if (svg) {
    std::cout << rz::render_svg(t, ts, cell_px);
  } else {
    Json j{{"valid", c.passed}, {"grid", rz::render_text(t)}};
    std::string text = rz::render_text(t);
    if (!c.passed) {
      const auto& v = *c.violation;
      j["violation"] = {{"from", {v.from.m, v.from.n}},
                        {"to", {v.to.m, v.to.n}},
                        {"direction", std::string(rz::direction_name(v.direction))}};
      text += "invalid: " + std::string(rz::direction_name(v.direction)) + " edge at (" + std::to_string(v.from.m) +
              "," + std::to_string(v.from.n) + ")\n";
    }
    emit(g, j, text);
  }
  return c.passed ? kOk : kFailed;
}

// --------------------------------------------------------------- reduce

int cmd_reduce(const Globals& g, const std::string& tiles, bool no_prune, bool emit_letters) {
  rz::TileSet ts = rz::io::tileset_from_json(rz::io::load_json(tiles));
  Json j = Json::object();
  if (!no_prune) {
    const rz::PruneResult pr = rz::prune_neighborless(ts);
    Json log = Json::array();
    for (const rz::PruneEntry& e : pr.log) {
      log.push_back({{"tile", e.original_index}, {"round", e.round}, {"missing", std::string(rz::direction_name(e.missing))}});
    }
    j["pruned"] = log;
    j["kept"] = pr.kept;
    if (pr.tiles.empty()) {
      j["formula"] = nullptr;
      emit(g, j, "tile set prunes to empty: it tiles no 3x3 square");
      return kFailed;
    }
    ts = pr.tiles;
  }
  const rz::Formula psi = rz::build_psi(ts);
  j["formula"] = rz::to_string(psi);
  std::string text = rz::to_string(psi);
  if (emit_letters) {
    Json letters = Json::object();
    std::ostringstream lt;
    for (const std::string& l : rz::reduction_letters(ts.size())) {
      std::string meaning;
      if (l == "x" || l == "y") meaning = "generator " + l;
      else if (l == "ptop") meaning = "top";
      else if (l[0] == 'm') meaning = "parity class (" + std::string(1, l[1]) + "," + std::string(1, l[2]) + ")";
      else meaning = "tile " + l.substr(1);
      letters[l] = meaning;
      lt << l << "\t" << meaning << '\n';
    }
    j["letters"] = letters;
    text = lt.str() + text;
  }
  emit(g, j, text);
  return kOk;
}

// ---------------------------------------------------------- grid-verify

int cmd_grid_verify(const Globals& g, const std::string& periodic, int window_bound) {
  const rz::PeriodicTiling pt = rz::io::periodic_from_json(rz::io::load_json(periodic));
  const rz::RefutationCertificate cert = rz::verify_refutation_periodic(pt);
  Json j = rz::io::to_json(cert);
  std::ostringstream text;
  for (const rz::SubCheck& c : cert.checks) {
    text << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.cells_examined << " cells)";
    if (c.failing_cell) text << " at " << rz::to_string(*c.failing_cell);
    text << '\n';
  }
  if (window_bound > 0) {
    const rz::TilingFormulas tf = rz::build_tiling_formulas(pt.tileset);
    const rz::Tri ante = rz::window_eval(pt, tf.antecedent, {0, 0}, window_bound);
    const rz::Tri full = rz::window_eval(pt, tf.psi, {0, 0}, window_bound);
    j["window"] = {{"bound", window_bound},
                   {"antecedent", std::string(rz::tri_name(ante))},
                   {"psi", std::string(rz::tri_name(full))}};
    text << "window " << window_bound << ": antecedent " << rz::tri_name(ante) << ", psi " << rz::tri_name(full)
         << '\n';
  }
  emit(g, j, text.str());
  return cert.passed() ? kOk : kFailed;
}

// --------------------------------------------------------- pmorph-check

int cmd_pmorph(const Globals& g, int universe, int bound, const std::string& dom, const std::string& cod,
               const std::string& map, const std::string& formula) {
  if (dom.empty() && cod.empty()) {
    const rz::PMorphismReport r = rz::check_pmorphism_bounded(universe, bound);
    Json j{{"passed", r.passed()},     {"forth_checked", r.forth_checked}, {"forth_failed", r.forth_failed},
           {"back_checked", r.back_checked}, {"back_failed", r.back_failed},  {"failures", r.failures}};
    std::ostringstream text;
    text << "forth " << r.forth_checked - r.forth_failed << "/" << r.forth_checked << ", back "
         << r.back_checked - r.back_failed << "/" << r.back_checked << '\n';
    for (const auto& f : r.failures) text << "  " << f << '\n';
    emit(g, j, text.str());
    return r.passed() ? kOk : kFailed;
  }
  if (dom.empty() || cod.empty() || map.empty()) throw rz::InputError("--dom, --cod and --map go together");
  const rz::Frame d = rz::io::frame_from_json(rz::io::load_json(dom));
  const rz::Frame c = rz::io::frame_from_json(rz::io::load_json(cod));
  std::vector<int> fmap;
  for (const std::string& v : split(map, ',')) {
    try {
      fmap.push_back(std::stoi(v));
    } catch (const std::exception&) {
      throw rz::InputError("--map must be a comma-separated list of integers");
    }
  }
  const rz::CheckResult r = rz::check_pmorphism(d, c, fmap);
  Json j{{"pmorphism", rz::io::to_json(r)}};
  std::string text = r.passed ? "p-morphism" : "not a p-morphism at " + witness_text(r.witness);
  if (!r.passed || formula.empty()) {
    emit(g, j, text);
    return r.passed ? kOk : kFailed;
  }
  const rz::TransportReport t = rz::transport_check(d, c, fmap, parse_formula(formula));
  j["transport"] = {{"passed", t.passed}, {"valuations", t.valuations}};
  if (!t.passed) {
    j["transport"]["failing_point"] = t.failing_point;
    j["transport"]["failing_valuation"] = rz::io::to_json(*t.failing_valuation);
  }
  text += t.passed ? "; transport holds over " + std::to_string(t.valuations) + " valuations"
                   : "; transport fails at point " + std::to_string(t.failing_point);
  emit(g, j, text);
  return t.passed ? kOk : kFailed;
}

// -------------------------------------------------------------- extract

struct ExtractArgs {
  std::string frame, valuation, tiles, periodic;
  int saturating = 0;
  int k = 2;
  int point = 0;
  bool descending = false;
};

int cmd_extract(const Globals& g, const ExtractArgs& a) {
  std::optional<rz::Model> model;
  rz::TileSet ts;
  Json source = Json::object();
  if (!a.periodic.empty()) {
    const rz::PeriodicTiling pt = rz::io::periodic_from_json(rz::io::load_json(a.periodic));
    ts = pt.tileset;
    if (a.saturating > 0) {
      rz::SaturatingProbe probe = rz::saturating_grid(a.saturating, pt);
      source = {{"kind", "saturating"}, {"bound", a.saturating}, {"axioms", probe.axioms.ok()},
                {"h", probe.h}, {"p", probe.p}, {"s", probe.s}};
      model.emplace(probe.model);
    } else {
      rz::QuotientModel qm = rz::quotient_model(pt);
      source = {{"kind", "quotient"}, {"size", qm.frame.size()}};
      model.emplace(qm.frame, qm.valuation);
    }
  } else {
    if (a.frame.empty() || a.valuation.empty() || a.tiles.empty()) {
      throw rz::InputError("extract needs --frame, --valuation and --tiles, or --periodic");
    }
    rz::Frame f = rz::io::frame_from_json(rz::io::load_json(a.frame));
    rz::Valuation v = rz::io::valuation_from_json(rz::io::load_json(a.valuation), f.size());
    ts = rz::io::tileset_from_json(rz::io::load_json(a.tiles));
    model.emplace(std::move(f), std::move(v));
    source = {{"kind", "files"}};
  }
  try {
    const rz::ExtractionResult r =
        rz::extract(*model, a.point, ts, a.k, a.descending ? rz::ScanOrder::Descending : rz::ScanOrder::Ascending);
    const bool valid = rz::validate_tiling(r.tiling, ts).passed;
    Json j{{"extracted", true}, {"source", source}, {"valid", valid}, {"tiling", rz::io::to_json(r.tiling)},
           {"grid", rz::render_text(r.tiling)}, {"trace", rz::io::to_json(r.trace)}};
    emit(g, j, rz::render_text(r.tiling) + (valid ? "" : "extracted tiling is INVALID\n"));
    return valid ? kOk : kFailed;
  } catch (const rz::PreconditionError& e) {
    emit(g, {{"extracted", false}, {"source", source}, {"reason", e.what()}}, std::string("not extracted: ") + e.what());
    return kFailed;
  }
}

// --------------------------------------------------------------- search

struct SearchArgs {
  std::string formula;
  int max_size = 2;
  int samples = 200;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 1;
  bool semilattices = false;
  std::string conditions;
};

int cmd_search(const Globals& g, const SearchArgs& a) {
  const rz::Formula phi = parse_formula(a.formula);
  std::vector<rz::Condition> filter;
  for (const std::string& name : split(a.conditions, ',')) filter.push_back(rz::parse_condition(name));
  const std::uint64_t seed = seed_or(a.seed);
  std::uint64_t examined = 0;
  std::optional<Json> found;
  bool exhausted = false;

  auto try_frame = [&](const rz::Frame& f, const Json& origin) {
    if (examined >= a.budget) {
      exhausted = true;
      return false;
    }
    ++examined;
    if (auto r = rz::find_refuting_valuation(f, phi, g.jobs)) {
      found = Json{{"origin", origin}, {"frame", rz::io::to_json(f)}, {"valuation", rz::io::to_json(r->valuation)},
                   {"point", r->point}};
      return false;
    }
    return true;
  };

  for (int size = 1; size <= a.max_size && !found && !exhausted; ++size) {
    if (a.semilattices) {
      for (const rz::Semilattice& s : rz::enumerate_semilattices(size)) {
        const rz::Frame f = rz::semilattice_to_frame(s);
        if (!rz::satisfies_all(f, filter)) continue;
        if (!try_frame(f, {{"semilattice", rz::io::to_json(s)}})) break;
      }
      continue;
    }
    const bool exhaustive = size <= rz::kMaxExhaustiveFrameSize;
    const rz::EnumerationMode mode = exhaustive ? rz::EnumerationMode::all()
                                                : rz::EnumerationMode::random(a.samples, seed + size);
    rz::for_each_frame(size, filter, mode, [&](const rz::Frame& f) {
      return try_frame(f, {{"size", size}, {"mode", exhaustive ? "exhaustive" : "random"}});
    });
  }
  Json j{{"examined", examined}, {"seed", seed}};
  if (found) {
    j["countermodel"] = *found;
    emit(g, j, "countermodel: " + found->dump());
    return kFailed;
  }
  if (exhausted) {
    j["status"] = "budget exhausted";
    emit(g, j, "budget exhausted after " + std::to_string(examined) + " frames");
    return kBudget;
  }
  j["status"] = "no countermodel";
  emit(g, j, "no countermodel among " + std::to_string(examined) + " frames");
  return kOk;
}

// --------------------------------------------------------- semilattices

int cmd_semilattices(const Globals& g, int size, const std::string& formula) {
  const std::vector<rz::Semilattice> all = rz::enumerate_semilattices(size);
  if (formula.empty()) {
    Json arr = Json::array();
    std::ostringstream text;
    for (const rz::Semilattice& s : all) {
      arr.push_back(rz::io::to_json(s));
      text << rz::io::to_json(s).dump() << '\n';
    }
    emit(g, {{"size", size}, {"count", all.size()}, {"semilattices", arr}},
         text.str() + std::to_string(all.size()) + " semilattices\n");
    return kOk;
  }
  const rz::Formula phi = parse_formula(formula);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (auto r = rz::find_refuting_valuation(rz::semilattice_to_frame(all[i]), phi, g.jobs)) {
      emit(g,
           {{"valid_on_all", false},
            {"semilattice", rz::io::to_json(all[i])},
            {"valuation", rz::io::to_json(r->valuation)},
            {"point", r->point}},
           "refuted on " + rz::io::to_json(all[i]).dump());
      return kFailed;
    }
  }
  emit(g, {{"valid_on_all", true}, {"count", all.size()}},
       "valid on all " + std::to_string(all.size()) + " semilattices of size " + std::to_string(size));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relevanza: relevant-logic and tiling workbench"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--text", g.text, "human-readable output instead of JSON");
  app.add_option("--jobs", g.jobs, "worker threads for parallel searches")->check(CLI::Range(1, 256));

  std::function<int()> run;

  std::string parse_text;
  auto* parse = app.add_subcommand("parse", "parse and print a formula");
  parse->add_option("formula", parse_text, "formula text")->required();
  parse->callback([&] { run = [&] { return cmd_parse(g, parse_text); }; });

  FrameSource fc_src;
  std::string fc_conditions;
  auto* fc = app.add_subcommand("frame-check", "check frame axioms and conditions");
  fc_src.add(fc);
  fc->add_option("--conditions", fc_conditions, "comma-separated conditions (default: all)");
  fc->callback([&] { run = [&] { return cmd_frame_check(g, fc_src, fc_conditions); }; });

  FrameSource va_src;
  std::string va_formula, va_valuation;
  int va_point = -1;
  auto* va = app.add_subcommand("validate", "frame validity, or truth in a model");
  va_src.add(va);
  va->add_option("--formula", va_formula, "formula")->required();
  va->add_option("--valuation", va_valuation, "valuation JSON file");
  va->add_option("--point", va_point, "evaluate at this point (needs --valuation)");
  va->callback([&] { run = [&] { return cmd_validate(g, va_src, va_formula, va_valuation, va_point); }; });

  std::string ax_preset = "R+", ax_match;
  auto* ax = app.add_subcommand("axioms", "list or match axiom schemes");
  ax->add_option("--preset", ax_preset, "B+, TWJ+, C+, T+, E+ or R+");
  ax->add_option("--match", ax_match, "formula to recognise");
  ax->callback([&] { run = [&] { return cmd_axioms(g, ax_preset, ax_match); }; });

  std::string pv_path, pv_preset = "B+";
  bool pv_rule = false;
  auto* pv = app.add_subcommand("prove", "check a Hilbert proof (JSON lines)");
  pv->add_option("--proof", pv_path, "proof file")->required();
  pv->add_option("--preset", pv_preset, "logic preset");
  pv->add_flag("--rule-derivation", pv_rule, "allow hypothesis steps");
  pv->callback([&] { run = [&] { return cmd_prove(g, pv_path, pv_preset, pv_rule); }; });

  std::string ts_tiles, ts_region;
  std::uint64_t ts_budget = rz::kDefaultSolveBudget;
  auto* tsv = app.add_subcommand("tile-solve", "search for a tiling of a region");
  tsv->add_option("--tiles", ts_tiles, "tile set JSON file")->required();
  tsv->add_option("--region", ts_region, "octant:K, strict-octant:K, quadrant:K, rect:WxH, window:X,Y,WxH")->required();
  tsv->add_option("--budget", ts_budget, "maximum tile placements");
  tsv->callback([&] { run = [&] { return cmd_tile_solve(g, ts_tiles, ts_region, ts_budget); }; });

  std::string tr_tiles, tr_tiling;
  bool tr_svg = false;
  int tr_px = 40;
  auto* trd = app.add_subcommand("tile-render", "validate and render a tiling");
  trd->add_option("--tiles", tr_tiles, "tile set JSON file")->required();
  trd->add_option("--tiling", tr_tiling, "tiling JSON file")->required();
  trd->add_flag("--svg", tr_svg, "emit SVG");
  trd->add_option("--cell-px", tr_px, "SVG cell size")->check(CLI::Range(4, 400));
  trd->callback([&] { run = [&] { return cmd_tile_render(g, tr_tiles, tr_tiling, tr_svg, tr_px); }; });

  std::string rd_tiles;
  bool rd_no_prune = false, rd_letters = false;
  auto* rd = app.add_subcommand("reduce", "emit the tiling formula of a tile set");
  rd->add_option("--tiles", rd_tiles, "tile set JSON file")->required();
  rd->add_flag("--no-prune", rd_no_prune, "skip removal of neighbourless tiles");
  rd->add_flag("--emit-letters", rd_letters, "list the letter mapping");
  rd->callback([&] { run = [&] { return cmd_reduce(g, rd_tiles, rd_no_prune, rd_letters); }; });

  std::string gv_path;
  int gv_bound = 0;
  auto* gv = app.add_subcommand("grid-verify", "certify the grid countermodel of a periodic tiling");
  gv->add_option("--periodic", gv_path, "periodic tiling JSON file")->required();
  gv->add_option("--window-bound", gv_bound, "also run the window evaluator up to this bound")
      ->check(CLI::Range(0, rz::kMaxWindowBound));
  gv->callback([&] { run = [&] { return cmd_grid_verify(g, gv_path, gv_bound); }; });

  int pm_universe = 14, pm_bound = 3;
  std::string pm_dom, pm_cod, pm_map, pm_formula;
  auto* pm = app.add_subcommand("pmorph-check", "bounded parity p-morphism check, or a map between frames");
  pm->add_option("--universe", pm_universe, "largest element available for witnesses");
  pm->add_option("--bound", pm_bound, "largest element in checked sets");
  pm->add_option("--dom", pm_dom, "domain frame JSON file");
  pm->add_option("--cod", pm_cod, "codomain frame JSON file");
  pm->add_option("--map", pm_map, "images of 0..n-1, comma separated");
  pm->add_option("--formula", pm_formula, "also check valuation transport for this formula");
  pm->callback([&] { run = [&] { return cmd_pmorph(g, pm_universe, pm_bound, pm_dom, pm_cod, pm_map, pm_formula); }; });

  ExtractArgs ex;
  auto* exc = app.add_subcommand("extract", "read an octant tiling off a refuting model");
  exc->add_option("--frame", ex.frame, "frame JSON file");
  exc->add_option("--valuation", ex.valuation, "valuation JSON file");
  exc->add_option("--tiles", ex.tiles, "tile set JSON file");
  exc->add_option("--periodic", ex.periodic, "use the finite quotient of this periodic tiling's grid model");
  exc->add_option("--saturating", ex.saturating, "with --periodic: use the saturating grid of this bound instead");
  exc->add_option("--k", ex.k, "octant size")->check(CLI::Range(0, 64));
  exc->add_option("--point", ex.point, "starting point g00");
  exc->add_flag("--descending", ex.descending, "scan witnesses in descending order");
  exc->callback([&] { run = [&] { return cmd_extract(g, ex); }; });

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "look for a finite countermodel");
  se->add_option("--formula", sa.formula, "formula")->required();
  se->add_option("--max-size", sa.max_size, "largest frame size")->check(CLI::Range(1, 6));
  se->add_option("--samples", sa.samples, "random frames per size above 2");
  se->add_option("--budget", sa.budget, "maximum frames examined");
  se->add_option("--seed", sa.seed, "sampling seed (RELEVANZA_SEED overrides)");
  se->add_option("--conditions", sa.conditions, "only frames satisfying these conditions");
  se->add_flag("--semilattices", sa.semilattices, "search semilattice frames instead");
  se->callback([&] { run = [&] { return cmd_search(g, sa); }; });

  int sl_size = 4;
  std::string sl_formula;
  auto* sl = app.add_subcommand("semilattices", "enumerate semilattices up to isomorphism");
  sl->add_option("--size", sl_size, "number of elements")->check(CLI::Range(1, rz::kMaxSemilatticeSize));
  sl->add_option("--validate", sl_formula, "check a formula on every listed semilattice");
  sl->callback([&] { run = [&] { return cmd_semilattices(g, sl_size, sl_formula); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const rz::BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const rz::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
