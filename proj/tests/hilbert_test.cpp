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

#include <gtest/gtest.h>

#include <random>

#include "relevanza.hpp"
#include "support/oracles.hpp"

namespace rz = relevanza;
using rz::parse;
using rz::ProofError;
using rz::ProofStep;

namespace {

bool has_formula(const std::vector<rz::Formula>& fs, const std::string& text) {
  return std::find(fs.begin(), fs.end(), parse(text)) != fs.end();
}

TEST(Presets, Contents) {
  const auto twj = rz::preset_axioms(rz::preset("TWJ+"));
  EXPECT_TRUE(has_formula(twj, "(phi -> psi) & (psi -> chi) -> (phi -> chi)"));
  EXPECT_TRUE(has_formula(rz::preset_axioms(rz::preset("R+")), "phi -> (phi -> psi) -> psi"));
  const rz::LogicPreset b = rz::preset("B+");
  for (const char* id : {"9", "10", "11"}) EXPECT_FALSE(b.has_axiom(id));
  EXPECT_EQ(b.rules.size(), 4U);
  EXPECT_FALSE(rz::preset("TWJ+").has_rule(rz::Rule::Prefix));
  EXPECT_THROW(rz::preset("K"), rz::InputError);
}

TEST(Presets, CumulativeChain) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> added = {
      {"C+", {"13"}}, {"T+", {"14"}}, {"E+", {"15a", "15b"}}, {"R+", {"16"}}};
  std::vector<std::string> expected = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"};
  EXPECT_EQ(rz::preset("TWJ+").axioms, expected);
  for (const auto& [name, extra] : added) {
    expected.insert(expected.end(), extra.begin(), extra.end());
    EXPECT_EQ(rz::preset(name).axioms, expected) << name;
  }
}

TEST(Presets, ESchemeIsExpanded) {
  EXPECT_EQ(rz::scheme("15b").formula,
            parse("((phi -> phi) -> phi) & ((psi -> psi) -> psi) -> ((phi & psi -> phi & psi) -> phi & psi)"));
  EXPECT_THROW(rz::scheme("12"), rz::InputError);
}

TEST(MatchAxiom, Examples) {
  const auto m1 = rz::match_axiom(parse("p & q -> p & q"), rz::preset("TWJ+"));
  ASSERT_TRUE(m1);
  EXPECT_EQ(m1->scheme, "1");
  EXPECT_EQ(m1->substitution.at("phi"), parse("p & q"));

  EXPECT_FALSE(rz::match_axiom(parse("p & (p -> q) -> q"), rz::preset("TWJ+")));
  const auto m13 = rz::match_axiom(parse("p & (p -> q) -> q"), rz::preset("C+"));
  ASSERT_TRUE(m13);
  EXPECT_EQ(m13->scheme, "13");

  for (const auto& name : rz::preset_names()) {
    const auto m2 = rz::match_axiom(parse("p & q -> p"), rz::preset(name));
    ASSERT_TRUE(m2) << name;
    EXPECT_EQ(m2->scheme, "2");
  }
}

TEST(MatchAxiom, InstancesAreRecognised) {
  std::mt19937_64 rng(21);
  const rz::LogicPreset r = rz::preset("R+");
  for (const auto& id : r.axioms) {
    const rz::Formula& sch = rz::scheme(id).formula;
    for (int i = 0; i < 50; ++i) {
      rz::Assignment sigma;
      for (const auto& meta : rz::letters(sch)) sigma.emplace(meta, oracle::random_formula(rng, {"p", "q"}, 2));
      const rz::Formula inst = rz::substitute(sch, sigma);
      const auto m = rz::match_axiom(inst, r);
      ASSERT_TRUE(m) << rz::to_string(inst);
      EXPECT_EQ(rz::substitute(rz::scheme(m->scheme).formula, m->substitution), inst);
      EXPECT_LE(std::stoi(m->scheme), std::stoi(id));
    }
  }
}

TEST(MatchAxiom, RequiresConsistentMetavariables) {
  EXPECT_FALSE(rz::match_axiom(parse("p -> q"), rz::preset("R+")));
}

rz::Proof adj_proof() {
  rz::Proof pr;
  pr.steps = {ProofStep::axiom("1", {{"phi", parse("p")}}),
              ProofStep::axiom("2", {{"phi", parse("p")}, {"psi", parse("q")}}), ProofStep::adj(0, 1)};
  pr.conclusion = parse("(p -> p) & (p & q -> p)");
  return pr;
}

// Hypothetical-syllogism rule in B+: from p -> q and q -> r infer p -> r,
// using conjunction elimination (2, 3), modus ponens and suffixing.
rz::Proof hs_rule_proof() {
  const rz::Formula pq = parse("p -> q"), qr = parse("q -> r");
  rz::Proof pr;
  pr.rule_derivation = true;
  pr.steps = {ProofStep::hypothesis(pq),
              ProofStep::hypothesis(qr),
              ProofStep::adj(0, 1),
              ProofStep::axiom("2", {{"phi", pq}, {"psi", qr}}),
              ProofStep::mp(2, 3, pq),
              ProofStep::axiom("3", {{"phi", pq}, {"psi", qr}}),
              ProofStep::mp(2, 5, qr),
              ProofStep::suffix(4, parse("r"), parse("(q -> r) -> (p -> r)")),
              ProofStep::mp(6, 7, parse("p -> r"))};
  pr.conclusion = parse("p -> r");
  return pr;
}

TEST(CheckProof, AdjunctionProof) {
  const rz::ProofVerdict v = rz::check_proof(adj_proof(), rz::preset("TWJ+"));
  EXPECT_TRUE(v.ok) << v.reason;
  EXPECT_EQ(v.lines.size(), 3U);
}

TEST(CheckProof, HypotheticalSyllogismRule) {
  const rz::ProofVerdict v = rz::check_proof(hs_rule_proof(), rz::preset("B+"));
  EXPECT_TRUE(v.ok) << v.reason;
  EXPECT_EQ(v.hypotheses, (std::vector<rz::Formula>{parse("p -> q"), parse("q -> r")}));
}

TEST(CheckProof, SwappedModusPonens) {
  rz::Proof pr = hs_rule_proof();
  std::swap(pr.steps[4].i, pr.steps[4].j);
  const rz::ProofVerdict v = rz::check_proof(pr, rz::preset("B+"));
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.step, 4);
  EXPECT_EQ(v.error, ProofError::NotImplication);

  rz::Proof pr2 = hs_rule_proof();
  std::swap(pr2.steps[8].i, pr2.steps[8].j);
  const rz::ProofVerdict v2 = rz::check_proof(pr2, rz::preset("B+"));
  EXPECT_EQ(v2.step, 8);
  EXPECT_EQ(v2.error, ProofError::PremiseMismatch);
}

TEST(CheckProof, WrongSubstitution) {
  rz::Proof pr = hs_rule_proof();
  pr.steps[3].substitution.insert_or_assign("psi", parse("r"));
  const rz::ProofVerdict v = rz::check_proof(pr, rz::preset("B+"));
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.step, 4);
  EXPECT_EQ(v.error, ProofError::PremiseMismatch);

  rz::Proof claimed = hs_rule_proof();
  claimed.steps[3].formula = parse("(p -> q) & (q -> r) -> p -> q");
  claimed.steps[3].substitution.insert_or_assign("phi", parse("q"));
  const rz::ProofVerdict c = rz::check_proof(claimed, rz::preset("B+"));
  EXPECT_EQ(c.step, 3);
  EXPECT_EQ(c.error, ProofError::ClaimMismatch);
}

TEST(CheckProof, ErrorPaths) {
  const rz::LogicPreset b = rz::preset("B+");
  EXPECT_EQ(rz::check_proof({}, b).error, ProofError::EmptyProof);

  rz::Proof hyp;
  hyp.steps = {ProofStep::hypothesis(parse("p"))};
  EXPECT_EQ(rz::check_proof(hyp, b).error, ProofError::HypothesisNotAllowed);

  rz::Proof range;
  range.steps = {ProofStep::axiom("1", {{"phi", parse("p")}}), ProofStep::mp(0, 1)};
  const auto vr = rz::check_proof(range, b);
  EXPECT_EQ(vr.error, ProofError::IndexOutOfRange);
  EXPECT_EQ(vr.step, 1);

  rz::Proof unmatched;
  unmatched.steps = {ProofStep::axiom("", {}, parse("p -> q"))};
  EXPECT_EQ(rz::check_proof(unmatched, b).error, ProofError::UnmatchedAxiom);

  rz::Proof recognised;
  recognised.steps = {ProofStep::axiom("", {}, parse("p & q -> q"))};
  EXPECT_TRUE(rz::check_proof(recognised, b).ok);

  rz::Proof foreign;
  foreign.steps = {ProofStep::axiom("16", {{"phi", parse("p")}, {"psi", parse("q")}})};
  EXPECT_EQ(rz::check_proof(foreign, b).error, ProofError::SchemeNotInPreset);

  rz::Proof partial;
  partial.steps = {ProofStep::axiom("2", {{"phi", parse("p")}})};
  EXPECT_EQ(rz::check_proof(partial, b).error, ProofError::IncompleteSubstitution);

  rz::Proof rule = hs_rule_proof();
  const auto vt = rz::check_proof(rule, rz::preset("TWJ+"));
  EXPECT_EQ(vt.error, ProofError::RuleNotAvailable);
  EXPECT_EQ(vt.step, 7);

  rz::Proof concl = adj_proof();
  concl.conclusion = parse("p");
  const auto vc = rz::check_proof(concl, b);
  EXPECT_EQ(vc.error, ProofError::ConclusionMismatch);
  EXPECT_EQ(vc.step, 3);
}

TEST(CheckProof, PrefixRuleShape) {
  rz::Proof pr;
  pr.steps = {ProofStep::axiom("2", {{"phi", parse("p")}, {"psi", parse("q")}}),
              ProofStep::prefix(0, parse("r"), parse("(r -> p & q) -> (r -> p)"))};
  EXPECT_TRUE(rz::check_proof(pr, rz::preset("B+")).ok);
}

TEST(CheckProof, StableUnderAppendingValidSteps) {
  std::mt19937_64 rng(22);
  const rz::LogicPreset b = rz::preset("B+");
  for (int i = 0; i < 200; ++i) {
    rz::Proof pr = i % 2 ? hs_rule_proof() : adj_proof();
    pr.conclusion.reset();
    const int extra = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < extra; ++k) {
      const std::string id = b.axioms[rng() % b.axioms.size()];
      rz::Assignment sigma;
      for (const auto& meta : rz::letters(rz::scheme(id).formula)) {
        sigma.emplace(meta, oracle::random_formula(rng, {"p", "q"}, 2, false, false));
      }
      pr.steps.push_back(ProofStep::axiom(id, sigma));
      if (rng() % 2) {
        const int n = static_cast<int>(pr.steps.size());
        pr.steps.push_back(ProofStep::adj(static_cast<int>(rng() % n), static_cast<int>(rng() % n)));
      }
    }
    ASSERT_TRUE(rz::check_proof(pr, b).ok);
  }
}

TEST(CheckProof, MutationsFailNoEarlierThanTheMutatedStep) {
  std::mt19937_64 rng(23);
  const rz::LogicPreset b = rz::preset("B+");
  const rz::Proof base = hs_rule_proof();
  for (int i = 0; i < 500; ++i) {
    rz::Proof pr = base;
    const int k = static_cast<int>(rng() % pr.steps.size());
    ProofStep& s = pr.steps[k];
    s.i = static_cast<int>(rng() % 10) - 1;
    s.j = static_cast<int>(rng() % 10) - 1;
    const rz::ProofVerdict v = rz::check_proof(pr, b);
    if (!v.ok) {
      ASSERT_GE(v.step, k);
    }
  }
}

TEST(Soundness, PresetAxiomsHoldOnConditionFrames) {
  using rz::Condition;
  const rz::Assignment distinct = {{"phi", parse("p")}, {"psi", parse("q")}, {"chi", parse("r")}};
  const std::vector<Condition> hps = {Condition::H, Condition::P, Condition::S};
  std::vector<Condition> all = hps;
  all.insert(all.end(), {Condition::PseudoMP, Condition::Contraction, Condition::ECond, Condition::Assertion});
  for (const auto& [name, filter] : {std::pair{std::string("TWJ+"), hps}, std::pair{std::string("R+"), all}}) {
    for (int n = 1; n <= 2; ++n) {
      for (const rz::Frame& f : rz::enumerate_frames(n, filter, rz::EnumerationMode::all())) {
        for (const auto& id : rz::preset(name).axioms) {
          EXPECT_TRUE(rz::frame_valid(f, rz::substitute(rz::scheme(id).formula, distinct))) << name << " " << id;
        }
      }
    }
  }
}

}  // namespace
