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
using rz::Frame;
using rz::parse;

namespace {

Frame footnote_frame() { return Frame(2, rz::singleton(0), {{0, 0, 0}, {0, 1, 1}}); }

std::map<std::string, std::set<int>> as_sets(const rz::Valuation& v) {
  std::map<std::string, std::set<int>> out;
  for (const auto& [l, s] : v.sets()) {
    const auto ms = rz::members(s);
    out[l] = std::set<int>(ms.begin(), ms.end());
  }
  return out;
}

rz::Valuation random_upset_valuation(std::mt19937_64& rng, const Frame& f, const std::vector<std::string>& ls) {
  const auto ups = rz::upsets(f);
  rz::Valuation v;
  for (const auto& l : ls) v.set(l, ups[rng() % ups.size()]);
  return v;
}

TEST(Satisfies, FootnoteExamples) {
  const rz::Model m1(footnote_frame(), {{"p", rz::singleton(1)}});
  EXPECT_TRUE(rz::satisfies(m1, 0, parse("p -> p")));
  const rz::Model m2(footnote_frame(), {{"p", 0b11}});
  EXPECT_TRUE(rz::satisfies(m2, 0, parse("p * p")));
  EXPECT_THROW(rz::satisfies(m2, 2, parse("p")), rz::InputError);
}

TEST(Satisfies, TruthIsNormality) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Frame f = rz::enumerate_frames(3, {}, rz::EnumerationMode::random(1, i))[0];
    const rz::Model m(f, {});
    for (int x = 0; x < f.size(); ++x) EXPECT_EQ(rz::satisfies(m, x, rz::Formula::truth()), rz::contains(f.normal(), x));
  }
}

TEST(Satisfies, AgreesWithNaiveEvaluator) {
  std::mt19937_64 rng(4);
  const std::vector<std::string> ls = {"p", "q", "r"};
  for (int size = 1; size <= 4; ++size) {
    const auto frames = size <= 2 ? rz::enumerate_frames(size, {}, rz::EnumerationMode::all())
                                  : rz::enumerate_frames(size, {}, rz::EnumerationMode::random(150, size));
    for (const Frame& f : frames) {
      const oracle::Naive o(f);
      for (int k = 0; k < 6; ++k) {
        const rz::Valuation v = random_upset_valuation(rng, f, ls);
        const rz::Model m(f, v);
        const rz::Formula phi = oracle::random_formula(rng, ls, 4);
        const auto sv = as_sets(v);
        for (int x = 0; x < f.size(); ++x) ASSERT_EQ(rz::satisfies(m, x, phi), o.sat(sv, x, phi)) << rz::to_string(phi);
      }
    }
  }
}

TEST(Persistence, HoldsOnValidModels) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> ls = {"p", "q"};
  for (int i = 0; i < 600; ++i) {
    const Frame f = rz::enumerate_frames(2 + i % 3, {}, rz::EnumerationMode::random(1, 100 + i))[0];
    const rz::Model m(f, random_upset_valuation(rng, f, ls));
    ASSERT_TRUE(rz::check_persistence(m, oracle::random_formula(rng, ls, 4)).passed);
  }
  EXPECT_TRUE(rz::check_persistence(rz::Model(footnote_frame(), {}), rz::Formula::truth()).passed);
}

TEST(Persistence, CanFailWithoutUpsetValuation) {
  // 0 <= 1 here, so {0} is not an upset.
  const Frame f(2, rz::singleton(0), {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
  ASSERT_EQ(rz::leq(f)[0], rz::PointSet{0b11});
  EXPECT_THROW(rz::Model(f, {{"p", rz::singleton(0)}}), rz::InputError);
  const rz::Model bad(f, {{"p", rz::singleton(0)}}, false);
  const rz::CheckResult r = rz::check_persistence(bad, parse("p"));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1}));
}

TEST(ModelRefutes, Examples) {
  const rz::Model m(footnote_frame(), {{"p", rz::singleton(1)}});
  const rz::Formula f = parse("(p -> p) -> p");
  const oracle::Naive o(footnote_frame());
  const bool oracle_refutes = !o.sat(as_sets(m.valuation()), 0, f);
  EXPECT_TRUE(oracle_refutes);
  EXPECT_EQ(rz::model_refutes(m, f), std::optional<int>(0));
  EXPECT_FALSE(rz::model_refutes(m, parse("p -> p")).has_value());
}

TEST(ModelRefutes, ImplicationShortcut) {
  std::mt19937_64 rng(6);
  const std::vector<std::string> ls = {"p", "q"};
  for (int i = 0; i < 100; ++i) {
    const Frame f = rz::enumerate_frames(3, {}, rz::EnumerationMode::random(1, 500 + i))[0];
    const rz::Model m(f, random_upset_valuation(rng, f, ls));
    const rz::Formula a = oracle::random_formula(rng, ls, 2), b = oracle::random_formula(rng, ls, 2);
    const rz::PointSet ea = rz::extension(m, a), eb = rz::extension(m, b);
    EXPECT_EQ(rz::model_refutes(m, rz::imp(a, b)).has_value(), (ea & ~eb) != 0);
  }
}

TEST(FrameValid, Examples) {
  const Frame f = footnote_frame();
  EXPECT_TRUE(rz::frame_valid(f, parse("p -> p")));
  EXPECT_TRUE(rz::frame_valid(f, parse("(p -> q) & (q -> r) -> (p -> r)")));
  const auto ref = rz::find_refuting_valuation(f, parse("p & (p -> q) -> q"));
  ASSERT_TRUE(ref.has_value());
  EXPECT_FALSE(rz::satisfies(rz::Model(f, ref->valuation), ref->point, parse("p & (p -> q) -> q")));
}

TEST(FrameValid, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(8);
  const std::vector<std::string> ls = {"p", "q"};
  for (const Frame& f : rz::enumerate_frames(2, {}, rz::EnumerationMode::all())) {
    for (int k = 0; k < 8; ++k) {
      const rz::Formula phi = oracle::random_formula(rng, ls, 3);
      ASSERT_EQ(rz::frame_valid(f, phi), oracle::Naive(f).frame_valid(phi)) << rz::to_string(phi);
    }
  }
}

TEST(FrameValid, ParallelSearchIsDeterministic) {
  std::mt19937_64 rng(9);
  const std::vector<std::string> ls = {"p", "q", "r", "s"};
  for (int i = 0; i < 20; ++i) {
    const Frame f = rz::enumerate_frames(4, {}, rz::EnumerationMode::random(1, 900 + i))[0];
    const rz::Formula phi = oracle::random_formula(rng, ls, 3, false, false);
    const auto a = rz::find_refuting_valuation(f, phi, 1);
    const auto b = rz::find_refuting_valuation(f, phi, 4);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->point, b->point);
      EXPECT_EQ(a->valuation.sets(), b->valuation.sets());
    }
  }
}

TEST(FrameValid, Budget) {
  EXPECT_THROW(rz::frame_valid(footnote_frame(), parse("a & b & c & d & e -> a")), rz::BudgetError);
}

TEST(Upsets, AscendingAndClosed) {
  const Frame f = rz::semilattice_to_frame(rz::Semilattice(2, 0, {0, 1, 1, 1}));
  EXPECT_EQ(rz::upsets(f), (std::vector<rz::PointSet>{0, 1, 2, 3}));
  const Frame g(2, rz::singleton(0), {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(rz::upsets(g), (std::vector<rz::PointSet>{0, 2, 3}));
}

}  // namespace
