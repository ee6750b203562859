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

// Satisfaction over finite frames. Evaluation computes the extension (set
// of satisfying points) of every subformula once per call.

#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relevanza/errors.hpp"
#include "relevanza/formula.hpp"
#include "relevanza/frame.hpp"

namespace relevanza {

/// Letters absent from the map denote the empty set.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, PointSet>> init) : sets_(init) {}
  explicit Valuation(std::map<std::string, PointSet> sets) : sets_(std::move(sets)) {}

  PointSet operator()(const std::string& letter) const {
    auto it = sets_.find(letter);
    return it == sets_.end() ? 0 : it->second;
  }
  void set(const std::string& letter, PointSet s) { sets_[letter] = s; }
  const std::map<std::string, PointSet>& sets() const { return sets_; }

 private:
  std::map<std::string, PointSet> sets_;
};

class Model {
 public:
  /// With `validate`, rejects valuations whose sets are not upsets.
  Model(Frame frame, Valuation valuation, bool validate = true)
      : frame_(std::move(frame)), valuation_(std::move(valuation)) {
    for (const auto& [letter, set] : valuation_.sets()) {
      if (!subset_of(set, frame_.universe())) throw InputError("valuation of '" + letter + "' leaves the universe");
    }
    if (validate) {
      const Preorder up = leq(frame_);
      for (const auto& [letter, set] : valuation_.sets()) {
        if (!is_upset(up, set)) throw InputError("valuation of '" + letter + "' is not an upset");
      }
    }
  }

  const Frame& frame() const { return frame_; }
  const Valuation& valuation() const { return valuation_; }

 private:
  Frame frame_;
  Valuation valuation_;
};

/// Computes extensions against one frame and valuation, memoised per node.
class Evaluator {
 public:
  Evaluator(const Frame& frame, const Valuation& valuation) : frame_(frame), valuation_(valuation) {}

  PointSet extension(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second.second;
    PointSet out = 0;
    switch (f.op()) {
      case Connective::Atom: out = valuation_(f.name()) & frame_.universe(); break;
      case Connective::Truth: out = frame_.normal(); break;
      case Connective::And: out = extension(f.lhs()) & extension(f.rhs()); break;
      case Connective::Or: out = extension(f.lhs()) | extension(f.rhs()); break;
      case Connective::Fusion: out = frame_.product(extension(f.lhs()), extension(f.rhs())); break;
      case Connective::Imp: {
        const PointSet ante = extension(f.lhs());
        const PointSet cons = extension(f.rhs());
        for (int x = 0; x < frame_.size(); ++x) {
          bool holds = true;
          for (PointSet ys = ante; ys != 0 && holds; ys &= ys - 1) {
            holds = subset_of(frame_.product(x, least(ys)), cons);
          }
          if (holds) out |= singleton(x);
        }
        break;
      }
    }
    memo_.emplace(f.id(), std::make_pair(f, out));
    return out;
  }

 private:
  const Frame& frame_;
  const Valuation& valuation_;
  // Holding the formula keeps its node alive, so an id is never reused.
  std::unordered_map<const void*, std::pair<Formula, PointSet>> memo_;
};

inline PointSet extension(const Frame& frame, const Valuation& v, const Formula& f) {
  return Evaluator(frame, v).extension(f);
}
inline PointSet extension(const Model& m, const Formula& f) { return extension(m.frame(), m.valuation(), f); }

inline bool satisfies(const Model& m, int x, const Formula& f) {
  if (x < 0 || x >= m.frame().size()) throw InputError("point out of range");
  return contains(extension(m, f), x);
}

/// Passes iff x |= f and x <= y imply y |= f; the witness is (x, y).
inline CheckResult check_persistence(const Model& m, const Formula& f) {
  const PointSet ext = extension(m, f);
  const Preorder up = leq(m.frame());
  for (int x = 0; x < m.frame().size(); ++x) {
    if (!contains(ext, x)) continue;
    if (PointSet d = up[x] & ~ext) return CheckResult::fail({x, least(d)});
  }
  return CheckResult::pass();
}

/// Least normal point refuting f, if any.
inline std::optional<int> model_refutes(const Model& m, const Formula& f) {
  const PointSet bad = m.frame().normal() & ~extension(m, f);
  if (bad == 0) return std::nullopt;
  return least(bad);
}

inline constexpr int kMaxUpsetEnumerationSize = 24;
inline constexpr std::size_t kMaxFrameValidValuations = 10'000'000;
inline constexpr std::size_t kMaxFrameValidLetters = 4;

/// All upsets in ascending mask order.
inline std::vector<PointSet> upsets(const Frame& f) {
  if (f.size() > kMaxUpsetEnumerationSize) throw BudgetError("too many points to enumerate upsets");
  const Preorder up = leq(f);
  std::vector<PointSet> out;
  for (PointSet s = 0; s <= full_set(f.size()); ++s) {
    if (is_upset(up, s)) out.push_back(s);
  }
  return out;
}

struct Refutation {
  Valuation valuation;
  int point;
};

/// Searches every upset valuation of f's letters for a refuting normal point.
/// Valuations are visited in lexicographic order of upset indices (first
/// letter slowest); the first refutation found is returned. `jobs` > 1 splits
/// the first letter's range across threads; the result stays deterministic.
inline std::optional<Refutation> find_refuting_valuation(const Frame& frame, const Formula& f, int jobs = 1) {
  const std::vector<std::string> names = [&] {
    auto s = letters(f);
    return std::vector<std::string>(s.begin(), s.end());
  }();
  if (names.size() > kMaxFrameValidLetters) throw BudgetError("frame validity is limited to 4 letters");
  const std::vector<PointSet> ups = upsets(frame);
  std::size_t total = 1;
  for (std::size_t i = 0; i < names.size(); ++i) {
    total *= ups.size();
    if (total > kMaxFrameValidValuations) throw BudgetError("valuation space exceeds 10^7");
  }

  auto search = [&](std::size_t begin, std::size_t end, std::atomic<std::size_t>* stop_before)
      -> std::optional<std::pair<std::size_t, Refutation>> {
    std::vector<std::size_t> digits(names.size(), 0);
    for (std::size_t code = begin; code < end; ++code) {
      if (stop_before && code >= stop_before->load()) break;
      std::size_t rest = code;
      for (std::size_t i = names.size(); i-- > 0;) {
        digits[i] = rest % ups.size();
        rest /= ups.size();
      }
      Valuation v;
      for (std::size_t i = 0; i < names.size(); ++i) v.set(names[i], ups[digits[i]]);
      const PointSet bad = frame.normal() & ~extension(frame, v, f);
      if (bad != 0) return std::make_pair(code, Refutation{std::move(v), least(bad)});
    }
    return std::nullopt;
  };

  if (jobs <= 1 || total < 1024) {
    auto r = search(0, total, nullptr);
    if (!r) return std::nullopt;
    return std::move(r->second);
  }
  std::atomic<std::size_t> best{total};
  std::vector<std::optional<std::pair<std::size_t, Refutation>>> found(jobs);
  std::vector<std::thread> pool;
  const std::size_t chunk = (total + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      const std::size_t b = std::min(total, chunk * j), e = std::min(total, chunk * (j + 1));
      found[j] = search(b, e, &best);
      if (found[j]) {
        std::size_t cur = best.load();
        while (found[j]->first < cur && !best.compare_exchange_weak(cur, found[j]->first)) {
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& r : found) {
    if (r && r->first == best.load()) return std::move(r->second);
  }
  return std::nullopt;
}

inline bool frame_valid(const Frame& frame, const Formula& f, int jobs = 1) {
  return !find_refuting_valuation(frame, f, jobs).has_value();
}

}  // namespace relevanza
