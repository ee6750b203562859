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

// Reading octant tilings off finite models that satisfy (h), (p), (s) and
// refute the tiling formula at some point.

#pragma once

#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relevanza/errors.hpp"
#include "relevanza/frame.hpp"
#include "relevanza/gridmodel.hpp"
#include "relevanza/reduction.hpp"
#include "relevanza/semantics.hpp"
#include "relevanza/tiling.hpp"

namespace relevanza {

class NoWitness : public PreconditionError {
 public:
  NoWitness(std::string phase, std::vector<int> indices)
      : PreconditionError("no witness in phase " + phase + describe(indices)),
        phase_(std::move(phase)),
        indices_(std::move(indices)) {}
  const std::string& phase() const { return phase_; }
  const std::vector<int>& indices() const { return indices_; }

 private:
  static std::string describe(const std::vector<int>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : " at ") + std::to_string(idx[i]);
    return s;
  }
  std::string phase_;
  std::vector<int> indices_;
};

class TileReadError : public PreconditionError {
 public:
  TileReadError(int m, int n)
      : PreconditionError("octant point (" + std::to_string(m) + "," + std::to_string(n) + ") satisfies no tile letter"),
        cell_{m, n} {}
  Cell cell() const { return cell_; }

 private:
  Cell cell_;
};

enum class ScanOrder { Ascending, Descending };

namespace detail {
inline std::vector<int> scan(int size, ScanOrder order) {
  std::vector<int> out(size);
  for (int i = 0; i < size; ++i) out[i] = order == ScanOrder::Ascending ? i : size - 1 - i;
  return out;
}
}  // namespace detail

/// Given g b1 -> a1, a1 b2 -> a2, ..., returns a'1..a'n with g b1 -> a'1,
/// a'i b(i+1) -> a'(i+1) and g a'i -> ai, taking the first witness found.
inline std::vector<int> inf_chain_rebase(const Frame& f, int g, const std::vector<int>& b, const std::vector<int>& a,
                                         ScanOrder order = ScanOrder::Ascending) {
  if (a.size() != b.size()) throw InputError("chain lists differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int from = i == 0 ? g : a[i - 1];
    if (!f.related(from, b[i], a[i])) {
      throw NoWitness("chain", {static_cast<int>(i + 1)});
    }
  }
  std::vector<int> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int left = i == 0 ? g : out[i - 1];
    PointSet found = 0;
    for_each_point(f.product(left, b[i]), [&](int w) {
      if (f.related(g, w, a[i])) found |= singleton(w);
    });
    if (found == 0) throw NoWitness("rebase", {static_cast<int>(i + 1)});
    out.push_back(order == ScanOrder::Ascending ? std::countr_zero(found) : std::bit_width(found) - 1);
  }
  return out;
}

inline bool check_antecedent_finite(const Model& m, int g, const TileSet& ts) {
  return satisfies(m, g, build_tiling_formulas(ts).antecedent);
}

struct TracedTriple {
  std::string label;
  int x, y, z;
};

struct ExtractionTrace {
  std::vector<int> xs, ys;                 // x_1..x_k, y_1..y_k
  std::map<Cell, int> octant;              // g_{m,n} for 0 <= m <= n <= k
  std::map<Cell, int> lower;               // final g_{i+1,i}
  std::vector<TracedTriple> triples;       // every relation instance relied on
};

struct ExtractionResult {
  Tiling tiling;
  ExtractionTrace trace;
};

/// Parts I-IV of the staircase construction. Preconditions are checked
/// before any search: (h), (p), (s) on the frame, the antecedent at g00 and
/// a refutation of the consequent at g00.
inline ExtractionResult extract(const Model& model, int g00, const TileSet& ts, int k,
                                ScanOrder order = ScanOrder::Ascending) {
  const Frame& f = model.frame();
  if (k < 0) throw InputError("k must be non-negative");
  if (g00 < 0 || g00 >= f.size()) throw InputError("g00 out of range");
  for (Condition c : {Condition::H, Condition::P, Condition::S}) {
    if (!check_condition(f, c).passed) {
      throw PreconditionError("frame fails condition " + std::string(condition_name(c)));
    }
  }
  const TilingFormulas tf = build_tiling_formulas(ts);
  Evaluator ev(f, model.valuation());
  if (!contains(ev.extension(tf.antecedent), g00)) throw PreconditionError("antecedent fails at g00");

  const PointSet xp = ev.extension(tf.xprime), yp = ev.extension(tf.yprime);
  PointSet comp[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) comp[i][j] = ev.extension(tf.comp[i][j]);
  }
  const std::vector<int> points = detail::scan(f.size(), order);

  // Base: g00 x1 -> g10 with x1 |= x' and g10 |/= m^c_10.
  std::optional<std::pair<int, int>> base;
  for (int x : points) {
    if (!contains(xp, x)) continue;
    for (int z : points) {
      if (f.related(g00, x, z) && !contains(comp[1][0], z)) {
        base = {x, z};
        break;
      }
    }
    if (base) break;
  }
  if (!base) throw PreconditionError("consequent is not refuted at g00");

  ExtractionResult res{Tiling(Region::strict_upper_octant(k)), {}};
  ExtractionTrace& tr = res.trace;
  auto record = [&](std::string label, int x, int y, int z) { tr.triples.push_back({std::move(label), x, y, z}); };
  tr.octant[{0, 0}] = g00;
  if (k == 0) return res;

  // Part I. chain_b alternates x1, y1, x2, y2, ...; chain_a holds
  // g10, g11, g21, g22, ... and is rebased onto g00 before each extension.
  std::vector<int> chain_b = {base->first}, chain_a = {base->second};
  tr.xs.push_back(base->first);
  while (static_cast<int>(chain_a.size()) < 2 * k) {
    const std::vector<int> primed = inf_chain_rebase(f, g00, chain_b, chain_a, order);
    const int last = primed.back();
    const int step = static_cast<int>(chain_a.size());  // 1-based index of `last`
    std::optional<std::pair<int, int>> w;
    if (step % 2 == 1) {
      // last = g'_{n+1,n}; beta1 conjunct i = parity of n+1.
      const int n = (step - 1) / 2, i = (n + 1) % 2;
      for (int y : points) {
        if (!contains(yp, y)) continue;
        for (int z : points) {
          if (f.related(last, y, z) && !contains(comp[i][i], z)) {
            w = {y, z};
            break;
          }
        }
        if (w) break;
      }
      if (!w) throw NoWitness("lower staircase y", {n + 1});
      tr.ys.push_back(w->first);
    } else {
      // last = g'_{n+1,n+1}; beta2 conjunct i = parity of n+1.
      const int n = step / 2 - 1, i = (n + 1) % 2;
      for (int x : points) {
        if (!contains(xp, x)) continue;
        for (int z : points) {
          if (f.related(last, x, z) && !contains(comp[1 - i][i], z)) {
            w = {x, z};
            break;
          }
        }
        if (w) break;
      }
      if (!w) throw NoWitness("lower staircase x", {n + 2});
      tr.xs.push_back(w->first);
    }
    chain_a = primed;
    chain_a.push_back(w->second);
    chain_b.push_back(w->first);
  }
  for (int i = 0; i < 2 * k; ++i) {
    const int from = i == 0 ? g00 : chain_a[i - 1];
    const int idx = i / 2 + 1;
    record(i % 2 == 0 ? "lower g" + std::to_string(idx - 1) + std::to_string(idx - 1) + "*x" + std::to_string(idx)
                      : "lower g" + std::to_string(idx) + std::to_string(idx - 1) + "*y" + std::to_string(idx),
           from, chain_b[i], chain_a[i]);
    if (i % 2 == 0) {
      tr.lower[{idx, idx - 1}] = chain_a[i];
    } else {
      tr.octant[{idx, idx}] = chain_a[i];
    }
  }

  // Part II: (s) turns (g_ii x_{i+1}) y_{i+1} -> g_{i+1,i+1} into
  // x_{i+1} (g_ii y_{i+1}) -> g_{i+1,i+1}.
  for (int i = 0; i < k; ++i) {
    const int gii = tr.octant.at({i, i}), x = tr.xs[i], y = tr.ys[i], target = tr.octant.at({i + 1, i + 1});
    std::optional<int> found;
    for (int w : points) {
      if (f.related(gii, y, w) && f.related(x, w, target)) {
        found = w;
        break;
      }
    }
    if (!found) throw NoWitness("upper staircase", {i, i + 1});
    tr.octant[{i, i + 1}] = *found;
    record("upper g" + std::to_string(i) + std::to_string(i) + "*y" + std::to_string(i + 1), gii, y, *found);
    record("upper x" + std::to_string(i + 1) + "*g" + std::to_string(i) + std::to_string(i + 1), x, *found, target);
  }

  // Part III: (p) turns (x_{i+1} g_{i,j}) y_{j+1} -> g_{i+1,j+1} into
  // x_{i+1} (g_{i,j} y_{j+1}) -> g_{i+1,j+1}.
  for (int d = 2; d <= k; ++d) {
    for (int i = 0; i + d <= k; ++i) {
      const int j = i + d - 1;
      const int gij = tr.octant.at({i, j}), x = tr.xs[i], y = tr.ys[j], target = tr.octant.at({i + 1, j + 1});
      std::optional<int> found;
      for (int w : points) {
        if (f.related(gij, y, w) && f.related(x, w, target)) {
          found = w;
          break;
        }
      }
      if (!found) throw NoWitness("octant fill", {i, j + 1});
      tr.octant[{i, j + 1}] = *found;
      record("fill g" + std::to_string(i) + std::to_string(j) + "*y" + std::to_string(j + 1), gij, y, *found);
      record("fill x" + std::to_string(i + 1) + "*g" + std::to_string(i) + std::to_string(j + 1), x, *found, target);
    }
  }

  // Part IV: least tile letter at each strict-upper point.
  std::vector<PointSet> tiles;
  for (int t = 0; t < ts.size(); ++t) tiles.push_back(ev.extension(tile_atom(t)));
  for (const Cell& c : res.tiling.region().cells()) {
    const int g = tr.octant.at(c);
    int chosen = -1;
    for (int t = 0; t < ts.size() && chosen < 0; ++t) {
      if (contains(tiles[t], g)) chosen = t;
    }
    if (chosen < 0) throw TileReadError(c.m, c.n);
    res.tiling.set(c, chosen);
  }
  return res;
}

struct SaturatingProbe {
  Model model;
  int bound;
  FrameAxiomReport axioms;
  bool h, p, s;
  int index(GridPoint g) const { return g.m * (bound + 1) + g.n; }
  GridPoint coordinates(int idx) const { return {idx / (bound + 1), idx % (bound + 1)}; }
  bool hps() const { return axioms.ok() && h && p && s; }
};

/// The grid truncated to [0,C]^2 with sums saturating at C, carrying the
/// countermodel valuation. Frame properties are computed, not assumed.
inline SaturatingProbe saturating_grid(int c, const PeriodicTiling& pt) {
  if (c < 1) throw InputError("saturating bound must be positive");
  const int side = c + 1, size = side * side;
  if (size > kMaxPoints) throw BudgetError("saturating grid exceeds 64 points");
  std::vector<PointSet> table(static_cast<std::size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const GridPoint u{a / side, a % side}, v{b / side, b % side};
      PointSet out = 0;
      for (int m = std::max(u.m, v.m); m <= std::min(u.m + v.m, c); ++m) {
        for (int n = std::max(u.n, v.n); n <= std::min(u.n + v.n, c); ++n) out |= singleton(m * side + n);
      }
      table[static_cast<std::size_t>(a) * size + b] = out;
    }
  }
  Frame f = Frame::from_products(size, singleton(0), std::move(table));
  Valuation v;
  for (const std::string& letter : reduction_letters(pt.tileset.size())) {
    PointSet s = 0;
    for (int x = 0; x < size; ++x) {
      if (valuation_at(pt, {x / side, x % side}, letter)) s |= singleton(x);
    }
    v.set(letter, s);
  }
  const FrameAxiomReport ax = check_frame_axioms(f);
  const bool h = check_condition(f, Condition::H).passed, p = check_condition(f, Condition::P).passed,
             s = check_condition(f, Condition::S).passed;
  return {Model(f, std::move(v), ax.ok()), c, ax, h, p, s};
}

}  // namespace relevanza
