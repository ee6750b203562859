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

// The tiling formula of a tile set and the two-letter formula psi_infty.
//
// Operand order inside big conjunctions and disjunctions: ascending (i,j)
// lexicographically, then ascending tile index, then ascending pairs. Every
// fold is right-associated; a big conjunction nested in a larger one stays a
// single operand. Empty big conjunctions are dropped.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "relevanza/errors.hpp"
#include "relevanza/formula.hpp"
#include "relevanza/tiling.hpp"

namespace relevanza {

class EmptyNeighborSet : public PreconditionError {
 public:
  EmptyNeighborSet(int tile, Direction d)
      : PreconditionError("tile " + std::to_string(tile) + " has no " + std::string(direction_name(d)) +
                          " neighbour; prune the tile set first"),
        tile_(tile),
        direction_(d) {}
  int tile() const { return tile_; }
  Direction direction() const { return direction_; }

 private:
  int tile_;
  Direction direction_;
};

inline std::string tile_letter(int i) { return "t" + std::to_string(i); }
inline std::string parity_letter(int i, int j) { return "m" + std::to_string(i) + std::to_string(j); }
inline Formula tile_atom(int i) { return atom(tile_letter(i)); }
inline Formula parity_atom(int i, int j) { return atom(parity_letter(i, j)); }
inline Formula x_atom() { return atom("x"); }
inline Formula y_atom() { return atom("y"); }
inline Formula ptop_atom() { return atom("ptop"); }

/// All letters of the tiling formula for a set of `tiles` tiles.
inline std::vector<std::string> reduction_letters(int tiles) {
  std::vector<std::string> out;
  for (int i = 0; i < tiles; ++i) out.push_back(tile_letter(i));
  out.insert(out.end(), {"x", "y", "ptop"});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.push_back(parity_letter(i, j));
  }
  return out;
}

inline Formula right_neighbors(const TileSet& ts, int i) {
  std::vector<Formula> parts;
  for (int t = 0; t < ts.size(); ++t) {
    if (ts.fits_east(i, t)) parts.push_back(tile_atom(t));
  }
  if (parts.empty()) throw EmptyNeighborSet(i, Direction::East);
  return disj_all(parts);
}

inline Formula up_neighbors(const TileSet& ts, int i) {
  std::vector<Formula> parts;
  for (int t = 0; t < ts.size(); ++t) {
    if (ts.fits_north(i, t)) parts.push_back(tile_atom(t));
  }
  if (parts.empty()) throw EmptyNeighborSet(i, Direction::North);
  return disj_all(parts);
}

inline Formula grid_formula(const TileSet& ts, int i, int j) {
  if (ts.empty()) throw PreconditionError("grid formula needs a nonempty tile set");
  std::vector<Formula> parts;
  for (int t = 0; t < ts.size(); ++t) {
    Formula step = disj(parity_atom(i, j), conj(parity_atom(i, 1 - j), up_neighbors(ts, t)));
    parts.push_back(conj(tile_atom(t), imp(y_atom(), step)));
  }
  return conj(parity_atom(i, j), disj_all(parts));
}

inline Formula mcomp(int i, int j) {
  const Formula parts[] = {parity_atom(i, 1 - j), parity_atom(1 - i, j), parity_atom(1 - i, 1 - j)};
  return disj_all(parts);
}

inline Formula ptop_closure() { return imp(ptop_atom(), ptop_atom()); }

/// The three big conjunctions of x' (the last may be empty).
struct XPrimeParts {
  std::vector<Formula> tile_steps;
  std::vector<Formula> parity_unique;
  std::vector<Formula> tile_unique;
};

inline XPrimeParts xprime_parts(const TileSet& ts) {
  if (ts.empty()) throw PreconditionError("x' needs a nonempty tile set");
  XPrimeParts out;
  const Formula clash = conj(parity_atom(0, 0), parity_atom(0, 1));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int t = 0; t < ts.size(); ++t) {
        Formula step = disj(parity_atom(i, j), conj(parity_atom(1 - i, j), right_neighbors(ts, t)));
        out.tile_steps.push_back(imp(conj(parity_atom(i, j), tile_atom(t)), step));
      }
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      out.parity_unique.push_back(imp(conj(parity_atom(a / 2, a % 2), parity_atom(b / 2, b % 2)), clash));
    }
  }
  for (int t = 0; t < ts.size(); ++t) {
    for (int u = t + 1; u < ts.size(); ++u) out.tile_unique.push_back(imp(conj(tile_atom(t), tile_atom(u)), clash));
  }
  return out;
}

inline Formula xprime(const TileSet& ts) {
  const XPrimeParts p = xprime_parts(ts);
  std::vector<Formula> parts = {x_atom(), ptop_atom(), ptop_closure()};
  for (const auto* group : {&p.tile_steps, &p.parity_unique, &p.tile_unique}) {
    if (!group->empty()) parts.push_back(conj_all(*group));
  }
  return conj_all(parts);
}

inline Formula yprime() {
  const Formula parts[] = {y_atom(), ptop_atom(), ptop_closure()};
  return conj_all(parts);
}

inline Formula alpha() {
  std::vector<Formula> parts;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) parts.push_back(imp(mcomp(i, j), mcomp(i, j)));
  }
  return conj_all(parts);
}

inline Formula beta1() {
  std::vector<Formula> parts;
  for (int i = 0; i < 2; ++i) parts.push_back(imp(imp(yprime(), mcomp(i, i)), mcomp(i, 1 - i)));
  return conj_all(parts);
}

inline Formula beta2_over(const Formula& xp) {
  std::vector<Formula> parts;
  for (int i = 0; i < 2; ++i) parts.push_back(imp(imp(xp, mcomp(1 - i, i)), mcomp(i, i)));
  return conj_all(parts);
}
inline Formula beta2(const TileSet& ts) { return beta2_over(xprime(ts)); }

inline Formula gamma(const TileSet& ts) {
  std::vector<Formula> parts;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) parts.push_back(grid_formula(ts, i, j));
  }
  return imp(ptop_atom(), disj_all(parts));
}

/// Every named piece of the tiling formula, sharing subterms.
struct TilingFormulas {
  std::vector<Formula> right, up;  // R(t), U(t) per tile
  std::array<std::array<Formula, 2>, 2> grid;
  std::array<std::array<Formula, 2>, 2> comp;
  Formula xprime, yprime, alpha, beta1, beta2, gamma;
  Formula antecedent, consequent, psi;
};

inline TilingFormulas build_tiling_formulas(const TileSet& ts) {
  if (ts.empty()) throw PreconditionError("tiling formula needs a nonempty tile set");
  std::vector<Formula> right, up;
  for (int t = 0; t < ts.size(); ++t) {
    right.push_back(right_neighbors(ts, t));
    up.push_back(up_neighbors(ts, t));
  }
  const Formula xp = xprime(ts);
  const Formula b2 = beta2_over(xp);
  const Formula gm = gamma(ts);
  const std::vector<Formula> g = flatten_right(gm.rhs(), Connective::Or);
  const Formula& g00 = g[0];
  const Formula a = alpha(), b1 = beta1();
  const Formula ante_parts[] = {a, b1, b2, gm, g00};
  Formula ante = conj_all(ante_parts);
  Formula cons = imp(xp, mcomp(1, 0));
  Formula psi = imp(ante, cons);
  return TilingFormulas{right,
                        up,
                        {{{g[0], g[1]}, {g[2], g[3]}}},
                        {{{mcomp(0, 0), mcomp(0, 1)}, {mcomp(1, 0), mcomp(1, 1)}}},
                        xp,
                        yprime(),
                        a,
                        b1,
                        b2,
                        gm,
                        ante,
                        cons,
                        psi};
}

inline Formula build_psi(const TileSet& ts) { return build_tiling_formulas(ts).psi; }

inline Formula build_psi_infty() {
  const Formula e = atom("e"), o = atom("o");
  const Formula eo = disj(e, o);
  const Formula psi1 = imp(conj(e, imp(e, e)), o);
  const Formula psi2 = imp(conj(o, imp(o, o)), e);
  const Formula psi3 = imp(eo, conj(eo, imp(eo, eo)));
  const Formula parts[] = {o, psi1, psi2, psi3};
  return imp(conj_all(parts), e);
}

}  // namespace relevanza
