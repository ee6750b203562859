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

// Test-side reference implementations. They work from the raw triple
// relation and first-order definitions only, and share no code with the
// library beyond the Frame/Formula containers.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "relevanza.hpp"

namespace oracle {

using relevanza::Formula;
using relevanza::Frame;

// ------------------------------------------------------------ generators

/// Random formula of depth at most `depth` over `letters`.
inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& letters, int depth,
                              bool fusion = true, bool truth = true) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (depth == 0 || r < 2) {
    if (truth && r == 0) return Formula::truth();
    return relevanza::atom(letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)]);
  }
  const int ops = fusion ? 4 : 3;
  const int op = std::uniform_int_distribution<int>(0, ops - 1)(rng);
  Formula a = random_formula(rng, letters, depth - 1, fusion, truth);
  Formula b = random_formula(rng, letters, depth - 1, fusion, truth);
  switch (op) {
    case 0: return relevanza::conj(a, b);
    case 1: return relevanza::disj(a, b);
    case 2: return relevanza::imp(a, b);
    default: return relevanza::fuse(a, b);
  }
}

/// All formulas of depth <= depth over `letters` using {&, |, ->}.
inline std::vector<Formula> all_formulas(const std::vector<std::string>& letters, int depth) {
  std::vector<Formula> level;
  for (const auto& l : letters) level.push_back(relevanza::atom(l));
  std::vector<Formula> all = level;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Formula> next = all;
    for (const Formula& a : all) {
      for (const Formula& b : all) {
        if (std::max(a.depth(), b.depth()) + 1 != static_cast<std::size_t>(d)) continue;
        next.push_back(relevanza::conj(a, b));
        next.push_back(relevanza::disj(a, b));
        next.push_back(relevanza::imp(a, b));
      }
    }
    all = next;
  }
  return all;
}

/// A random triple relation with random normal points; not filtered.
inline Frame random_raw_frame(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density), half(0.5);
  std::vector<relevanza::Triple> rel;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (coin(rng)) rel.push_back({x, y, z});
      }
    }
  }
  relevanza::PointSet normal = 0;
  for (int x = 0; x < n; ++x) {
    if (half(rng)) normal |= relevanza::singleton(x);
  }
  return Frame(n, normal, rel);
}

// ---------------------------------------------------------------- frames

inline bool R(const Frame& f, int x, int y, int z) {
  for (const auto& t : f.triples()) {
    if (t[0] == x && t[1] == y && t[2] == z) return true;
  }
  return false;
}

/// Relation as a dense cube, from triples().
inline std::vector<char> cube(const Frame& f) {
  const int n = f.size();
  std::vector<char> c(static_cast<std::size_t>(n) * n * n, 0);
  for (const auto& t : f.triples()) c[(t[0] * n + t[1]) * n + t[2]] = 1;
  return c;
}

struct Naive {
  explicit Naive(const Frame& f) : n(f.size()), c(cube(f)) {
    for (int x = 0; x < n; ++x) {
      if ((f.normal() >> x) & 1U) N.push_back(x);
    }
  }
  int n;
  std::vector<char> c;
  std::vector<int> N;

  bool r(int x, int y, int z) const { return c[(x * n + y) * n + z] != 0; }
  bool normal(int x) const { return std::find(N.begin(), N.end(), x) != N.end(); }
  bool leq(int x, int y) const {
    for (int m : N) {
      if (r(m, x, y)) return true;
    }
    return false;
  }
  std::set<int> prod(const std::set<int>& xs, const std::set<int>& ys) const {
    std::set<int> out;
    for (int x : xs) {
      for (int y : ys) {
        for (int z = 0; z < n; ++z) {
          if (r(x, y, z)) out.insert(z);
        }
      }
    }
    return out;
  }
  std::set<int> prod(int x, int y) const { return prod(std::set<int>{x}, std::set<int>{y}); }

  bool reflexive() const {
    for (int x = 0; x < n; ++x) {
      if (!leq(x, x)) return false;
    }
    return true;
  }
  bool transitive() const {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (leq(x, y) && leq(y, z) && !leq(x, z)) return false;
        }
      }
    }
    return true;
  }
  bool upset() const {
    for (int m : N) {
      for (int y = 0; y < n; ++y) {
        if (leq(m, y) && !normal(y)) return false;
      }
    }
    return true;
  }
  bool down_down_up() const {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (!r(x, y, z)) continue;
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              for (int d = 0; d < n; ++d) {
                if (leq(a, x) && leq(b, y) && leq(z, d) && !r(a, b, d)) return false;
              }
            }
          }
        }
      }
    }
    return true;
  }
  bool valid() const { return reflexive() && transitive() && upset() && down_down_up(); }

  static bool subset(const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  bool condition(relevanza::Condition c) const {
    using relevanza::Condition;
    std::set<int> all_n(N.begin(), N.end());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const std::set<int> xy = prod(x, y);
        switch (c) {
          case Condition::H:
            if (!subset(xy, prod({x}, xy))) return false;
            break;
          case Condition::Contraction:
            if (!subset(xy, prod(xy, {y}))) return false;
            break;
          case Condition::Assertion:
            if (!subset(xy, prod(y, x))) return false;
            break;
          case Condition::P:
          case Condition::S:
            for (int z = 0; z < n; ++z) {
              const std::set<int> lhs = prod(xy, {z});
              const std::set<int> rhs = c == Condition::P ? prod({x}, prod(y, z)) : prod({y}, prod(x, z));
              if (!subset(lhs, rhs)) return false;
            }
            break;
          default: break;
        }
      }
      switch (c) {
        case Condition::PseudoMP:
          if (!prod(x, x).count(x)) return false;
          break;
        case Condition::ECond:
          if (!prod({x}, all_n).count(x)) return false;
          break;
        case Condition::SetFrame:
          if (!subset(prod(x, x), prod(all_n, {x}))) return false;
          break;
        default: break;
      }
    }
    return true;
  }

  // Satisfaction by the recursive clauses, one point at a time.
  bool sat(const std::map<std::string, std::set<int>>& v, int x, const Formula& f) const {
    using relevanza::Connective;
    switch (f.op()) {
      case Connective::Atom: {
        auto it = v.find(f.name());
        return it != v.end() && it->second.count(x);
      }
      case Connective::Truth: return normal(x);
      case Connective::And: return sat(v, x, f.lhs()) && sat(v, x, f.rhs());
      case Connective::Or: return sat(v, x, f.lhs()) || sat(v, x, f.rhs());
      case Connective::Imp:
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            if (r(x, y, z) && sat(v, y, f.lhs()) && !sat(v, z, f.rhs())) return false;
          }
        }
        return true;
      case Connective::Fusion:
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            if (r(y, z, x) && sat(v, y, f.lhs()) && sat(v, z, f.rhs())) return true;
          }
        }
        return false;
    }
    return false;
  }

  std::vector<std::set<int>> upsets() const {
    std::vector<std::set<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          if (((mask >> x) & 1) && leq(x, y) && !((mask >> y) & 1)) ok = false;
        }
      }
      if (!ok) continue;
      std::set<int> s;
      for (int x = 0; x < n; ++x) {
        if ((mask >> x) & 1) s.insert(x);
      }
      out.push_back(s);
    }
    return out;
  }

  /// Valid: true at every normal point under every upset valuation.
  bool frame_valid(const Formula& f) const {
    const auto ls = relevanza::letters(f);
    const std::vector<std::string> names(ls.begin(), ls.end());
    const auto ups = upsets();
    std::vector<std::size_t> idx(names.size(), 0);
    while (true) {
      std::map<std::string, std::set<int>> v;
      for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = ups[idx[i]];
      for (int m : N) {
        if (!sat(v, m, f)) return false;
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == ups.size()) idx[i++] = 0;
      if (i == idx.size()) return true;
    }
  }
};

/// All valid frames of size n by brute force over every relation and normal set.
inline std::vector<Frame> brute_force_valid_frames(int n) {
  std::vector<Frame> out;
  const int bits = n * n * n;
  for (int normal = 0; normal < (1 << n); ++normal) {
    for (long rel = 0; rel < (1L << bits); ++rel) {
      std::vector<relevanza::Triple> t;
      for (int b = 0; b < bits; ++b) {
        if ((rel >> b) & 1) t.push_back({b / (n * n), (b / n) % n, b % n});
      }
      Frame f(n, static_cast<relevanza::PointSet>(normal), t);
      if (Naive(f).valid()) out.push_back(f);
    }
  }
  return out;
}

// ---------------------------------------------------------- semilattices

/// Number of join-semilattices with identity of size n up to isomorphism,
/// counted as posets with a least element and all binary joins.
inline int count_semilattices_by_posets(int n) {
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::set<std::vector<char>> canon;
  std::vector<int> perm(n);
  for (long mask = 0; mask < (1L << off.size()); ++mask) {
    std::vector<char> le(n * n, 0);
    for (int i = 0; i < n; ++i) le[i * n + i] = 1;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if ((mask >> b) & 1) le[off[b].first * n + off[b].second] = 1;
    }
    auto L = [&](int a, int b) { return le[a * n + b] != 0; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && L(a, b) && L(b, a)) ok = false;
        for (int c = 0; c < n && ok; ++c) {
          if (L(a, b) && L(b, c) && !L(a, c)) ok = false;
        }
      }
    }
    if (!ok) continue;
    int bottoms = 0;
    for (int a = 0; a < n; ++a) {
      bool least = true;
      for (int b = 0; b < n; ++b) least = least && L(a, b);
      bottoms += least;
    }
    if (bottoms != 1) continue;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        int lubs = 0;
        for (int u = 0; u < n; ++u) {
          if (!L(a, u) || !L(b, u)) continue;
          bool least = true;
          for (int w = 0; w < n; ++w) {
            if (L(a, w) && L(b, w) && !L(u, w)) least = false;
          }
          lubs += least;
        }
        if (lubs != 1) ok = false;
      }
    }
    if (!ok) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
      std::vector<char> img(n * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) img[perm[a] * n + perm[b]] = le[a * n + b];
      }
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  return static_cast<int>(canon.size());
}

/// Same count by filtering every n x n join table (feasible for n <= 3).
inline int count_semilattices_by_tables(int n) {
  int cells = n * n;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  std::set<std::vector<int>> canon;
  std::vector<int> t(cells), perm(n);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < cells; ++i) {
      t[i] = static_cast<int>(c % n);
      c /= n;
    }
    auto J = [&](int a, int b) { return t[a * n + b]; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = J(a, a) == a;
      for (int b = 0; b < n && ok; ++b) {
        ok = J(a, b) == J(b, a);
        for (int d = 0; d < n && ok; ++d) ok = J(J(a, b), d) == J(a, J(b, d));
      }
    }
    int ids = 0;
    for (int z = 0; z < n && ok; ++z) {
      bool id = true;
      for (int a = 0; a < n; ++a) id = id && J(z, a) == a;
      ids += id;
    }
    if (!ok || ids != 1) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> img(cells);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) img[perm[a] * n + perm[b]] = perm[J(a, b)];
      }
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  return static_cast<int>(canon.size());
}

// ---------------------------------------------------------------- tiling

/// Whether `ts` tiles the cells by trying every assignment.
inline bool brute_force_tiles(const relevanza::TileSet& ts, const relevanza::Region& r) {
  const auto cells = r.cells();
  std::map<relevanza::Cell, int> pos;
  for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = static_cast<int>(i);
  std::vector<int> a(cells.size(), 0);
  const int k = ts.size();
  if (cells.empty()) return true;
  if (k == 0) return false;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < cells.size() && ok; ++i) {
      const relevanza::Cell c = cells[i];
      if (auto e = pos.find({c.m + 1, c.n}); e != pos.end()) ok = ts[a[i]].east == ts[a[e->second]].west;
      if (auto nn = pos.find({c.m, c.n + 1}); ok && nn != pos.end()) ok = ts[a[i]].north == ts[a[nn->second]].south;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == k) a[i++] = 0;
    if (i == a.size()) return false;
  }
}

/// Tiles that can occur at the centre of some valid (2r+1)x(2r+1) square,
/// by dynamic programming over horizontally valid rows.
inline std::set<int> centre_tiles(const relevanza::TileSet& ts, int r) {
  const int side = 2 * r + 1, k = ts.size();
  std::vector<std::vector<int>> rows;
  std::vector<int> row(side, 0);
  std::function<void(int)> extend = [&](int i) {
    if (i == side) {
      rows.push_back(row);
      return;
    }
    for (int t = 0; t < k; ++t) {
      if (i > 0 && ts[row[i - 1]].east != ts[t].west) continue;
      row[i] = t;
      extend(i + 1);
    }
  };
  extend(0);
  auto stacks = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
    for (int i = 0; i < side; ++i) {
      if (ts[lo[i]].north != ts[hi[i]].south) return false;
    }
    return true;
  };
  const std::size_t nr = rows.size();
  // up[l][i]: row i can sit at level l with valid rows below; down likewise above.
  std::vector<std::vector<char>> up(side, std::vector<char>(nr, 0)), down(side, std::vector<char>(nr, 0));
  for (std::size_t i = 0; i < nr; ++i) up[0][i] = down[side - 1][i] = 1;
  for (int l = 1; l < side; ++l) {
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nr && !up[l][i]; ++j) up[l][i] = up[l - 1][j] && stacks(rows[j], rows[i]);
    }
  }
  for (int l = side - 2; l >= 0; --l) {
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nr && !down[l][i]; ++j) down[l][i] = down[l + 1][j] && stacks(rows[i], rows[j]);
    }
  }
  std::set<int> out;
  for (std::size_t i = 0; i < nr; ++i) {
    if (up[r][i] && down[r][i]) out.insert(rows[i][r]);
  }
  return out;
}

/// Random tile set with up to `max_tiles` distinct tiles over `colors` colours.
inline relevanza::TileSet random_tileset(std::mt19937_64& rng, int max_tiles, int colors) {
  std::uniform_int_distribution<int> count(1, max_tiles);
  std::uniform_int_distribution<relevanza::Color> col(0, static_cast<relevanza::Color>(colors - 1));
  std::vector<relevanza::Tile> tiles;
  const int n = count(rng);
  while (static_cast<int>(tiles.size()) < n) {
    relevanza::Tile t{col(rng), col(rng), col(rng), col(rng)};
    if (std::find(tiles.begin(), tiles.end(), t) == tiles.end()) tiles.push_back(t);
  }
  return relevanza::TileSet(tiles);
}

}  // namespace oracle
