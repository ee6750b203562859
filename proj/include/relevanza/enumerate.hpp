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

// Frame and semilattice enumeration for brute-force testing.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "relevanza/errors.hpp"
#include "relevanza/frame.hpp"

namespace relevanza {

inline constexpr int kMaxExhaustiveFrameSize = 2;
inline constexpr int kMaxRandomFrameSize = 5;
inline constexpr int kMaxSemilatticeSize = 6;

struct EnumerationMode {
  bool exhaustive = true;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;

  static EnumerationMode all() { return {}; }
  static EnumerationMode random(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

namespace detail {

// A random frame that satisfies the frame axioms by construction: pick a
// preorder and an upset of normal points, realise the preorder through the
// normal points, sprinkle extra triples, then close under down-down-up.
inline Frame random_valid_frame(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double order_density = unit(rng) * 0.6;
  const double carry_density = 0.3 + unit(rng) * 0.7;
  const double extra_density = unit(rng) * unit(rng);

  Preorder up(n, 0);
  for (int x = 0; x < n; ++x) {
    up[x] = singleton(x);
    for (int y = 0; y < n; ++y) {
      if (x != y && unit(rng) < order_density) up[x] |= singleton(y);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      const PointSet closed = up_closure(up, up[x]);
      if (closed != up[x]) {
        up[x] = closed;
        changed = true;
      }
    }
  }

  PointSet normal = 0;
  for (int x = 0; x < n; ++x) {
    if (unit(rng) < 0.4) normal |= singleton(x);
  }
  if (normal == 0) normal = singleton(std::uniform_int_distribution<int>(0, n - 1)(rng));
  normal = up_closure(up, normal);

  std::vector<PointSet> table(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int x, int y) -> PointSet& { return table[static_cast<std::size_t>(x) * n + y]; };
  const std::vector<int> normals = members(normal);
  for (int x = 0; x < n; ++x) {
    for_each_point(up[x], [&](int y) {
      bool carried = false;
      for (int m : normals) {
        if (unit(rng) < carry_density) {
          at(m, x) |= singleton(y);
          carried = true;
        }
      }
      if (!carried) at(normals[std::uniform_int_distribution<std::size_t>(0, normals.size() - 1)(rng)], x) |= singleton(y);
    });
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (unit(rng) >= extra_density) continue;
        // Triples at normal points must stay inside the chosen preorder.
        if (contains(normal, x) && !contains(up[y], z)) continue;
        at(x, y) |= singleton(z);
      }
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const PointSet target = up_closure(up, at(x, y));
        for (int xm = 0; xm < n; ++xm) {
          if (!contains(up[xm], x)) continue;
          for (int ym = 0; ym < n; ++ym) {
            if (!contains(up[ym], y)) continue;
            if (!subset_of(target, at(xm, ym))) {
              at(xm, ym) |= target;
              changed = true;
            }
          }
        }
      }
    }
  }
  return Frame::from_products(n, normal, std::move(table));
}

}  // namespace detail

/// Streams frames of `size` passing the frame axioms and every condition
/// in `filter`. `visit` returns false to stop early.
///
/// Exhaustive order is lexicographic on (normal mask, relation mask), where
/// relation bit x*size^2 + y*size + z stands for the triple (x, y, z).
/// Random mode draws `sample_count` frames from a seeded generator.
inline void for_each_frame(int size, const std::vector<Condition>& filter, const EnumerationMode& mode,
                           const std::function<bool(const Frame&)>& visit) {
  if (size < 1) throw InputError("frame size must be positive");
  if (mode.exhaustive) {
    if (size > kMaxExhaustiveFrameSize) {
      throw BudgetError("exhaustive frame enumeration is limited to size " +
                        std::to_string(kMaxExhaustiveFrameSize));
    }
    const int bits = size * size * size;
    for (PointSet normal = 0; normal <= full_set(size); ++normal) {
      for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << bits); ++rel) {
        std::vector<PointSet> table(static_cast<std::size_t>(size) * size, 0);
        for (int b = 0; b < bits; ++b) {
          if ((rel >> b) & 1U) table[b / size] |= singleton(b % size);
        }
        Frame f = Frame::from_products(size, normal, std::move(table));
        if (!check_frame_axioms(f).ok() || !satisfies_all(f, filter)) continue;
        if (!visit(f)) return;
      }
    }
    return;
  }
  if (size > kMaxRandomFrameSize) {
    throw BudgetError("random frame sampling is limited to size " + std::to_string(kMaxRandomFrameSize));
  }
  std::mt19937_64 rng(mode.seed);
  const std::size_t max_draws = 2000 * std::max<std::size_t>(mode.sample_count, 1) + 100000;
  std::size_t produced = 0;
  for (std::size_t draw = 0; produced < mode.sample_count; ++draw) {
    if (draw >= max_draws) throw BudgetError("random sampling could not meet the filter within its draw budget");
    Frame f = detail::random_valid_frame(size, rng);
    if (!check_frame_axioms(f).ok()) throw std::logic_error("random frame generator produced an invalid frame");
    if (!satisfies_all(f, filter)) continue;
    ++produced;
    if (!visit(f)) return;
  }
}

inline std::vector<Frame> enumerate_frames(int size, const std::vector<Condition>& filter,
                                           const EnumerationMode& mode) {
  std::vector<Frame> out;
  for_each_frame(size, filter, mode, [&](const Frame& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

/// All semilattices with identity of the given size, one per isomorphism
/// class, each in canonical form (least relabelled join table, zero at 0).
inline std::vector<Semilattice> enumerate_semilattices(int size) {
  if (size < 1) throw InputError("semilattice size must be positive");
  if (size > kMaxSemilatticeSize) {
    throw BudgetError("semilattice enumeration is limited to size " + std::to_string(kMaxSemilatticeSize));
  }
  const int n = size;
  // Every finite poset has a linear extension, so it suffices to enumerate
  // orders on 1..n-1 contained in the natural order, with 0 below all.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::vector<int>> seen;
  std::vector<Semilattice> out;
  std::vector<int> perm(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<PointSet> up(n, 0);
    for (int x = 0; x < n; ++x) up[x] = singleton(x);
    up[0] = full_set(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((bits >> b) & 1U) up[pairs[b].first] |= singleton(pairs[b].second);
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) transitive = up_closure(up, up[x]) == up[x];
    if (!transitive) continue;

    std::vector<int> join(static_cast<std::size_t>(n) * n, -1);
    bool lattice = true;
    for (int x = 0; x < n && lattice; ++x) {
      for (int y = 0; y < n && lattice; ++y) {
        const PointSet bounds = up[x] & up[y];
        int lub = -1;
        for_each_point(bounds, [&](int u) {
          if (lub < 0 && subset_of(bounds, up[u])) lub = u;
        });
        if (lub < 0) lattice = false;
        join[static_cast<std::size_t>(x) * n + y] = lub;
      }
    }
    if (!lattice) continue;

    std::vector<int> best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // perm maps old labels to new labels.
      std::vector<int> relabelled(join.size());
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          relabelled[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[join[static_cast<std::size_t>(x) * n + y]];
        }
      }
      if (best.empty() || relabelled < best) best = std::move(relabelled);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    if (seen.insert(best).second) out.emplace_back(n, 0, best);
  }
  return out;
}

}  // namespace relevanza
