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

// The grid structure on N^2, the parity map from finite sets of naturals,
// the tiling countermodel valuation and its certification for periodic
// tilings, a window-bounded evaluator, valuation transport along
// p-morphisms between finite frames, and a finite quotient of the grid.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "relevanza/errors.hpp"
#include "relevanza/formula.hpp"
#include "relevanza/frame.hpp"
#include "relevanza/reduction.hpp"
#include "relevanza/semantics.hpp"
#include "relevanza/tiling.hpp"

namespace relevanza {

struct GridPoint {
  int m = 0, n = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline std::string to_string(GridPoint g) { return "(" + std::to_string(g.m) + "," + std::to_string(g.n) + ")"; }

/// Inclusive coordinate box.
struct GridBox {
  int m_lo, m_hi, n_lo, n_hi;
  bool contains(GridPoint g) const { return m_lo <= g.m && g.m <= m_hi && n_lo <= g.n && g.n <= n_hi; }
  std::size_t size() const { return static_cast<std::size_t>(m_hi - m_lo + 1) * (n_hi - n_lo + 1); }
};

inline GridBox grid_product_box(GridPoint a, GridPoint b) {
  return {std::max(a.m, b.m), a.m + b.m, std::max(a.n, b.n), a.n + b.n};
}

/// (m,n)(m',n') in lexicographic order.
inline std::vector<GridPoint> grid_product(GridPoint a, GridPoint b) {
  const GridBox box = grid_product_box(a, b);
  std::vector<GridPoint> out;
  for (int m = box.m_lo; m <= box.m_hi; ++m) {
    for (int n = box.n_lo; n <= box.n_hi; ++n) out.push_back({m, n});
  }
  return out;
}

inline GridPoint f_parity(const std::set<int>& xs) {
  GridPoint g;
  for (int v : xs) {
    if (v < 0) throw InputError("finite sets hold naturals only");
    (v % 2 == 0 ? g.m : g.n)++;
  }
  return g;
}

struct PMorphismReport {
  std::uint64_t forth_checked = 0, forth_failed = 0;
  std::uint64_t back_checked = 0, back_failed = 0;
  std::vector<std::string> failures;  // first few, human readable
  bool passed() const { return forth_failed == 0 && back_failed == 0; }
};

/// Bounded check that f_parity is a p-morphism from finite sets under union
/// onto the grid. Forth covers all X, Y within {0..check_bound}; back covers
/// all X there and all target pairs with coordinates up to check_bound, each
/// witnessed by a set Y built inside {0..universe_bound}.
inline PMorphismReport check_pmorphism_bounded(int universe_bound, int check_bound) {
  if (check_bound < 0) throw InputError("check bound must be non-negative");
  if (universe_bound < 4 * check_bound + 2) {
    throw PreconditionError("universe bound must be at least 4*check_bound+2 to supply fresh witnesses");
  }
  if (check_bound > 15) throw BudgetError("check bound above 15");
  PMorphismReport rep;
  auto note = [&](const std::string& s) {
    if (rep.failures.size() < 8) rep.failures.push_back(s);
  };
  auto as_set = [](std::uint32_t mask) {
    std::set<int> s;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
      if (mask & 1U) s.insert(v);
    }
    return s;
  };
  const std::uint32_t limit = std::uint32_t{1} << (check_bound + 1);
  for (std::uint32_t xm = 0; xm < limit; ++xm) {
    for (std::uint32_t ym = 0; ym < limit; ++ym) {
      ++rep.forth_checked;
      const GridPoint fx = f_parity(as_set(xm)), fy = f_parity(as_set(ym)), fz = f_parity(as_set(xm | ym));
      if (!grid_product_box(fx, fy).contains(fz)) {
        ++rep.forth_failed;
        note("forth X=" + std::to_string(xm) + " Y=" + std::to_string(ym));
      }
    }
  }
  for (std::uint32_t xm = 0; xm < limit; ++xm) {
    const std::set<int> x = as_set(xm);
    const GridPoint fx = f_parity(x);
    for (int m1 = 0; m1 <= check_bound; ++m1) {
      for (int n1 = 0; n1 <= check_bound; ++n1) {
        for (int m2 = 0; m2 <= check_bound; ++m2) {
          for (int n2 = 0; n2 <= check_bound; ++n2) {
            if (!grid_product_box(fx, {m1, n1}).contains({m2, n2})) continue;
            ++rep.back_checked;
            // Y takes m2 - |X even| fresh evens and the rest of its m1 evens
            // from X; likewise for odds.
            std::set<int> y;
            bool ok = true;
            auto fill = [&](int parity, int have, int want_y, int want_z) {
              int fresh = want_z - have, reused = want_y - fresh;
              for (int v = parity; fresh > 0 && v <= universe_bound; v += 2) {
                if (!x.count(v)) {
                  y.insert(v);
                  --fresh;
                }
              }
              for (int v : x) {
                if (reused <= 0) break;
                if (v % 2 == parity) {
                  y.insert(v);
                  --reused;
                }
              }
              ok = ok && fresh == 0 && reused == 0;
            };
            fill(0, fx.m, m1, m2);
            fill(1, fx.n, n1, n2);
            std::set<int> z = x;
            z.insert(y.begin(), y.end());
            if (!ok || f_parity(y) != GridPoint{m1, n1} || f_parity(z) != GridPoint{m2, n2}) {
              ++rep.back_failed;
              note("back X=" + std::to_string(xm) + " y'=" + to_string({m1, n1}) + " z'=" + to_string({m2, n2}));
            }
          }
        }
      }
    }
  }
  return rep;
}

/// A (p,q)-periodic tiling of N^2 presented by the window [0,p]x[0,q].
struct PeriodicTiling {
  TileSet tileset;
  Tiling window;
  int p = 2, q = 2;

  int tile_at(GridPoint g) const { return window.at(g.m % p, g.n % q); }
};

/// Checks the invariants unless `validate` is false (for fault injection).
inline PeriodicTiling make_periodic_tiling(TileSet ts, const std::vector<std::vector<int>>& rows_bottom_up, int p,
                                           int q, bool validate = true) {
  if (p < 1 || q < 1) throw InputError("periods must be positive");
  if (validate && (p % 2 != 0 || q % 2 != 0)) throw InputError("periods must be even");
  if (static_cast<int>(rows_bottom_up.size()) != q + 1) throw InputError("window must have q+1 rows");
  Tiling w(Region::window(0, 0, p + 1, q + 1));
  for (int n = 0; n <= q; ++n) {
    if (static_cast<int>(rows_bottom_up[n].size()) != p + 1) throw InputError("window rows must have p+1 cells");
    for (int m = 0; m <= p; ++m) w.set({m, n}, rows_bottom_up[n][m]);
  }
  require_well_formed(w, ts);
  if (validate) {
    if (!is_periodic(w, p, q)) throw InputError("window is not periodic with the given periods");
    const TilingCheck c = validate_tiling(w, ts);
    if (!c.passed) {
      throw InputError("window violates the tiling conditions at (" + std::to_string(c.violation->from.m) + "," +
                       std::to_string(c.violation->from.n) + ")");
    }
  }
  return {std::move(ts), std::move(w), p, q};
}

/// Periodic presentation of a tiling that repeats with periods (p, q).
inline PeriodicTiling periodic_from_pattern(TileSet ts, int p, int q, const std::function<int(int, int)>& tau) {
  std::vector<std::vector<int>> rows(q + 1, std::vector<int>(p + 1));
  for (int n = 0; n <= q; ++n) {
    for (int m = 0; m <= p; ++m) rows[n][m] = tau(m, n);
  }
  return make_periodic_tiling(std::move(ts), rows, p, q);
}

/// The countermodel valuation on the grid.
inline bool valuation_at(const PeriodicTiling& pt, GridPoint g, const std::string& letter) {
  if (letter == "x") return g == GridPoint{1, 0};
  if (letter == "y") return g == GridPoint{0, 1};
  if (letter == "ptop") return true;
  if (letter.size() == 3 && letter[0] == 'm' && (letter[1] == '0' || letter[1] == '1') &&
      (letter[2] == '0' || letter[2] == '1')) {
    return g.m % 2 == letter[1] - '0' && g.n % 2 == letter[2] - '0';
  }
  if (letter.size() >= 2 && letter[0] == 't' && std::all_of(letter.begin() + 1, letter.end(), ::isdigit) &&
      (letter.size() == 2 || letter[1] != '0')) {
    const int idx = std::stoi(letter.substr(1));
    if (idx < pt.tileset.size()) return pt.tile_at(g) == idx;
  }
  throw InputError("letter '" + letter + "' is not part of the countermodel valuation");
}

namespace detail {

// Exact evaluation in the grid model for formulas whose implications either
// have a generator letter (x or y) as antecedent or ptop as consequent.
inline bool grid_eval(const PeriodicTiling& pt, const Formula& f, GridPoint g) {
  switch (f.op()) {
    case Connective::Atom: return valuation_at(pt, g, f.name());
    case Connective::Truth: return g == GridPoint{0, 0};
    case Connective::And: return grid_eval(pt, f.lhs(), g) && grid_eval(pt, f.rhs(), g);
    case Connective::Or: return grid_eval(pt, f.lhs(), g) || grid_eval(pt, f.rhs(), g);
    case Connective::Imp: {
      if (f.rhs().is_atom() && f.rhs().name() == "ptop") return true;
      if (f.lhs().is_atom() && (f.lhs().name() == "x" || f.lhs().name() == "y")) {
        const GridPoint gen = f.lhs().name() == "x" ? GridPoint{1, 0} : GridPoint{0, 1};
        for (GridPoint z : grid_product(g, gen)) {
          if (!grid_eval(pt, f.rhs(), z)) return false;
        }
        return true;
      }
      throw PreconditionError("implication outside the certified fragment: " + to_string(f));
    }
    case Connective::Fusion: break;
  }
  throw PreconditionError("fusion outside the certified fragment");
}

}  // namespace detail

struct SubCheck {
  std::string name;
  bool passed = true;
  std::size_t cells_examined = 0;
  std::optional<GridPoint> failing_cell;
  std::string conjunct;  // failing conjunct, if any
  std::string detail;
};

struct RefutationCertificate {
  std::vector<SubCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
  }
  const SubCheck& at(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c;
    }
    throw InputError("no sub-check named " + name);
  }
};

/// Certifies that (0,0) refutes the tiling formula in the grid countermodel
/// built from `pt`. Because the valuation of every letter except x and y
/// depends only on (m mod p, n mod q) and p, q are even, each universal
/// claim reduces to the representatives [0,p]x[0,q] (the extra row and
/// column cover the special products at coordinate 0).
inline RefutationCertificate verify_refutation_periodic(const PeriodicTiling& pt) {
  const TilingFormulas tf = build_tiling_formulas(pt.tileset);
  const XPrimeParts xp = xprime_parts(pt.tileset);
  std::vector<GridPoint> reps;
  for (int m = 0; m <= pt.p; ++m) {
    for (int n = 0; n <= pt.q; ++n) reps.push_back({m, n});
  }
  auto holds = [&](const Formula& f, GridPoint g) { return detail::grid_eval(pt, f, g); };
  RefutationCertificate cert;

  {
    SubCheck c;
    c.name = "generators";
    for (GridPoint g : reps) {
      ++c.cells_examined;
      const bool x = valuation_at(pt, g, "x"), y = valuation_at(pt, g, "y"), top = valuation_at(pt, g, "ptop");
      if (x != (g == GridPoint{1, 0}) || y != (g == GridPoint{0, 1}) || !top) {
        c.passed = false;
        c.failing_cell = g;
        break;
      }
    }
    if (c.passed && !holds(tf.yprime, {0, 1})) {
      c.passed = false;
      c.failing_cell = GridPoint{0, 1};
      c.conjunct = to_string(tf.yprime);
    }
    cert.checks.push_back(c);
  }

  {
    // x' at (1,0): the atom conjuncts directly, then every implication
    // conjunct over all (m,n) and (m',n') in (1,0)(m,n).
    SubCheck c;
    c.name = "x_prime";
    const GridPoint x1{1, 0};
    for (const Formula& head : {x_atom(), ptop_atom(), ptop_closure()}) {
      if (!holds(head, x1)) {
        c.passed = false;
        c.failing_cell = x1;
        c.conjunct = to_string(head);
      }
    }
    for (const auto* group : {&xp.tile_steps, &xp.parity_unique, &xp.tile_unique}) {
      for (const Formula& imp_f : *group) {
        if (!c.passed) break;
        for (GridPoint g : reps) {
          ++c.cells_examined;
          if (!holds(imp_f.lhs(), g)) continue;
          for (GridPoint z : grid_product(x1, g)) {
            if (!holds(imp_f.rhs(), z)) {
              c.passed = false;
              c.failing_cell = g;
              c.conjunct = to_string(imp_f);
              c.detail = "fails at " + to_string(z);
              break;
            }
          }
          if (!c.passed) break;
        }
      }
    }
    cert.checks.push_back(c);
  }
  const bool xprime_at_x = cert.checks.back().passed;

  {
    // (0,0)g = {g}, so (0,0) forces every A -> A.
    SubCheck c;
    c.name = "alpha";
    for (const Formula& conj_f : flatten_right(tf.alpha, Connective::And)) {
      if (conj_f.op() != Connective::Imp || !(conj_f.lhs() == conj_f.rhs())) {
        c.passed = false;
        c.conjunct = to_string(conj_f);
      }
    }
    for (GridPoint g : reps) {
      ++c.cells_examined;
      if (grid_product(GridPoint{0, 0}, g) != std::vector<GridPoint>{g}) {
        c.passed = false;
        c.failing_cell = g;
        c.detail = "(0,0) product is not the identity";
        break;
      }
    }
    cert.checks.push_back(c);
  }

  // beta conjuncts have the form (G -> A) -> B with a single point forcing G.
  auto beta_check = [&](const std::string& name, const Formula& beta, GridPoint gen, bool gen_ok) {
    SubCheck c;
    c.name = name;
    if (!gen_ok) {
      c.passed = false;
      c.failing_cell = gen;
      c.detail = "generator point does not force the primed letter";
    }
    for (const Formula& conj_f : flatten_right(beta, Connective::And)) {
      if (!c.passed) break;
      const Formula& inner_a = conj_f.lhs().rhs();
      const Formula& outer_b = conj_f.rhs();
      for (GridPoint g : reps) {
        ++c.cells_examined;
        if (holds(outer_b, g)) continue;
        // g must refute gen' -> inner_a, witnessed inside g * gen.
        bool refuted = false;
        for (GridPoint z : grid_product(g, gen)) refuted = refuted || !holds(inner_a, z);
        if (!refuted) {
          c.passed = false;
          c.failing_cell = g;
          c.conjunct = to_string(conj_f);
          break;
        }
      }
    }
    cert.checks.push_back(c);
  };
  beta_check("beta1", tf.beta1, {0, 1}, holds(tf.yprime, {0, 1}));
  beta_check("beta2", tf.beta2, {1, 0}, xprime_at_x);

  {
    // Each point forces its parity letter; it must force the matching G.
    SubCheck c;
    c.name = "gamma_g00";
    for (GridPoint g : reps) {
      ++c.cells_examined;
      const int i = g.m % 2, j = g.n % 2;
      if (!holds(tf.grid[i][j], g)) {
        c.passed = false;
        c.failing_cell = g;
        c.conjunct = "G" + std::to_string(i) + std::to_string(j);
        break;
      }
    }
    cert.checks.push_back(c);
  }

  {
    SubCheck c;
    c.name = "consequent";
    c.cells_examined = 1;
    if (!xprime_at_x || holds(tf.comp[1][0], {1, 0})) {
      c.passed = false;
      c.failing_cell = GridPoint{1, 0};
      c.conjunct = to_string(tf.consequent);
    }
    cert.checks.push_back(c);
  }
  return cert;
}

enum class Tri { False, True, Unknown };

inline std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "";
}

namespace detail {

// Tri-state extensions over [0,B]^2 as per-row bit masks.
class WindowEvaluator {
 public:
  struct Ext {
    std::vector<std::uint64_t> t, f;  // rows n = 0..B; bit m
  };

  WindowEvaluator(const PeriodicTiling& pt, int bound) : pt_(pt), b_(bound), full_((std::uint64_t{2} << bound) - 1) {}

  const Ext& eval(const Formula& phi) {
    if (auto it = memo_.find(phi.id()); it != memo_.end()) return it->second;
    Ext out{std::vector<std::uint64_t>(b_ + 1, 0), std::vector<std::uint64_t>(b_ + 1, 0)};
    switch (phi.op()) {
      case Connective::Atom:
      case Connective::Truth:
        for (int n = 0; n <= b_; ++n) {
          for (int m = 0; m <= b_; ++m) {
            const bool v = phi.op() == Connective::Truth ? (m == 0 && n == 0) : valuation_at(pt_, {m, n}, phi.name());
            (v ? out.t : out.f)[n] |= bit(m);
          }
        }
        break;
      case Connective::And: {
        const Ext& a = eval(phi.lhs());
        const Ext& c = eval(phi.rhs());
        for (int n = 0; n <= b_; ++n) {
          out.t[n] = a.t[n] & c.t[n];
          out.f[n] = a.f[n] | c.f[n];
        }
        break;
      }
      case Connective::Or: {
        const Ext& a = eval(phi.lhs());
        const Ext& c = eval(phi.rhs());
        for (int n = 0; n <= b_; ++n) {
          out.t[n] = a.t[n] | c.t[n];
          out.f[n] = a.f[n] & c.f[n];
        }
        break;
      }
      case Connective::Imp: {
        const Ext a = eval(phi.lhs());
        const Ext c = eval(phi.rhs());
        for (int n = 0; n <= b_; ++n) {
          for (int m = 0; m <= b_; ++m) {
            bool definite_false = false, unknown = false;
            for (int n1 = 0; n1 <= b_ && !definite_false; ++n1) {
              for (int m1 = 0; m1 <= b_ && !definite_false; ++m1) {
                const bool at = a.t[n1] & bit(m1), af = a.f[n1] & bit(m1);
                if (af) continue;
                const int mlo = std::max(m, m1), mhi = m + m1, nlo = std::max(n, n1), nhi = n + n1;
                if (mhi > b_ || nhi > b_) unknown = true;
                const std::uint64_t cols = range(mlo, std::min(mhi, b_));
                for (int r = nlo; r <= std::min(nhi, b_); ++r) {
                  if (at && (c.f[r] & cols)) {
                    definite_false = true;
                    break;
                  }
                  if (cols & ~c.t[r]) unknown = true;
                }
              }
            }
            if (definite_false) {
              out.f[n] |= bit(m);
            } else if (!unknown) {
              out.t[n] |= bit(m);
            }
          }
        }
        break;
      }
      case Connective::Fusion: {
        // Factors of a product lie below it coordinatewise, hence in the window.
        const Ext a = eval(phi.lhs());
        const Ext c = eval(phi.rhs());
        for (int n = 0; n <= b_; ++n) {
          for (int m = 0; m <= b_; ++m) {
            bool any_true = false, any_open = false;
            for (int n1 = 0; n1 <= n; ++n1) {
              for (int m1 = 0; m1 <= m; ++m1) {
                if (a.f[n1] & bit(m1)) continue;
                const bool at = a.t[n1] & bit(m1);
                // y*z contains (m,n) iff max <= (m,n) <= sum coordinatewise.
                for (int n2 = 0; n2 <= n; ++n2) {
                  if (std::max(n1, n2) > n || n1 + n2 < n) continue;
                  for (int m2 = 0; m2 <= m; ++m2) {
                    if (std::max(m1, m2) > m || m1 + m2 < m) continue;
                    if (c.f[n2] & bit(m2)) continue;
                    if (at && (c.t[n2] & bit(m2))) any_true = true;
                    else any_open = true;
                  }
                }
              }
            }
            if (any_true) {
              out.t[n] |= bit(m);
            } else if (!any_open) {
              out.f[n] |= bit(m);
            }
          }
        }
        break;
      }
    }
    keep_.push_back(phi);
    return memo_.emplace(phi.id(), std::move(out)).first->second;
  }

  Tri at(const Formula& phi, GridPoint g) {
    const Ext& e = eval(phi);
    if (e.t[g.n] & bit(g.m)) return Tri::True;
    if (e.f[g.n] & bit(g.m)) return Tri::False;
    return Tri::Unknown;
  }

 private:
  static std::uint64_t bit(int m) { return std::uint64_t{1} << m; }
  static std::uint64_t range(int lo, int hi) {
    if (hi < lo) return 0;
    const std::uint64_t upto = hi >= 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << hi) - 1;
    return upto & ~((std::uint64_t{1} << lo) - 1);
  }

  const PeriodicTiling& pt_;
  int b_;
  std::uint64_t full_;
  std::unordered_map<const void*, Ext> memo_;
  std::vector<Formula> keep_;  // pins memoized nodes so ids stay unique
};

}  // namespace detail

inline constexpr int kMaxWindowBound = 62;

/// Satisfaction with every quantifier restricted to [0,bound]^2. A universal
/// whose product set leaves the window, or meets an unknown, yields unknown
/// unless a definite counterexample is found; unknown propagates upward.
inline Tri window_eval(const PeriodicTiling& pt, const Formula& f, GridPoint g, int bound) {
  if (bound < 0 || bound > kMaxWindowBound) throw InputError("window bound must lie in [0,62]");
  if (g.m < 0 || g.n < 0 || g.m > bound || g.n > bound) throw PreconditionError("point outside the window");
  detail::WindowEvaluator ev(pt, bound);
  return ev.at(f, g);
}

class NotAPMorphism : public PreconditionError {
 public:
  NotAPMorphism(std::string which, std::vector<int> witness)
      : PreconditionError("map fails the " + which + " condition"), which_(std::move(which)), witness_(std::move(witness)) {}
  const std::string& which() const { return which_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string which_;
  std::vector<int> witness_;
};

/// Forth: Rxyz gives R'f(x)f(y)f(z). Back: R'f(x)y'z' gives some y, z with
/// Rxyz, f(y) = y', f(z) = z'. Witnesses are (x,y,z) and (x,y',z').
inline CheckResult check_pmorphism(const Frame& dom, const Frame& cod, const std::vector<int>& fmap) {
  if (static_cast<int>(fmap.size()) != dom.size()) throw InputError("map must be total on the domain");
  for (int v : fmap) {
    if (v < 0 || v >= cod.size()) throw InputError("map leaves the codomain");
  }
  for (int x = 0; x < dom.size(); ++x) {
    for (int y = 0; y < dom.size(); ++y) {
      for (int z : members(dom.product(x, y))) {
        if (!cod.related(fmap[x], fmap[y], fmap[z])) return CheckResult::fail({x, y, z});
      }
    }
  }
  for (int x = 0; x < dom.size(); ++x) {
    for (int y1 = 0; y1 < cod.size(); ++y1) {
      for (int z1 : members(cod.product(fmap[x], y1))) {
        bool found = false;
        for (int y = 0; y < dom.size() && !found; ++y) {
          if (fmap[y] != y1) continue;
          for (int z : members(dom.product(x, y))) found = found || fmap[z] == z1;
        }
        if (!found) return CheckResult::fail({x, y1, z1});
      }
    }
  }
  return CheckResult::pass();
}

struct TransportReport {
  bool passed = true;
  std::uint64_t valuations = 0;
  std::optional<Valuation> failing_valuation;  // on the codomain
  int failing_point = -1;
};

inline constexpr std::uint64_t kDefaultTransportBudget = 1'000'000;

/// Checks that satisfaction at x under the pulled-back valuation equals
/// satisfaction at f(x) for every valuation of the codomain into subsets.
/// Formulas with the truth constant additionally need f^-1[N'] = N.
inline TransportReport transport_check(const Frame& dom, const Frame& cod, const std::vector<int>& fmap,
                                       const Formula& formula, std::uint64_t budget = kDefaultTransportBudget) {
  if (auto c = check_pmorphism(dom, cod, fmap); !c.passed) {
    const bool forth = dom.related(c.witness[0], c.witness[1], c.witness[2]) &&
                       !cod.related(fmap[c.witness[0]], fmap[c.witness[1]], fmap[c.witness[2]]);
    throw NotAPMorphism(forth ? "forth" : "back", c.witness);
  }
  const std::set<std::string> ls = letters(formula);
  const std::vector<std::string> names(ls.begin(), ls.end());
  std::function<bool(const Formula&)> uses_truth = [&](const Formula& f) -> bool {
    if (f.op() == Connective::Truth) return true;
    return f.is_binary() && (uses_truth(f.lhs()) || uses_truth(f.rhs()));
  };
  if (uses_truth(formula)) {
    PointSet pulled = 0;
    for (int x = 0; x < dom.size(); ++x) {
      if (contains(cod.normal(), fmap[x])) pulled |= singleton(x);
    }
    if (pulled != dom.normal()) throw PreconditionError("map does not reflect normal points");
  }
  const int bits = cod.size() * static_cast<int>(names.size());
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) throw BudgetError("transport valuation space exceeds budget");
  TransportReport rep;
  const PointSet cfull = cod.universe();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    Valuation vc, vd;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const PointSet s = (code >> (i * cod.size())) & cfull;
      vc.set(names[i], s);
      PointSet back = 0;
      for (int x = 0; x < dom.size(); ++x) {
        if (contains(s, fmap[x])) back |= singleton(x);
      }
      vd.set(names[i], back);
    }
    ++rep.valuations;
    const PointSet ec = extension(cod, vc, formula), ed = extension(dom, vd, formula);
    for (int x = 0; x < dom.size(); ++x) {
      if (contains(ed, x) != contains(ec, fmap[x])) {
        rep.passed = false;
        rep.failing_valuation = vc;
        rep.failing_point = x;
        return rep;
      }
    }
  }
  return rep;
}

/// In one coordinate, a |-> a for a < p and a |-> p + (a mod p) beyond.
inline int fold_coordinate(int a, int p) { return a < p ? a : p + a % p; }

struct QuotientModel {
  Frame frame;
  Valuation valuation;
  int p, q;
  int index(GridPoint folded) const { return folded.m * 2 * q + folded.n; }
  int point_of(GridPoint g) const { return index({fold_coordinate(g.m, p), fold_coordinate(g.n, q)}); }
  GridPoint coordinates(int idx) const { return {idx / (2 * q), idx % (2 * q)}; }
};

/// Image of the grid under coordinatewise folding: 2p x 2q points with
/// normal point (0,0) and the countermodel valuation carried along. The
/// relation is the image of the grid relation, so the fold is surjective
/// and (as the tests confirm by bounded search) a p-morphism.
inline QuotientModel quotient_model(const PeriodicTiling& pt) {
  const int p = pt.p, q = pt.q;
  if (p % 2 || q % 2) throw PreconditionError("quotient needs even periods");
  if (4 * p * q > kMaxPoints) throw BudgetError("quotient exceeds 64 points");
  auto axis = [](int per) {
    // rel[a][b] = bitmask of folded c with max(a,b) <= c <= a+b over representatives.
    const int size = 2 * per;
    std::vector<std::vector<std::uint64_t>> rel(size, std::vector<std::uint64_t>(size, 0));
    for (int a = 0; a < 3 * per; ++a) {
      for (int b = 0; b < 3 * per; ++b) {
        for (int c = std::max(a, b); c <= a + b; ++c) {
          rel[fold_coordinate(a, per)][fold_coordinate(b, per)] |= std::uint64_t{1} << fold_coordinate(c, per);
        }
      }
    }
    return rel;
  };
  const auto rm = axis(p), rn = axis(q);
  QuotientModel qm{Frame(1, singleton(0), {}), {}, p, q};
  const int size = 4 * p * q;
  std::vector<PointSet> table(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      const GridPoint a = qm.coordinates(x), b = qm.coordinates(y);
      PointSet out = 0;
      for (int cm = 0; cm < 2 * p; ++cm) {
        if (!((rm[a.m][b.m] >> cm) & 1U)) continue;
        for (int cn = 0; cn < 2 * q; ++cn) {
          if ((rn[a.n][b.n] >> cn) & 1U) out |= singleton(qm.index({cm, cn}));
        }
      }
      table[static_cast<std::size_t>(x) * size + y] = out;
    }
  }
  qm.frame = Frame::from_products(size, singleton(0), std::move(table));
  for (const std::string& letter : reduction_letters(pt.tileset.size())) {
    PointSet s = 0;
    for (int x = 0; x < size; ++x) {
      // Folded coordinates are themselves grid points of the same class.
      if (valuation_at(pt, qm.coordinates(x), letter)) s |= singleton(x);
    }
    qm.valuation.set(letter, s);
  }
  return qm;
}

}  // namespace relevanza
