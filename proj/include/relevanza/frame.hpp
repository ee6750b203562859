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

// Finite Routley-Meyer frames in operational form: x.y is the set of z with
// Rxyz. Point sets are 64-bit masks, so universes hold at most 64 points.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relevanza/errors.hpp"

namespace relevanza {

using PointSet = std::uint64_t;
inline constexpr int kMaxPoints = 64;

constexpr PointSet singleton(int x) { return PointSet{1} << x; }
constexpr bool contains(PointSet s, int x) { return (s >> x) & 1U; }
constexpr PointSet full_set(int size) {
  return size >= 64 ? ~PointSet{0} : (PointSet{1} << size) - 1;
}
constexpr bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }
inline int least(PointSet s) { return std::countr_zero(s); }

/// Visits the members of `s` in ascending order.
template <typename F>
void for_each_point(PointSet s, F&& fn) {
  while (s != 0) {
    fn(least(s));
    s &= s - 1;
  }
}

inline std::vector<int> members(PointSet s) {
  std::vector<int> out;
  for_each_point(s, [&](int x) { out.push_back(x); });
  return out;
}

using Triple = std::array<int, 3>;

class Frame {
 public:
  Frame() = default;

  /// Builds a frame from explicit triples. Validity (reflexivity etc.) is not
  /// enforced here; see check_frame_axioms.
  Frame(int size, PointSet normal, const std::vector<Triple>& rel) : Frame(size, normal) {
    for (const Triple& t : rel) {
      for (int c : t) {
        if (c < 0 || c >= size) throw InputError("triple component out of range");
      }
      table_[index(t[0], t[1])] |= singleton(t[2]);
    }
  }

  /// Builds a frame from its product table, row-major over (x, y).
  static Frame from_products(int size, PointSet normal, std::vector<PointSet> table) {
    Frame f(size, normal);
    if (table.size() != f.table_.size()) throw InputError("product table has the wrong shape");
    for (PointSet row : table) {
      if (!subset_of(row, full_set(size))) throw InputError("product entry out of range");
    }
    f.table_ = std::move(table);
    return f;
  }

  int size() const { return size_; }
  PointSet universe() const { return full_set(size_); }
  PointSet normal() const { return normal_; }

  PointSet product(int x, int y) const { return table_[index(x, y)]; }
  bool related(int x, int y, int z) const { return contains(product(x, y), z); }

  /// Pointwise lifting: the union of x.y over x in xs, y in ys.
  PointSet product(PointSet xs, PointSet ys) const {
    PointSet out = 0;
    for_each_point(xs, [&](int x) { for_each_point(ys, [&](int y) { out |= product(x, y); }); });
    return out;
  }

  /// Triples in lexicographic order.
  std::vector<Triple> triples() const {
    std::vector<Triple> out;
    for (int x = 0; x < size_; ++x) {
      for (int y = 0; y < size_; ++y) {
        for_each_point(product(x, y), [&](int z) { out.push_back({x, y, z}); });
      }
    }
    return out;
  }

  const std::vector<PointSet>& table() const { return table_; }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  Frame(int size, PointSet normal) : size_(size), normal_(normal) {
    if (size < 1 || size > kMaxPoints) {
      throw InputError("frame size must lie in 1.." + std::to_string(kMaxPoints));
    }
    if (!subset_of(normal, full_set(size))) throw InputError("normal point out of range");
    table_.assign(static_cast<std::size_t>(size) * size, 0);
  }

  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * size_ + y; }

  int size_ = 0;
  PointSet normal_ = 0;
  std::vector<PointSet> table_;
};

/// Row x holds {y | x <= y}, where x <= y iff some normal n has Rnxy.
using Preorder = std::vector<PointSet>;

inline Preorder leq(const Frame& f) {
  Preorder up(f.size(), 0);
  for (int x = 0; x < f.size(); ++x) up[x] = f.product(f.normal(), singleton(x));
  return up;
}

/// {y | x <= y for some x in xs}
inline PointSet up_closure(const Preorder& up, PointSet xs) {
  PointSet out = xs;
  for_each_point(xs, [&](int x) { out |= up[x]; });
  return out;
}

/// {x | x <= y for some y in ys}
inline PointSet down_closure(const Preorder& up, PointSet ys) {
  PointSet out = ys;
  for (int x = 0; x < static_cast<int>(up.size()); ++x) {
    if (up[x] & ys) out |= singleton(x);
  }
  return out;
}

inline bool is_upset(const Preorder& up, PointSet xs) { return up_closure(up, xs) == xs; }

/// Outcome of one universally quantified check. The witness is the
/// lexicographically least failing tuple; empty when the check passed.
struct CheckResult {
  bool passed = true;
  std::vector<int> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<int> w) { return {false, std::move(w)}; }
};

struct FrameAxiomReport {
  CheckResult reflexivity;
  CheckResult transitivity;
  CheckResult upset;
  CheckResult down_down_up;

  bool ok() const {
    return reflexivity.passed && transitivity.passed && upset.passed && down_down_up.passed;
  }
};

inline FrameAxiomReport check_frame_axioms(const Frame& f) {
  const Preorder up = leq(f);
  const int n = f.size();
  FrameAxiomReport r;
  for (int x = 0; x < n && r.reflexivity.passed; ++x) {
    if (!contains(up[x], x)) r.reflexivity = CheckResult::fail({x});
  }
  for (int x = 0; x < n && r.transitivity.passed; ++x) {
    for (int y = 0; y < n && r.transitivity.passed; ++y) {
      if (!contains(up[x], y)) continue;
      const PointSet missing = up[y] & ~up[x];
      if (missing) r.transitivity = CheckResult::fail({x, y, least(missing)});
    }
  }
  for_each_point(f.normal(), [&](int m) {
    const PointSet escaped = up[m] & ~f.normal();
    if (r.upset.passed && escaped) r.upset = CheckResult::fail({m, least(escaped)});
  });
  // Rxyz, x' <= x, y' <= y, z <= z' implies Rx'y'z'.
  for (int x = 0; x < n && r.down_down_up.passed; ++x) {
    for (int y = 0; y < n && r.down_down_up.passed; ++y) {
      for (int z = 0; z < n && r.down_down_up.passed; ++z) {
        if (!f.related(x, y, z)) continue;
        for (int xm = 0; xm < n && r.down_down_up.passed; ++xm) {
          if (!contains(up[xm], x)) continue;
          for (int ym = 0; ym < n && r.down_down_up.passed; ++ym) {
            if (!contains(up[ym], y)) continue;
            const PointSet missing = up[z] & ~f.product(xm, ym);
            if (missing) r.down_down_up = CheckResult::fail({x, y, z, xm, ym, least(missing)});
          }
        }
      }
    }
  }
  return r;
}

enum class Condition { H, P, S, PseudoMP, Contraction, ECond, Assertion, SetFrame };

inline constexpr std::array<Condition, 8> kAllConditions = {
    Condition::H,           Condition::P,     Condition::S,         Condition::PseudoMP,
    Condition::Contraction, Condition::ECond, Condition::Assertion, Condition::SetFrame};

inline std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::H: return "h";
    case Condition::P: return "p";
    case Condition::S: return "s";
    case Condition::PseudoMP: return "pseudo_mp";
    case Condition::Contraction: return "contraction";
    case Condition::ECond: return "e_cond";
    case Condition::Assertion: return "assertion";
    case Condition::SetFrame: return "set_frame";
  }
  return "?";
}

inline Condition parse_condition(std::string_view name) {
  for (Condition c : kAllConditions) {
    if (condition_name(c) == name) return c;
  }
  throw InputError("unknown frame condition '" + std::string(name) + "'");
}

/// Exhaustive check of one inclusion condition on the whole universe.
inline CheckResult check_condition(const Frame& f, Condition c) {
  const int n = f.size();
  auto pt = [](int x) { return singleton(x); };
  switch (c) {
    case Condition::H:  // x.y <= x.(x.y)
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const PointSet xy = f.product(x, y);
          if (PointSet d = xy & ~f.product(pt(x), xy)) return CheckResult::fail({x, y, least(d)});
        }
      }
      return CheckResult::pass();
    case Condition::P:  // (x.y).z <= x.(y.z)
    case Condition::S:  // (x.y).z <= y.(x.z)
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            const PointSet lhs = f.product(f.product(x, y), pt(z));
            const PointSet rhs = c == Condition::P ? f.product(pt(x), f.product(y, z))
                                                   : f.product(pt(y), f.product(x, z));
            if (PointSet d = lhs & ~rhs) return CheckResult::fail({x, y, z, least(d)});
          }
        }
      }
      return CheckResult::pass();
    case Condition::PseudoMP:  // x in x.x
      for (int x = 0; x < n; ++x) {
        if (!f.related(x, x, x)) return CheckResult::fail({x});
      }
      return CheckResult::pass();
    case Condition::Contraction:  // x.y <= (x.y).y
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const PointSet xy = f.product(x, y);
          if (PointSet d = xy & ~f.product(xy, pt(y))) return CheckResult::fail({x, y, least(d)});
        }
      }
      return CheckResult::pass();
    case Condition::ECond:  // x in x.N
      for (int x = 0; x < n; ++x) {
        if (!contains(f.product(pt(x), f.normal()), x)) return CheckResult::fail({x});
      }
      return CheckResult::pass();
    case Condition::Assertion:  // x.y <= y.x
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (PointSet d = f.product(x, y) & ~f.product(y, x)) return CheckResult::fail({x, y, least(d)});
        }
      }
      return CheckResult::pass();
    case Condition::SetFrame:  // x.x <= N.x
      for (int x = 0; x < n; ++x) {
        if (PointSet d = f.product(x, x) & ~f.product(f.normal(), pt(x))) {
          return CheckResult::fail({x, least(d)});
        }
      }
      return CheckResult::pass();
  }
  return CheckResult::pass();
}

inline bool satisfies_all(const Frame& f, const std::vector<Condition>& conditions) {
  for (Condition c : conditions) {
    if (!check_condition(f, c).passed) return false;
  }
  return true;
}

class Semilattice {
 public:
  Semilattice(int size, int zero, std::vector<int> join) : size_(size), zero_(zero), join_(std::move(join)) {
    if (size < 1 || size > kMaxPoints) throw InputError("semilattice size out of range");
    if (zero < 0 || zero >= size) throw InputError("semilattice zero out of range");
    if (join_.size() != static_cast<std::size_t>(size) * size) throw InputError("join table has the wrong shape");
    for (int v : join_) {
      if (v < 0 || v >= size) throw InputError("join entry out of range");
    }
  }

  int size() const { return size_; }
  int zero() const { return zero_; }
  int join(int x, int y) const { return join_[static_cast<std::size_t>(x) * size_ + y]; }
  const std::vector<int>& table() const { return join_; }

  friend bool operator==(const Semilattice&, const Semilattice&) = default;

 private:
  int size_;
  int zero_;
  std::vector<int> join_;
};

struct LawViolation {
  std::string law;
  std::vector<int> witness;
};

/// First violated law among commutativity, associativity, idempotence and
/// identity, with the least witness.
inline std::optional<LawViolation> check_semilattice_laws(const Semilattice& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.join(x, y) != s.join(y, x)) return LawViolation{"commutativity", {x, y}};
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (s.join(s.join(x, y), z) != s.join(x, s.join(y, z))) return LawViolation{"associativity", {x, y, z}};
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (s.join(x, x) != x) return LawViolation{"idempotence", {x}};
  }
  for (int x = 0; x < n; ++x) {
    if (s.join(s.zero(), x) != x) return LawViolation{"identity", {x}};
  }
  return std::nullopt;
}

/// x.y = {x join y}, N = {zero}.
inline Frame semilattice_to_frame(const Semilattice& s) {
  if (auto bad = check_semilattice_laws(s)) {
    std::string w;
    for (int v : bad->witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    throw InputError("not a semilattice: " + bad->law + " fails at (" + w + ")");
  }
  std::vector<PointSet> table(static_cast<std::size_t>(s.size()) * s.size());
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) table[static_cast<std::size_t>(x) * s.size() + y] = singleton(s.join(x, y));
  }
  return Frame::from_products(s.size(), singleton(s.zero()), std::move(table));
}

}  // namespace relevanza
