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

// Wang tiles over finite regions of the grid: validation, backtracking
// search, octant/quadrant translation, periodicity and pruning.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "relevanza/errors.hpp"

namespace relevanza {

using Color = std::uint64_t;

struct Tile {
  Color west = 0, east = 0, north = 0, south = 0;
  friend bool operator==(const Tile&, const Tile&) = default;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

class TileSet {
 public:
  TileSet() = default;
  explicit TileSet(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (tiles_[i] == tiles_[j]) {
          throw InputError("duplicate tile at indices " + std::to_string(j) + " and " + std::to_string(i));
        }
      }
    }
    std::map<Color, int> ids;
    auto intern = [&](Color c) { return ids.emplace(c, static_cast<int>(ids.size())).first->second; };
    for (const Tile& t : tiles_) dense_.push_back({intern(t.west), intern(t.east), intern(t.north), intern(t.south)});
    colors_ = static_cast<int>(ids.size());
  }

  int size() const { return static_cast<int>(tiles_.size()); }
  bool empty() const { return tiles_.empty(); }
  const Tile& operator[](int i) const { return tiles_.at(static_cast<std::size_t>(i)); }
  const std::vector<Tile>& tiles() const { return tiles_; }

  /// Colour ids after interning, in order of first appearance.
  struct Dense {
    int west, east, north, south;
  };
  const Dense& dense(int i) const { return dense_.at(static_cast<std::size_t>(i)); }
  int color_count() const { return colors_; }

  /// May `b` sit directly east of `a`?
  bool fits_east(int a, int b) const { return dense(a).east == dense(b).west; }
  /// May `b` sit directly north of `a`?
  bool fits_north(int a, int b) const { return dense(a).north == dense(b).south; }

  friend bool operator==(const TileSet& a, const TileSet& b) { return a.tiles_ == b.tiles_; }

 private:
  std::vector<Tile> tiles_;
  std::vector<Dense> dense_;
  int colors_ = 0;
};

struct Cell {
  int m = 0, n = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Region {
 public:
  enum class Kind { Octant, StrictUpperOctant, Quadrant, Rect, Window };

  static Region octant(int k) { return Region(Kind::Octant, 0, 0, k, k); }
  static Region strict_upper_octant(int k) { return Region(Kind::StrictUpperOctant, 0, 0, k, k); }
  static Region quadrant(int k) { return Region(Kind::Quadrant, 0, 0, k + 1, k + 1, k); }
  static Region rect(int w, int h) { return Region(Kind::Rect, 0, 0, w, h); }
  static Region window(int x0, int y0, int w, int h) { return Region(Kind::Window, x0, y0, w, h); }

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  int x0() const { return x0_; }
  int y0() const { return y0_; }
  int width() const { return w_; }
  int height() const { return h_; }
  bool rectangular() const { return kind_ == Kind::Quadrant || kind_ == Kind::Rect || kind_ == Kind::Window; }

  bool contains(int m, int n) const {
    switch (kind_) {
      case Kind::Octant: return 0 <= m && m <= n && n <= k_;
      case Kind::StrictUpperOctant: return 0 <= m && m < n && n <= k_;
      default: return x0_ <= m && m < x0_ + w_ && y0_ <= n && n < y0_ + h_;
    }
  }
  bool contains(Cell c) const { return contains(c.m, c.n); }

  /// Cells in row-major order: rows bottom to top, west to east in a row.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    switch (kind_) {
      case Kind::Octant:
      case Kind::StrictUpperOctant:
        for (int n = 0; n <= k_; ++n) {
          for (int m = 0; m <= n; ++m) {
            if (contains(m, n)) out.push_back({m, n});
          }
        }
        break;
      default:
        for (int n = y0_; n < y0_ + h_; ++n) {
          for (int m = x0_; m < x0_ + w_; ++m) out.push_back({m, n});
        }
    }
    return out;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Octant: return "octant:" + std::to_string(k_);
      case Kind::StrictUpperOctant: return "strict-octant:" + std::to_string(k_);
      case Kind::Quadrant: return "quadrant:" + std::to_string(k_);
      case Kind::Rect: return "rect:" + std::to_string(w_) + "x" + std::to_string(h_);
      case Kind::Window:
        return "window:" + std::to_string(x0_) + "," + std::to_string(y0_) + "," + std::to_string(w_) + "x" +
               std::to_string(h_);
    }
    return "";
  }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Region(Kind kind, int x0, int y0, int w, int h, int k = -1)
      : kind_(kind), x0_(x0), y0_(y0), w_(w), h_(h), k_(k < 0 ? w : k) {
    if (w < 0 || h < 0) throw InputError("region dimensions must be non-negative");
  }

  Kind kind_;
  int x0_, y0_, w_, h_, k_;
};

/// Parses "octant:K", "strict-octant:K", "quadrant:K", "rect:WxH" and
/// "window:X0,Y0,WxH".
inline Region parse_region(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("region needs the form kind:params");
  const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size() || s.empty()) throw InputError("bad number '" + s + "' in region '" + text + "'");
    return v;
  };
  auto dims = [&](const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw InputError("expected WxH in region '" + text + "'");
    return std::make_pair(num(s.substr(0, x)), num(s.substr(x + 1)));
  };
  if (kind == "octant") return Region::octant(num(arg));
  if (kind == "strict-octant") return Region::strict_upper_octant(num(arg));
  if (kind == "quadrant") return Region::quadrant(num(arg));
  if (kind == "rect") {
    auto [w, h] = dims(arg);
    return Region::rect(w, h);
  }
  if (kind == "window") {
    auto c1 = arg.find(',');
    auto c2 = c1 == std::string::npos ? c1 : arg.find(',', c1 + 1);
    if (c2 == std::string::npos) throw InputError("expected X0,Y0,WxH in region '" + text + "'");
    auto [w, h] = dims(arg.substr(c2 + 1));
    return Region::window(num(arg.substr(0, c1)), num(arg.substr(c1 + 1, c2 - c1 - 1)), w, h);
  }
  throw InputError("unknown region kind '" + kind + "'");
}

class Tiling {
 public:
  explicit Tiling(Region region) : region_(std::move(region)) {}
  Tiling(Region region, std::map<Cell, int> assignment) : region_(std::move(region)), cells_(std::move(assignment)) {}

  const Region& region() const { return region_; }
  const std::map<Cell, int>& assignment() const { return cells_; }
  void set(Cell c, int tile) { cells_[c] = tile; }
  std::optional<int> get(Cell c) const {
    auto it = cells_.find(c);
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }
  int at(int m, int n) const {
    auto it = cells_.find({m, n});
    if (it == cells_.end()) throw PreconditionError("cell (" + std::to_string(m) + "," + std::to_string(n) + ") unassigned");
    return it->second;
  }

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  Region region_;
  std::map<Cell, int> cells_;
};

/// Throws unless `t` is total on its region, stays inside it and uses
/// only indices of `ts`.
inline void require_well_formed(const Tiling& t, const TileSet& ts) {
  for (const auto& [c, idx] : t.assignment()) {
    if (!t.region().contains(c)) throw InputError("tiling assigns a cell outside its region");
    if (idx < 0 || idx >= ts.size()) throw InputError("tile index " + std::to_string(idx) + " out of range");
  }
  for (const Cell& c : t.region().cells()) {
    if (!t.get(c)) {
      throw InputError("tiling leaves cell (" + std::to_string(c.m) + "," + std::to_string(c.n) + ") empty");
    }
  }
}

enum class Direction { East, North, West, South };

inline std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::East: return "east";
    case Direction::North: return "north";
    case Direction::West: return "west";
    case Direction::South: return "south";
  }
  return "";
}

struct EdgeViolation {
  Cell from, to;
  Direction direction;  // East or North
};

struct TilingCheck {
  bool passed = true;
  std::optional<EdgeViolation> violation;
};

/// Row-major scan; for each cell the east edge is checked before the north.
inline TilingCheck validate_tiling(const Tiling& t, const TileSet& ts) {
  require_well_formed(t, ts);
  for (const Cell& c : t.region().cells()) {
    const int here = t.at(c.m, c.n);
    const Cell east{c.m + 1, c.n}, north{c.m, c.n + 1};
    if (t.region().contains(east) && !ts.fits_east(here, t.at(east.m, east.n))) {
      return {false, EdgeViolation{c, east, Direction::East}};
    }
    if (t.region().contains(north) && !ts.fits_north(here, t.at(north.m, north.n))) {
      return {false, EdgeViolation{c, north, Direction::North}};
    }
  }
  return {};
}

enum class SolveStatus { Found, Unsatisfiable, BudgetExhausted };

inline std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::Unsatisfiable: return "unsatisfiable";
    case SolveStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::optional<Tiling> tiling;
  std::uint64_t nodes = 0;  // tile placements attempted
};

inline constexpr std::uint64_t kDefaultSolveBudget = 10'000'000;

/// Depth-first backtracking, cells in row-major order, tiles ascending.
inline SolveResult solve(const TileSet& ts, const Region& r, std::uint64_t budget = kDefaultSolveBudget) {
  const std::vector<Cell> cells = r.cells();
  const std::size_t n = cells.size();
  std::map<Cell, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[cells[i]] = i;
  std::vector<long> west(n, -1), south(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto it = pos.find({cells[i].m - 1, cells[i].n}); it != pos.end()) west[i] = static_cast<long>(it->second);
    if (auto it = pos.find({cells[i].m, cells[i].n - 1}); it != pos.end()) south[i] = static_cast<long>(it->second);
  }

  SolveResult out;
  std::vector<int> choice(n, -1);
  std::size_t i = 0;
  while (true) {
    if (i == n) {
      Tiling t(r);
      for (std::size_t c = 0; c < n; ++c) t.set(cells[c], choice[c]);
      out.status = SolveStatus::Found;
      out.tiling = std::move(t);
      return out;
    }
    int next = choice[i] + 1;
    for (; next < ts.size(); ++next) {
      if (out.nodes >= budget) {
        out.status = SolveStatus::BudgetExhausted;
        return out;
      }
      ++out.nodes;
      if (west[i] >= 0 && !ts.fits_east(choice[west[i]], next)) continue;
      if (south[i] >= 0 && !ts.fits_north(choice[south[i]], next)) continue;
      break;
    }
    if (next < ts.size()) {
      choice[i] = next;
      ++i;
      continue;
    }
    choice[i] = -1;
    if (i == 0) {
      out.status = SolveStatus::Unsatisfiable;
      return out;
    }
    --i;
  }
}

/// Restriction of a tiling to a subregion (every cell of `sub` must be covered).
inline Tiling restrict_tiling(const Tiling& t, const Region& sub) {
  Tiling out(sub);
  for (const Cell& c : sub.cells()) {
    auto v = t.get(c);
    if (!v) throw PreconditionError("subregion is not covered by the tiling");
    out.set(c, *v);
  }
  return out;
}

/// Translates the [0,k]x[k,2k] block of an Octant(2k) tiling down to Quadrant(k).
inline Tiling octant_to_quadrant(const Tiling& t, const TileSet& ts) {
  if (t.region().kind() != Region::Kind::Octant || t.region().k() % 2 != 0) {
    throw PreconditionError("octant_to_quadrant needs a tiling of an even octant");
  }
  if (!validate_tiling(t, ts).passed) throw PreconditionError("octant tiling is invalid");
  const int k = t.region().k() / 2;
  Tiling out(Region::quadrant(k));
  for (int n = 0; n <= k; ++n) {
    for (int m = 0; m <= k; ++m) out.set({m, n}, t.at(m, n + k));
  }
  return out;
}

/// Periodicity with periods (p, q) wherever both cells lie in the window.
inline bool is_periodic(const Tiling& t, int p, int q) {
  const Region& r = t.region();
  if (!r.rectangular()) throw PreconditionError("periodicity is defined on rectangular windows");
  if (p < 1 || q < 1 || r.width() < p + 1 || r.height() < q + 1) {
    throw PreconditionError("window must extend at least one period plus one cell in each direction");
  }
  for (const auto& [c, idx] : t.assignment()) {
    if (auto e = t.get({c.m + p, c.n}); e && *e != idx) return false;
    if (auto u = t.get({c.m, c.n + q}); u && *u != idx) return false;
  }
  return true;
}

struct PruneEntry {
  int original_index;
  Tile tile;
  int round;           // 1-based
  Direction missing;   // first direction without a partner
};

struct PruneResult {
  TileSet tiles;
  std::vector<int> kept;  // original indices of the surviving tiles
  std::vector<PruneEntry> log;
};

/// Removes, round by round until fixpoint, every tile lacking a partner on
/// some side among the tiles still present.
inline PruneResult prune_neighborless(const TileSet& ts) {
  std::vector<int> alive(ts.size());
  for (int i = 0; i < ts.size(); ++i) alive[i] = i;
  std::vector<PruneEntry> log;
  for (int round = 1;; ++round) {
    std::vector<int> next;
    for (int a : alive) {
      std::optional<Direction> missing;
      const Direction order[] = {Direction::East, Direction::West, Direction::North, Direction::South};
      for (Direction d : order) {
        bool found = false;
        for (int b : alive) {
          switch (d) {
            case Direction::East: found = ts.fits_east(a, b); break;
            case Direction::West: found = ts.fits_east(b, a); break;
            case Direction::North: found = ts.fits_north(a, b); break;
            case Direction::South: found = ts.fits_north(b, a); break;
          }
          if (found) break;
        }
        if (!found) {
          missing = d;
          break;
        }
      }
      if (missing) {
        log.push_back({a, ts[a], round, *missing});
      } else {
        next.push_back(a);
      }
    }
    if (next.size() == alive.size()) break;
    alive = std::move(next);
  }
  std::vector<Tile> kept_tiles;
  for (int a : alive) kept_tiles.push_back(ts[a]);
  return {TileSet(std::move(kept_tiles)), alive, std::move(log)};
}

/// Text grid of tile indices, top row first so that row 0 ends up at the
/// bottom; cells outside the region print as '.'.
inline std::string render_text(const Tiling& t) {
  int max_m = -1, max_n = -1, min_m = 0, min_n = 0;
  if (!t.assignment().empty()) {
    min_m = min_n = 1 << 30;
    for (const auto& [c, idx] : t.assignment()) {
      max_m = std::max(max_m, c.m);
      max_n = std::max(max_n, c.n);
      min_m = std::min(min_m, c.m);
      min_n = std::min(min_n, c.n);
    }
  }
  std::size_t width = 1;
  for (const auto& [c, idx] : t.assignment()) width = std::max(width, std::to_string(idx).size());
  std::ostringstream out;
  for (int n = max_n; n >= min_n; --n) {
    for (int m = min_m; m <= max_m; ++m) {
      std::string cell = t.get({m, n}) ? std::to_string(*t.get({m, n})) : ".";
      if (m > min_m) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

/// SVG drawing with each edge coloured by its interned colour id.
inline std::string render_svg(const Tiling& t, const TileSet& ts, int cell_px = 40) {
  static const char* palette[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
                                  "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#9a6324"};
  const int np = sizeof(palette) / sizeof(palette[0]);
  int max_m = 0, max_n = 0;
  for (const auto& [c, idx] : t.assignment()) {
    max_m = std::max(max_m, c.m);
    max_n = std::max(max_n, c.n);
  }
  const int W = (max_m + 1) * cell_px, H = (max_n + 1) * cell_px;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  for (const auto& [c, idx] : t.assignment()) {
    const int x = c.m * cell_px, y = (max_n - c.n) * cell_px, h = cell_px / 2;
    const auto& d = ts.dense(idx);
    auto tri = [&](int color, int x1, int y1, int x2, int y2) {
      out << "  <polygon points=\"" << x + h << ',' << y + h << ' ' << x1 << ',' << y1 << ' ' << x2 << ',' << y2
          << "\" fill=\"" << palette[color % np] << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    };
    tri(d.north, x, y, x + cell_px, y);
    tri(d.east, x + cell_px, y, x + cell_px, y + cell_px);
    tri(d.south, x, y + cell_px, x + cell_px, y + cell_px);
    tri(d.west, x, y, x, y + cell_px);
    out << "  <text x=\"" << x + h << "\" y=\"" << y + h + 4 << "\" font-size=\"10\" text-anchor=\"middle\">" << idx
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace relevanza
