#include "polylock/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "polylock/error.hpp"

namespace polylock {

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Escaped: return "escaped";
    case SearchOutcome::LockedWithinBudget: return "locked-within-budget";
    case SearchOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

std::string_view to_string(ReachOutcome outcome) {
  switch (outcome) {
    case ReachOutcome::Reachable: return "reachable";
    case ReachOutcome::Unreachable: return "unreachable";
    case ReachOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

std::string to_string(const SlideMove& move) {
  return to_string(Move{move.pieces, move.direction});
}

std::optional<MoveMode> parse_move_mode(std::string_view text) {
  if (text == "single") return MoveMode::SinglePiece;
  if (text == "subset") return MoveMode::SubsetMove;
  return std::nullopt;
}

namespace {

using PieceSet = std::vector<std::uint32_t>;  // sorted piece indices

// Occupancy of a rectangular arena; -1 marks an empty cell.
class Grid {
 public:
  Grid(Cell lo, Cell hi)
      : lo_(lo), width_(hi.x - lo.x + 1), height_(hi.y - lo.y + 1), owner_(width_ * height_, -1) {}

  bool inside(Cell c) const {
    return c.x >= lo_.x && c.y >= lo_.y && c.x < lo_.x + width_ && c.y < lo_.y + height_;
  }
  int owner(Cell c) const { return inside(c) ? owner_[index(c)] : -1; }
  void set(Cell c, int piece) { owner_[index(c)] = piece; }

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.y - lo_.y) * width_ + static_cast<std::size_t>(c.x - lo_.x);
  }
  Cell lo_;
  int width_;
  int height_;
  std::vector<int> owner_;
};

bool contains(const PieceSet& set, int piece) {
  return piece >= 0 && std::binary_search(set.begin(), set.end(), static_cast<std::uint32_t>(piece));
}

struct OffsetVecHash {
  std::size_t operator()(const std::vector<Offset>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const Offset& o : v) {
      h ^= static_cast<std::uint32_t>(o.dx) * 0x9E3779B1u;
      h *= 1099511628211ull;
      h ^= static_cast<std::uint32_t>(o.dy) * 0x85EBCA77u;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Successor {
  std::vector<Offset> displacement;
  PieceSet pieces;
  Direction direction;
};

struct Expansion {
  std::optional<std::pair<PieceSet, Direction>> escape;
  bool target = false;
  std::vector<Successor> successors;
};

template <class Body>
void parallel_chunks(std::size_t count, int threads, Body&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  if (workers == 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

enum class Goal { Escape, ReachTarget };

class Engine {
 public:
  Engine(const Configuration& config, const SearchBudget& budget, Goal goal,
         std::optional<std::uint32_t> anchor, std::optional<std::uint32_t> key, Offset target)
      : config_(config), budget_(budget), goal_(goal), anchor_(anchor), key_(key), target_(target) {
    const auto& placements = config.placements();
    n_ = static_cast<std::uint32_t>(placements.size());
    Cell lo{0, 0}, hi{0, 0};
    bool first = true;
    for (const Placement& p : placements) {
      cells_.push_back(p.cells());
      for (const Cell& c : cells_.back()) {
        if (first) lo = hi = c;
        first = false;
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
      }
    }
    // Every reachable cell lies within the start box grown by the radius; one
    // more ring keeps unit-step lookups inside the grid.
    const int margin = budget.radius + 1;
    lo_ = {lo.x - margin, lo.y - margin};
    hi_ = {hi.x + margin, hi.y + margin};

    // Pieces with identical fixed shape are interchangeable, except the anchor and the key.
    std::map<std::vector<Cell>, std::vector<std::uint32_t>> by_shape;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i == anchor_ || i == key_) continue;
      by_shape[placements[i].shape().cells()].push_back(i);
    }
    for (auto& [_, members] : by_shape) {
      if (members.size() > 1) classes_.push_back(members);
    }
    for (const Placement& p : placements) origin_.push_back(p.offset());
  }

  void occupy(const std::vector<Offset>& disp, Grid& grid, bool on) const {
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (const Cell& c : cells_[i]) grid.set(c + disp[i], on ? static_cast<int>(i) : -1);
    }
  }

  // Unit moves of `disp` with the grid already occupied; no radius bound.
  std::vector<std::pair<PieceSet, Direction>> moves(const std::vector<Offset>& disp,
                                                    const Grid& grid) const {
    std::vector<std::pair<PieceSet, Direction>> out;
    for (const PieceSet& set : movable_sets(disp, grid)) {
      for (Direction d : kAllDirections) {
        if (can_slide(set, d, disp, grid)) out.emplace_back(set, d);
      }
    }
    return out;
  }

  Expansion expand(const std::vector<Offset>& disp, Grid& grid) const {
    occupy(disp, grid, true);
    Expansion out;
    if (goal_ == Goal::Escape) {
      out.escape = find_escape(disp, grid);
    } else {
      out.target = disp[*key_] == target_;
    }
    if (!out.escape && !out.target) {
      for (auto& [set, d] : moves(disp, grid)) {
        std::vector<Offset> next = disp;
        for (std::uint32_t i : set) next[i] = next[i] + unit_step(d);
        if (anchor_ && contains(set, static_cast<int>(*anchor_))) {
          const Offset shift = next[*anchor_];
          for (Offset& o : next) o = o - shift;
        }
        if (!within_radius(next)) continue;
        out.successors.push_back({std::move(next), std::move(set), d});
      }
    }
    occupy(disp, grid, false);
    return out;
  }

  std::vector<Offset> key_of(const std::vector<Offset>& disp) const {
    std::vector<Offset> key = disp;
    for (const auto& members : classes_) {
      std::vector<Offset> at;
      for (std::uint32_t i : members) at.push_back(origin_[i] + disp[i]);
      std::sort(at.begin(), at.end());
      for (std::size_t k = 0; k < members.size(); ++k) key[members[k]] = at[k];
    }
    return key;
  }

  Grid make_grid() const { return Grid(lo_, hi_); }
  std::uint32_t size() const { return n_; }

 private:
  bool within_radius(const std::vector<Offset>& disp) const {
    return std::all_of(disp.begin(), disp.end(), [&](const Offset& o) {
      return std::max(std::abs(o.dx), std::abs(o.dy)) <= budget_.radius;
    });
  }

  bool can_slide(const PieceSet& set, Direction d, const std::vector<Offset>& disp,
                 const Grid& grid) const {
    for (std::uint32_t i : set) {
      for (const Cell& c : cells_[i]) {
        const int o = grid.owner(c + disp[i] + unit_step(d));
        if (o >= 0 && !contains(set, o)) return false;
      }
    }
    return true;
  }

  bool sweeps_free(const PieceSet& set, Direction d, const std::vector<Offset>& disp,
                   const Grid& grid) const {
    for (std::uint32_t i : set) {
      for (const Cell& c : cells_[i]) {
        for (Cell at = c + disp[i] + unit_step(d); grid.inside(at); at = at + unit_step(d)) {
          const int o = grid.owner(at);
          if (o >= 0 && !contains(set, o)) return false;
        }
      }
    }
    return true;
  }

  std::vector<PieceSet> movable_sets(const std::vector<Offset>& disp, const Grid& grid) const {
    std::vector<PieceSet> sets;
    for (std::uint32_t i = 0; i < n_; ++i) sets.push_back({i});
    if (budget_.mode != MoveMode::SubsetMove) return sets;

    std::vector<std::set<std::uint32_t>> adjacent(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (const Cell& c : cells_[i]) {
        for (Direction d : kAllDirections) {
          const int o = grid.owner(c + disp[i] + unit_step(d));
          if (o >= 0 && static_cast<std::uint32_t>(o) != i) adjacent[i].insert(o);
        }
      }
    }
    std::set<PieceSet> level(sets.begin(), sets.end());
    const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(std::max(budget_.max_subset, 1)),
                                                  n_ > 0 ? n_ - 1 : 0);
    for (std::size_t size = 2; size <= cap; ++size) {
      std::set<PieceSet> grown;
      for (const PieceSet& s : level) {
        for (std::uint32_t i : s) {
          for (std::uint32_t j : adjacent[i]) {
            if (contains(s, static_cast<int>(j))) continue;
            PieceSet t = s;
            t.insert(std::upper_bound(t.begin(), t.end(), j), j);
            grown.insert(std::move(t));
          }
        }
      }
      sets.insert(sets.end(), grown.begin(), grown.end());
      level = std::move(grown);
    }
    return sets;
  }

  std::optional<std::pair<PieceSet, Direction>> find_escape(const std::vector<Offset>& disp,
                                                            const Grid& grid) const {
    for (const PieceSet& set : movable_sets(disp, grid)) {
      for (Direction d : kAllDirections) {
        if (sweeps_free(set, d, disp, grid)) return std::pair{set, d};
      }
    }
    return std::nullopt;
  }

  const Configuration& config_;
  SearchBudget budget_;
  Goal goal_;
  std::optional<std::uint32_t> anchor_;
  std::optional<std::uint32_t> key_;
  Offset target_;
  std::uint32_t n_ = 0;
  std::vector<std::vector<Cell>> cells_;
  std::vector<Offset> origin_;
  std::vector<std::vector<std::uint32_t>> classes_;
  Cell lo_;
  Cell hi_;
};

struct Node {
  std::uint32_t parent;
  PieceSet pieces;
  Direction direction;
};

struct BfsResult {
  enum class Kind { Goal, Exhausted, OverBudget } kind = Kind::Exhausted;
  std::vector<SlideMove> trace;
  std::optional<std::pair<PieceSet, Direction>> escape;
  std::size_t states = 0;
};

std::vector<std::string> names(const Configuration& config, const PieceSet& set) {
  std::vector<std::string> out;
  for (std::uint32_t i : set) out.push_back(config.placements()[i].id());
  return out;
}

BfsResult run_bfs(const Configuration& config, const Engine& engine, const SearchBudget& budget) {
  std::vector<std::vector<Offset>> states{std::vector<Offset>(engine.size())};
  std::vector<Node> nodes{{0, {}, Direction::PosX}};
  std::unordered_map<std::vector<Offset>, std::uint32_t, OffsetVecHash> seen;
  seen.emplace(engine.key_of(states[0]), 0);

  auto trace_to = [&](std::uint32_t s) {
    std::vector<SlideMove> trace;
    for (; s != 0; s = nodes[s].parent) trace.push_back({names(config, nodes[s].pieces), nodes[s].direction});
    std::reverse(trace.begin(), trace.end());
    return trace;
  };

  std::vector<std::uint32_t> frontier{0};
  std::vector<Grid> grids;
  const int workers = std::max(1, budget.threads);
  for (int w = 0; w < workers; ++w) grids.push_back(engine.make_grid());

  while (!frontier.empty()) {
    std::vector<Expansion> expanded(frontier.size());
    std::vector<std::size_t> chunk_of(frontier.size());
    // Each chunk gets its own grid; chunk boundaries follow parallel_chunks.
    const std::size_t used = std::min<std::size_t>(static_cast<std::size_t>(workers), frontier.size());
    const std::size_t chunk = (frontier.size() + used - 1) / used;
    parallel_chunks(frontier.size(), workers, [&](std::size_t begin, std::size_t end) {
      Grid& grid = grids[begin / chunk];
      for (std::size_t k = begin; k < end; ++k) expanded[k] = engine.expand(states[frontier[k]], grid);
    });

    for (std::size_t k = 0; k < frontier.size(); ++k) {
      if (expanded[k].escape || expanded[k].target) {
        BfsResult found;
        found.kind = BfsResult::Kind::Goal;
        found.trace = trace_to(frontier[k]);
        found.escape = expanded[k].escape;
        found.states = states.size();
        return found;
      }
    }

    std::vector<std::uint32_t> next;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (Successor& s : expanded[k].successors) {
        auto key = engine.key_of(s.displacement);
        if (seen.contains(key)) continue;
        if (states.size() >= budget.max_states) {
          BfsResult over;
          over.kind = BfsResult::Kind::OverBudget;
          over.states = states.size();
          return over;
        }
        const auto id = static_cast<std::uint32_t>(states.size());
        seen.emplace(std::move(key), id);
        states.push_back(std::move(s.displacement));
        nodes.push_back({frontier[k], std::move(s.pieces), s.direction});
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  BfsResult done;
  done.states = states.size();
  return done;
}

void check_budget(const SearchBudget& budget) {
  if (budget.radius < 0) throw DomainError("search radius must be non-negative");
  if (budget.max_states < 1) throw DomainError("max_states must be at least 1");
  if (budget.max_subset < 1) throw DomainError("max_subset must be at least 1");
}

}  // namespace

std::vector<SlideMove> legal_moves(const Configuration& config, const SearchState& state,
                                   MoveMode mode, int max_subset) {
  if (state.displacement.size() != config.size()) {
    throw DomainError("search state does not match the configuration");
  }
  const Configuration now = [&] {
    std::vector<Placement> moved;
    for (std::size_t i = 0; i < config.size(); ++i) {
      moved.push_back(config.placements()[i].moved(state.displacement[i]));
    }
    return Configuration(std::move(moved));
  }();
  std::vector<SlideMove> out;
  if (now.empty()) return out;
  SearchBudget budget;
  budget.mode = mode;
  budget.max_subset = max_subset;
  budget.radius = 1;
  const Engine engine(now, budget, Goal::Escape, std::nullopt, std::nullopt, {});
  Grid grid = engine.make_grid();
  const std::vector<Offset> zero(now.size());
  engine.occupy(zero, grid, true);
  for (const auto& [set, d] : engine.moves(zero, grid)) out.push_back({names(now, set), d});
  return out;
}

SearchVerdict escape_search(const Configuration& config, const SearchBudget& budget) {
  check_budget(budget);
  if (config.empty()) throw DomainError("escape_search needs at least one piece");
  const std::optional<std::uint32_t> anchor =
      config.size() > 1 ? std::optional<std::uint32_t>(0) : std::nullopt;
  const Engine engine(config, budget, Goal::Escape, anchor, std::nullopt, {});
  BfsResult r = run_bfs(config, engine, budget);

  SearchVerdict verdict;
  verdict.states_explored = r.states;
  switch (r.kind) {
    case BfsResult::Kind::Goal:
      verdict.outcome = SearchOutcome::Escaped;
      verdict.trace = std::move(r.trace);
      verdict.escape = Move{names(config, r.escape->first), r.escape->second};
      break;
    case BfsResult::Kind::Exhausted:
      verdict.outcome = SearchOutcome::LockedWithinBudget;
      break;
    case BfsResult::Kind::OverBudget:
      verdict.outcome = SearchOutcome::BudgetExhausted;
      break;
  }
  return verdict;
}

ReachVerdict key_piece_reachable(const Configuration& config, std::string_view key,
                                 Offset displacement, const SearchBudget& budget) {
  check_budget(budget);
  const auto k = config.index_of(key);
  if (!k) throw UnknownPiece("unknown key piece '" + std::string(key) + "'");
  std::optional<std::uint32_t> anchor;
  for (std::uint32_t i = 0; i < config.size(); ++i) {
    if (i != *k) {
      anchor = i;
      break;
    }
  }
  const Engine engine(config, budget, Goal::ReachTarget, anchor, static_cast<std::uint32_t>(*k),
                      displacement);
  BfsResult r = run_bfs(config, engine, budget);

  ReachVerdict verdict;
  verdict.states_explored = r.states;
  switch (r.kind) {
    case BfsResult::Kind::Goal:
      verdict.outcome = ReachOutcome::Reachable;
      verdict.trace = std::move(r.trace);
      break;
    case BfsResult::Kind::Exhausted:
      verdict.outcome = ReachOutcome::Unreachable;
      break;
    case BfsResult::Kind::OverBudget:
      verdict.outcome = ReachOutcome::BudgetExhausted;
      break;
  }
  return verdict;
}

std::vector<std::string> slide_dependency(const Configuration& config, std::string_view piece,
                                          Direction d) {
  const auto start = config.index_of(piece);
  if (!start) throw UnknownPiece("unknown piece '" + std::string(piece) + "'");
  std::map<Cell, std::size_t> owner;
  const auto& placements = config.placements();
  for (std::size_t i = 0; i < placements.size(); ++i) {
    for (const Cell& c : placements[i].cells()) owner.emplace(c, i);
  }
  std::vector<bool> in(placements.size(), false);
  std::vector<std::size_t> todo{*start};
  in[*start] = true;
  while (!todo.empty()) {
    const std::size_t i = todo.back();
    todo.pop_back();
    for (const Cell& c : placements[i].cells()) {
      auto it = owner.find(c + unit_step(d));
      if (it != owner.end() && !in[it->second]) {
        in[it->second] = true;
        todo.push_back(it->second);
      }
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    if (in[i]) out.push_back(placements[i].id());
  }
  return out;
}

std::optional<Configuration> replay(const Configuration& config, std::span<const SlideMove> trace) {
  Configuration now = config;
  for (const SlideMove& move : trace) {
    std::vector<Placement> next = now.placements();
    for (const std::string& id : move.pieces) {
      const auto i = now.index_of(id);
      if (!i) return std::nullopt;
      next[*i] = next[*i].moved(unit_step(move.direction));
    }
    try {
      now = Configuration(std::move(next));
    } catch (const InvariantViolation&) {
      return std::nullopt;
    }
  }
  return now;
}

bool verify_escape(const Configuration& config, const SearchVerdict& verdict) {
  if (verdict.outcome != SearchOutcome::Escaped || !verdict.escape) return false;
  const auto end = replay(config, verdict.trace);
  if (!end) return false;
  std::vector<Cell> moving;
  std::vector<Cell> rest;
  for (const Placement& p : end->placements()) {
    const bool mover = std::find(verdict.escape->pieces.begin(), verdict.escape->pieces.end(),
                                 p.id()) != verdict.escape->pieces.end();
    for (const Cell& c : p.cells()) (mover ? moving : rest).push_back(c);
  }
  if (moving.empty()) return false;
  return !sweep_collides(moving, rest, verdict.escape->direction);
}

}  // namespace polylock
