#include "polylock/grid.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "polylock/error.hpp"

namespace polylock {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::PosX: return "+x";
    case Direction::NegX: return "-x";
    case Direction::PosY: return "+y";
    case Direction::NegY: return "-y";
  }
  return "?";
}

std::string_view to_string(Axis a) { return a == Axis::X ? "x" : "y"; }

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "+x" || text == "x") return Direction::PosX;
  if (text == "-x") return Direction::NegX;
  if (text == "+y" || text == "y") return Direction::PosY;
  if (text == "-y") return Direction::NegY;
  return std::nullopt;
}

std::optional<Axis> parse_axis(std::string_view text) {
  if (text == "x") return Axis::X;
  if (text == "y") return Axis::Y;
  return std::nullopt;
}

bool is_edge_connected(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  std::set<Cell> remaining(cells.begin(), cells.end());
  std::vector<Cell> stack{*remaining.begin()};
  remaining.erase(remaining.begin());
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (Direction d : kAllDirections) {
      auto it = remaining.find(c + unit_step(d));
      if (it != remaining.end()) {
        stack.push_back(*it);
        remaining.erase(it);
      }
    }
  }
  return remaining.empty();
}

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw InvalidShape("polyomino must have at least one cell");
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw InvalidShape("polyomino has duplicate cells");
  }
  if (!is_edge_connected(cells_)) throw InvalidShape("polyomino cells are not edge-connected");
}

bool Polyomino::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Cell Polyomino::min_corner() const {
  Cell lo = cells_.front();
  for (const Cell& c : cells_) lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
  return lo;
}

Cell Polyomino::max_corner() const {
  Cell hi = cells_.front();
  for (const Cell& c : cells_) hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
  return hi;
}

Polyomino Polyomino::translated(Offset by) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(c + by);
  // Translation preserves order, connectivity and distinctness.
  return Polyomino(Trusted{}, std::move(out));
}

Polyomino canonicalize(const Polyomino& shape) {
  const Cell lo = shape.min_corner();
  return shape.translated({-lo.x, -lo.y});
}

Polyomino apply_symmetry(const Polyomino& shape, int index) {
  if (index < 0 || index > 7) throw DomainError("symmetry index must be in 0..7");
  std::vector<Cell> out;
  out.reserve(shape.size());
  for (Cell c : shape.cells()) {
    if (index >= 4) c.x = -c.x;
    for (int r = 0; r < index % 4; ++r) c = {-c.y, c.x};
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return canonicalize(Polyomino(Polyomino::Trusted{}, std::move(out)));
}

Polyomino canonical_free_form(const Polyomino& shape) {
  Polyomino best = apply_symmetry(shape, 0);
  for (int i = 1; i < 8; ++i) {
    Polyomino candidate = apply_symmetry(shape, i);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::vector<Polyomino> fixed_orientations(const Polyomino& shape) {
  std::set<Polyomino> images;
  for (int i = 0; i < 8; ++i) images.insert(apply_symmetry(shape, i));
  return {images.begin(), images.end()};
}

std::vector<Polyomino> enumerate_free(int n) {
  if (n < 1 || n > 10) throw DomainError("enumerate_free: n must be in 1..10");
  std::set<Polyomino> level{Polyomino({{0, 0}})};
  for (int size = 2; size <= n; ++size) {
    std::set<Polyomino> next;
    for (const Polyomino& shape : level) {
      for (const Cell& c : shape.cells()) {
        for (Direction d : kAllDirections) {
          const Cell grown = c + unit_step(d);
          if (shape.contains(grown)) continue;
          std::vector<Cell> cells = shape.cells();
          cells.push_back(grown);
          next.insert(canonical_free_form(Polyomino(std::move(cells))));
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

Placement::Placement(std::string piece_id, const Polyomino& shape, Offset offset)
    : id_(std::move(piece_id)), shape_(canonicalize(shape)), offset_(offset) {
  const Cell lo = shape.min_corner();
  offset_ = offset_ + Offset{lo.x, lo.y};
}

Placement Placement::from_cells(std::string piece_id, std::vector<Cell> world_cells) {
  return Placement(std::move(piece_id), Polyomino(std::move(world_cells)));
}

std::vector<Cell> Placement::cells() const {
  std::vector<Cell> out;
  out.reserve(shape_.size());
  for (const Cell& c : shape_.cells()) out.push_back(c + offset_);
  return out;
}

Placement Placement::moved(Offset by) const {
  Placement copy = *this;
  copy.offset_ = copy.offset_ + by;
  return copy;
}

Configuration::Configuration(std::vector<Placement> placements)
    : placements_(std::move(placements)) {
  std::set<std::string_view> ids;
  for (const Placement& p : placements_) {
    if (!ids.insert(p.id()).second) {
      throw InvariantViolation("duplicate piece id '" + p.id() + "'");
    }
  }
  (void)occupied_cells(*this);
}

std::optional<std::size_t> Configuration::index_of(std::string_view piece_id) const {
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    if (placements_[i].id() == piece_id) return i;
  }
  return std::nullopt;
}

const Placement& Configuration::at(std::string_view piece_id) const {
  if (auto i = index_of(piece_id)) return placements_[*i];
  throw UnknownPiece("unknown piece '" + std::string(piece_id) + "'");
}

Configuration Configuration::with(Placement placement) const {
  std::vector<Placement> next = placements_;
  next.push_back(std::move(placement));
  return Configuration(std::move(next));
}

Configuration Configuration::moved(std::string_view piece_id, Offset by) const {
  const auto i = index_of(piece_id);
  if (!i) throw UnknownPiece("unknown piece '" + std::string(piece_id) + "'");
  std::vector<Placement> next = placements_;
  next[*i] = next[*i].moved(by);
  return Configuration(std::move(next));
}

Configuration Configuration::translated(Offset by) const {
  Configuration copy = *this;
  for (Placement& p : copy.placements_) p = p.moved(by);
  return copy;
}

std::vector<Cell> occupied_cells(const Configuration& config) {
  std::map<Cell, std::size_t> owner;
  const auto& placements = config.placements();
  for (std::size_t i = 0; i < placements.size(); ++i) {
    for (const Cell& c : placements[i].cells()) {
      auto [it, inserted] = owner.emplace(c, i);
      if (!inserted) {
        throw InvariantViolation("pieces '" + placements[it->second].id() + "' and '" +
                                 placements[i].id() + "' overlap at (" +
                                 std::to_string(c.x) + "," + std::to_string(c.y) + ")");
      }
    }
  }
  std::vector<Cell> out;
  out.reserve(owner.size());
  for (const auto& [c, _] : owner) out.push_back(c);
  return out;
}

bool sweep_collides(std::span<const Cell> mover, std::span<const Cell> obstacle,
                    Direction d, std::optional<int> distance) {
  if (distance && *distance <= 0) throw DomainError("sweep distance must be positive");
  if (mover.empty() || obstacle.empty()) return false;
  // Mover positions along d, per line across d.
  std::unordered_map<int, std::vector<int>> lines;
  const int s = sign_of(d);
  for (const Cell& m : mover) lines[across(m, d)].push_back(s * along(m, d));
  for (auto& [_, positions] : lines) std::sort(positions.begin(), positions.end());
  for (const Cell& o : obstacle) {
    auto it = lines.find(across(o, d));
    if (it == lines.end()) continue;
    const auto& positions = it->second;
    const int target = s * along(o, d);
    // Closest mover cell strictly behind the obstacle cell.
    auto behind = std::lower_bound(positions.begin(), positions.end(), target);
    if (behind == positions.begin()) continue;
    const int gap = target - *std::prev(behind);
    if (!distance || gap <= *distance) return true;
  }
  return false;
}

}  // namespace polylock
