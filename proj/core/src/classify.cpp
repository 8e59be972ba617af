#include "polylock/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polylock {
namespace {

// Line index and position-within-line for the lines tested by `axis`.
int line_of(Cell c, Axis axis) { return axis == Axis::Y ? c.y : c.x; }
int pos_of(Cell c, Axis axis) { return axis == Axis::Y ? c.x : c.y; }
Cell make_cell(int line, int pos, Axis axis) {
  return axis == Axis::Y ? Cell{pos, line} : Cell{line, pos};
}

std::map<int, std::pair<int, int>> line_extents(const Polyomino& shape, Axis axis) {
  std::map<int, std::pair<int, int>> extent;
  for (const Cell& c : shape.cells()) {
    const int line = line_of(c, axis);
    const int pos = pos_of(c, axis);
    auto [it, inserted] = extent.emplace(line, std::pair{pos, pos});
    if (!inserted) {
      it->second.first = std::min(it->second.first, pos);
      it->second.second = std::max(it->second.second, pos);
    }
  }
  return extent;
}

}  // namespace

bool is_monotone(const Polyomino& shape, Axis axis) {
  std::map<int, int> count;
  for (const Cell& c : shape.cells()) ++count[line_of(c, axis)];
  for (const auto& [line, extent] : line_extents(shape, axis)) {
    if (extent.second - extent.first + 1 != count[line]) return false;
  }
  return true;
}

MonotoneReport classify(const Polyomino& shape) {
  MonotoneReport report;
  report.x_monotone = is_monotone(shape, Axis::X);
  report.y_monotone = is_monotone(shape, Axis::Y);
  report.orthogonally_convex = report.x_monotone && report.y_monotone;
  return report;
}

std::vector<Cell> monotone_closure(const Polyomino& shape, Axis axis) {
  std::vector<Cell> out;
  for (const auto& [line, extent] : line_extents(shape, axis)) {
    for (int pos = extent.first; pos <= extent.second; ++pos) {
      out.push_back(make_cell(line, pos, axis));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pocket> pockets(const Polyomino& shape, Axis axis) {
  const std::vector<Cell> closure_cells = monotone_closure(shape, axis);
  const std::set<Cell> closure(closure_cells.begin(), closure_cells.end());
  std::set<Cell> gaps;
  for (const Cell& c : closure_cells) {
    if (!shape.contains(c)) gaps.insert(c);
  }

  // Pockets of a row closure are bounded left and right by the shape, so they
  // can only open across the rows; likewise for columns.
  const Direction toward = axis == Axis::Y ? Direction::PosY : Direction::PosX;
  const Direction away = opposite(toward);

  std::vector<Pocket> out;
  while (!gaps.empty()) {
    std::vector<Cell> component;
    std::vector<Cell> stack{*gaps.begin()};
    gaps.erase(gaps.begin());
    while (!stack.empty()) {
      const Cell c = stack.back();
      stack.pop_back();
      component.push_back(c);
      for (Direction d : kAllDirections) {
        auto it = gaps.find(c + unit_step(d));
        if (it != gaps.end()) {
          stack.push_back(*it);
          gaps.erase(it);
        }
      }
    }
    std::sort(component.begin(), component.end());

    auto open_towards = [&](Direction d) {
      return std::any_of(component.begin(), component.end(), [&](const Cell& c) {
        return !closure.contains(c + unit_step(d));
      });
    };
    const bool open_pos = open_towards(toward);
    const bool open_neg = open_towards(away);
    if (!open_pos && !open_neg) {
      throw EnclosedPocket("pocket at (" + std::to_string(component.front().x) + "," +
                               std::to_string(component.front().y) + ") has no opening",
                           component);
    }
    if (open_pos && open_neg) {
      throw InvariantViolation("closure component opens on both sides");
    }
    out.push_back({std::move(component), open_pos ? toward : away});
  }
  std::sort(out.begin(), out.end(),
            [](const Pocket& a, const Pocket& b) { return a.cells < b.cells; });
  return out;
}

const Polyomino& u_pentomino() {
  static const Polyomino u({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}});
  return u;
}

bool is_u_pentomino(const Polyomino& shape) {
  static const Polyomino key = canonical_free_form(u_pentomino());
  return shape.size() == 5 && canonical_free_form(shape) == key;
}

std::vector<UPiece> find_u_pentominoes(const Configuration& config) {
  std::vector<UPiece> out;
  for (const Placement& p : config.placements()) {
    if (!is_u_pentomino(p.shape())) continue;
    const Polyomino world = p.world_shape();
    // A U is monotone in exactly one axis and has a single one-cell pocket in the other.
    auto found = pockets(world, Axis::Y);
    if (found.empty()) found = pockets(world, Axis::X);
    if (found.size() != 1) throw InvariantViolation("U-pentomino without a single pocket");
    out.push_back({p.id(), found.front().opening});
  }
  return out;
}

}  // namespace polylock
