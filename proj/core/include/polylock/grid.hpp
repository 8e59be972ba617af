#pragma once

// Exact integer-grid model of polyominoes and grid-aligned configurations.
//
// A cell is the closed unit square whose lower-left corner is (x, y). Two
// pieces may share edges but never interiors. Connectivity is through shared
// edges only; cells touching at a corner are not connected.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polylock {

struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Offset {
  int dx = 0;
  int dy = 0;

  friend auto operator<=>(const Offset&, const Offset&) = default;
};

constexpr Cell operator+(Cell c, Offset o) { return {c.x + o.dx, c.y + o.dy}; }
constexpr Offset operator+(Offset a, Offset b) { return {a.dx + b.dx, a.dy + b.dy}; }
constexpr Offset operator-(Offset a, Offset b) { return {a.dx - b.dx, a.dy - b.dy}; }
constexpr Offset operator-(Offset a) { return {-a.dx, -a.dy}; }
constexpr Offset operator*(int k, Offset a) { return {k * a.dx, k * a.dy}; }

enum class Axis { X, Y };

enum class Direction { PosX, NegX, PosY, NegY };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::PosX, Direction::NegX, Direction::PosY, Direction::NegY};

constexpr Axis axis_of(Direction d) {
  return (d == Direction::PosX || d == Direction::NegX) ? Axis::X : Axis::Y;
}
constexpr int sign_of(Direction d) {
  return (d == Direction::PosX || d == Direction::PosY) ? 1 : -1;
}
constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::PosX: return Direction::NegX;
    case Direction::NegX: return Direction::PosX;
    case Direction::PosY: return Direction::NegY;
    case Direction::NegY: return Direction::PosY;
  }
  return d;
}
constexpr Offset unit_step(Direction d) {
  return axis_of(d) == Axis::X ? Offset{sign_of(d), 0} : Offset{0, sign_of(d)};
}
constexpr Axis other_axis(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }

// Coordinate of `c` along / across the axis of `d`.
constexpr int along(Cell c, Direction d) { return axis_of(d) == Axis::X ? c.x : c.y; }
constexpr int across(Cell c, Direction d) { return axis_of(d) == Axis::X ? c.y : c.x; }

std::string_view to_string(Direction d);
std::string_view to_string(Axis a);
// Accepts "+x", "-x", "+y", "-y" (and "x"/"y" as the positive direction).
std::optional<Direction> parse_direction(std::string_view text);
std::optional<Axis> parse_axis(std::string_view text);

// True iff `cells` is non-empty and 4-connected. Duplicates are ignored.
bool is_edge_connected(std::span<const Cell> cells);

// Sorted, duplicate-free, non-empty, 4-connected set of cells. Coordinates are
// arbitrary; use canonicalize() for the translation-free form.
class Polyomino {
 public:
  // Throws InvalidShape on empty input, duplicate cells or disconnected cells.
  explicit Polyomino(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool contains(Cell c) const;

  Cell min_corner() const;
  Cell max_corner() const;
  int width() const { return max_corner().x - min_corner().x + 1; }
  int height() const { return max_corner().y - min_corner().y + 1; }

  Polyomino translated(Offset by) const;

  friend bool operator==(const Polyomino&, const Polyomino&) = default;
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  struct Trusted {};
  Polyomino(Trusted, std::vector<Cell> sorted_cells) : cells_(std::move(sorted_cells)) {}

  std::vector<Cell> cells_;

  friend Polyomino apply_symmetry(const Polyomino&, int);
};

// Translate so that min x = min y = 0.
Polyomino canonicalize(const Polyomino& shape);

// The 8 symmetries of the square: index 0..3 rotate by 90*index degrees
// counter-clockwise; 4..7 mirror x first, then rotate. Result is canonical.
Polyomino apply_symmetry(const Polyomino& shape, int index);

// Lexicographically least canonical image over all 8 symmetries.
Polyomino canonical_free_form(const Polyomino& shape);

// Distinct canonical fixed orientations of `shape` (1, 2, 4 or 8 of them), sorted.
std::vector<Polyomino> fixed_orientations(const Polyomino& shape);

// All free polyominoes of `n` cells in canonical free form, sorted.
// Throws DomainError unless 1 <= n <= 10.
std::vector<Polyomino> enumerate_free(int n);

// A piece of a configuration: a canonical shape at an integer offset.
class Placement {
 public:
  // `shape` may be given at any position; it is stored canonicalized and the
  // residual translation is folded into the offset.
  Placement(std::string piece_id, const Polyomino& shape, Offset offset = {});

  // Placement whose occupied cells are exactly `world_cells`.
  static Placement from_cells(std::string piece_id, std::vector<Cell> world_cells);

  const std::string& id() const noexcept { return id_; }
  const Polyomino& shape() const noexcept { return shape_; }
  Offset offset() const noexcept { return offset_; }

  std::vector<Cell> cells() const;
  Polyomino world_shape() const { return shape_.translated(offset_); }
  Placement moved(Offset by) const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  std::string id_;
  Polyomino shape_;
  Offset offset_;
};

// A system of placed pieces with distinct ids and pairwise interior-disjoint cells.
class Configuration {
 public:
  Configuration() = default;
  // Throws InvariantViolation on duplicate ids or overlapping pieces.
  explicit Configuration(std::vector<Placement> placements);

  const std::vector<Placement>& placements() const noexcept { return placements_; }
  std::size_t size() const noexcept { return placements_.size(); }
  bool empty() const noexcept { return placements_.empty(); }

  std::optional<std::size_t> index_of(std::string_view piece_id) const;
  // Throws UnknownPiece.
  const Placement& at(std::string_view piece_id) const;

  // Mutations return a new, re-validated configuration.
  Configuration with(Placement placement) const;
  Configuration moved(std::string_view piece_id, Offset by) const;
  Configuration translated(Offset by) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Placement> placements_;
};

// Union of all occupied cells, sorted. Throws InvariantViolation naming the two
// pieces when any cell is covered twice.
std::vector<Cell> occupied_cells(const Configuration& config);

// Does translating `mover` by t*d, 0 < t <= distance, meet `obstacle`?
// An empty `distance` means infinity. `mover` and `obstacle` must be disjoint.
bool sweep_collides(std::span<const Cell> mover, std::span<const Cell> obstacle,
                    Direction d, std::optional<int> distance = std::nullopt);

}  // namespace polylock
