#pragma once

// Monotonicity, orthogonal convexity and pockets of polyominoes.
//
// Convention: a shape is y-monotone when every horizontal line meets it in at
// most one segment (each row's cells are contiguous), and x-monotone when every
// vertical line does (each column's cells are contiguous).

#include <string>
#include <vector>

#include "polylock/error.hpp"
#include "polylock/grid.hpp"

namespace polylock {

struct MonotoneReport {
  bool x_monotone = false;
  bool y_monotone = false;
  bool orthogonally_convex = false;

  friend bool operator==(const MonotoneReport&, const MonotoneReport&) = default;
};

// A maximal connected region added by the monotone closure of a shape.
struct Pocket {
  std::vector<Cell> cells;  // sorted
  Direction opening;

  friend bool operator==(const Pocket&, const Pocket&) = default;
};

// Thrown by pockets() for a closure component that has no open side, i.e. a
// hole (possibly pinched to the outside only at a corner).
class EnclosedPocket : public Error {
 public:
  EnclosedPocket(const std::string& message, std::vector<Cell> cells)
      : Error(message), cells_(std::move(cells)) {}
  const std::vector<Cell>& cells() const noexcept { return cells_; }

 private:
  std::vector<Cell> cells_;
};

bool is_monotone(const Polyomino& shape, Axis axis);

MonotoneReport classify(const Polyomino& shape);

// Fill every gap between a line's extreme cells. Axis::Y fills rows, Axis::X
// fills columns. The result is monotone in `axis`.
std::vector<Cell> monotone_closure(const Polyomino& shape, Axis axis);

// Connected components of closure \ shape, sorted by first cell. Each pocket of
// Axis::Y opens towards +y or -y, each pocket of Axis::X towards +x or -x.
std::vector<Pocket> pockets(const Polyomino& shape, Axis axis);

// The U-pentomino with its pocket opening towards +y.
const Polyomino& u_pentomino();
bool is_u_pentomino(const Polyomino& shape);

struct UPiece {
  std::string piece_id;
  Direction opening;  // world coordinates

  friend bool operator==(const UPiece&, const UPiece&) = default;
};

// Every U-pentomino placement in `config`, in placement order.
std::vector<UPiece> find_u_pentominoes(const Configuration& config);

}  // namespace polylock
