#pragma once

// Brute-force reference implementations used to check the library. They share
// no code with it beyond the plain Cell/Configuration value types.

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "polylock/grid.hpp"

namespace oracle {

using polylock::Cell;
using polylock::Configuration;
using polylock::Direction;

using CellSet = std::vector<Cell>;  // sorted, translated to min x = min y = 0

CellSet normalize(std::vector<Cell> cells);

// Number of fixed polyominoes with n cells (Redelmeier's counting scheme).
std::size_t count_fixed(int n);

// All fixed polyominoes with n cells, by growing every (n-1)-cell one.
std::set<CellSet> fixed_polyominoes(int n);

// The 8 square symmetries, written independently of the library.
CellSet transform(const CellSet& cells, int k);

// Number of orbits of `fixed` under the square symmetries.
std::size_t count_orbits(const std::set<CellSet>& fixed);

// Every row (rows=true) or column intersects the cells in one interval.
bool lines_contiguous(const std::vector<Cell>& cells, bool rows);

// (blocker, blocked) index pairs: some cell of the blocker lies strictly ahead
// of some cell of the blocked piece on the same line.
std::set<std::pair<std::size_t, std::size_t>> blocking_pairs(const Configuration& config, Direction d);

// Steps the mover one unit at a time. Infinite distance is cut at the point
// where the mover has passed every obstacle cell.
bool sweep_hits(const std::vector<Cell>& mover, const std::vector<Cell>& obstacle, Direction d,
                std::optional<int> distance);

// Plain BFS over single-piece unit moves with piece 0 held fixed and every
// other piece within `radius` (Chebyshev) of its start. nullopt when more
// than `max_states` states are needed.
std::optional<bool> escapes(const Configuration& config, int radius, std::size_t max_states);

// h*cos(b) + w*sin|b| written as a phase-shifted cosine.
double extent_closed_form(double w, double h, double beta);

}  // namespace oracle
