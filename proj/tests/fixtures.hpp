#pragma once

// Shared test inputs: data files, generator settings and a corpus of
// configurations.

#include <cstdint>
#include <string>
#include <vector>

#include "polylock/grid.hpp"
#include "polylock/io.hpp"
#include "polylock/packing.hpp"

namespace fixtures {

polylock::Document load(const std::string& name);  // from tests/data

// Pentominoes, with the U orientations weighted up so that plugged pockets
// are common.
polylock::PackingParams dense_pentomino_packing();
// Pools of 1..7-cell pieces restricted to y-monotone or orthogonally convex shapes.
polylock::PackingParams y_monotone_packing();
polylock::PackingParams ortho_convex_packing();
// Up to four touching pieces of 1..5 cells in an 8x8 box.
polylock::PackingParams small_packing();

// True when separate_le5, or plan_uto in some direction, yields a plan that
// simulates as valid.
bool planner_succeeds(const polylock::Configuration& config);

// At least 50 assorted configurations for round-trip checks.
std::vector<polylock::Configuration> format_corpus();

}  // namespace fixtures
