#pragma once

// Seeded random packings for property suites and benchmarks. Output depends
// only on the parameters and the seed (no std:: distributions involved).

#include <cstdint>
#include <functional>
#include <vector>

#include "polylock/grid.hpp"

namespace polylock {

struct PackingParams {
  int width = 15;
  int height = 15;
  int max_pieces = 25;
  // Packings below this fraction of width*height cells are rejected and redrawn.
  double min_density = 0.0;
  // Fixed orientations to draw from, uniformly; repeat entries to weight them.
  std::vector<Polyomino> shapes;
  // Probability of trying to plug the pocket of each U-pentomino just placed.
  double pocket_fill_bias = 0.0;
  int max_redraws = 1000;
  // After the first piece, only accept positions sharing an edge with an
  // earlier piece.
  bool touching = false;
};

// All fixed orientations of the free polyominoes with min_cells..max_cells
// cells that satisfy `keep` (applied to each orientation).
std::vector<Polyomino> shape_pool(int min_cells, int max_cells,
                                  const std::function<bool(const Polyomino&)>& keep = {});

// Pieces are named p0, p1, ... in placement order. Throws DomainError when
// min_density cannot be met within max_redraws draws.
Configuration random_packing(const PackingParams& params, std::uint64_t seed);

}  // namespace polylock
