#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polylock/grid.hpp"
#include "polylock/separation.hpp"

namespace polylock {

struct SvgAnnotations {
  std::optional<SeparationPlan> plan;  // one numbered arrow per move
  std::vector<Cell> highlight;         // e.g. pocket cells
  std::optional<BlockingGraph> graph;  // blocker -> blocked arrows between labels
};

// SVG 1.1 document; identical inputs give identical bytes.
std::string render_svg(const Configuration& config, const SvgAnnotations& annotations = {});

}  // namespace polylock
