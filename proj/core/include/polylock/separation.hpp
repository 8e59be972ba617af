#pragma once

// Separation plans for grid-aligned systems: blocking graphs, one-direction
// peel plans, the U-pentomino grouping for systems of pieces with at most five
// cells, and an exact plan simulator.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polylock/grid.hpp"

namespace polylock {

// Edge (q, p) means piece q lies in the infinite sweep of piece p in `direction`.
struct BlockingGraph {
  Direction direction = Direction::PosX;
  std::vector<std::string> nodes;                        // placement order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (blocker, blocked), sorted

  bool has_edge(std::size_t blocker, std::size_t blocked) const;
  // Node indices of some directed cycle, empty when the graph is acyclic.
  std::vector<std::size_t> find_cycle() const;
  bool acyclic() const { return find_cycle().empty(); }
};

BlockingGraph blocking_graph(const Configuration& config, Direction d);

// Translate `pieces` rigidly to infinity along `direction`.
struct Move {
  std::vector<std::string> pieces;
  Direction direction = Direction::PosX;

  friend bool operator==(const Move&, const Move&) = default;
};

// Moves are applied in order. Once a set has moved away it forms its own
// cluster, far from everything else; a later move must stay inside a single
// cluster and is only checked against the other pieces of that cluster. A plan
// separates the system when every piece ends alone in its cluster.
struct SeparationPlan {
  std::vector<Move> moves;

  friend bool operator==(const SeparationPlan&, const SeparationPlan&) = default;
};

std::string to_string(const Move& move);
std::string to_string(const SeparationPlan& plan);

struct UtoResult {
  std::optional<SeparationPlan> plan;
  std::vector<std::string> cycle;  // witness when no one-shot plan exists

  bool ok() const { return plan.has_value(); }
};

// One-shot unidirectional plan: peel unblocked pieces, outermost first.
UtoResult plan_uto(const Configuration& config, Direction d);

struct Group {
  std::vector<std::string> members;  // placement order
  // Union of member cells, plus the pocket of a lone U whose pocket opens
  // along y and is empty (such a U behaves like a 2x3 rectangle). Canonical.
  Polyomino union_shape;
  Offset offset;                     // world position of union_shape
  std::optional<Axis> internal_axis;  // axis members separate along; none for singletons
};

// Throws DomainError for pieces larger than five cells and InvariantViolation
// when a group is not y-monotone or has more than three members.
std::vector<Group> group_le5(const Configuration& config);

// Full plan for a system of pieces with at most five cells. Throws
// InvariantViolation if no validated plan is found.
SeparationPlan separate_le5(const Configuration& config);

struct SimulationReport {
  bool valid = false;
  std::optional<std::size_t> failed_move;
  // (moving piece, piece it runs into)
  std::optional<std::pair<std::string, std::string>> collision;
  std::string reason;
};

// Throws PlanError for unknown ids, empty moves or ids repeated inside a move.
SimulationReport simulate_plan(const Configuration& config, const SeparationPlan& plan);

}  // namespace polylock
