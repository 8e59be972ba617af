#pragma once

// Breadth-first search over unit axis translations of the pieces of a
// configuration. This is a discrete translational motion model: an "escaped"
// verdict proves the system is not interlocked, while "locked within budget"
// only says no unit-translation escape exists inside the search radius.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polylock/grid.hpp"
#include "polylock/separation.hpp"

namespace polylock {

enum class MoveMode { SinglePiece, SubsetMove };

struct SearchBudget {
  // Largest Chebyshev displacement of any piece from its start, measured with
  // the anchor piece held fixed.
  int radius = 3;
  std::size_t max_states = 1'000'000;
  MoveMode mode = MoveMode::SinglePiece;
  // Largest rigid subset moved at once in SubsetMove mode.
  int max_subset = 4;
  // Worker threads for frontier expansion; results do not depend on it.
  int threads = 1;
};

// Per-piece displacement from the initial placement, in placement order.
struct SearchState {
  std::vector<Offset> displacement;
};

// Translate `pieces` rigidly by one unit along `direction`.
struct SlideMove {
  std::vector<std::string> pieces;
  Direction direction = Direction::PosX;

  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

enum class SearchOutcome { Escaped, LockedWithinBudget, BudgetExhausted };

struct SearchVerdict {
  SearchOutcome outcome = SearchOutcome::BudgetExhausted;
  std::vector<SlideMove> trace;  // unit moves from the initial configuration
  std::optional<Move> escape;    // set that then leaves, and its direction
  std::size_t states_explored = 0;
};

enum class ReachOutcome { Reachable, Unreachable, BudgetExhausted };

struct ReachVerdict {
  ReachOutcome outcome = ReachOutcome::BudgetExhausted;
  std::vector<SlideMove> trace;
  std::size_t states_explored = 0;
};

std::string_view to_string(SearchOutcome outcome);
std::string_view to_string(ReachOutcome outcome);
std::string to_string(const SlideMove& move);
std::optional<MoveMode> parse_move_mode(std::string_view text);

// Unit moves available in `state`, without any radius bound. Subset moves are
// connected (by shared edges) proper subsets of 2..max_subset pieces.
std::vector<SlideMove> legal_moves(const Configuration& config, const SearchState& state,
                                   MoveMode mode, int max_subset = 4);

// Throws DomainError for an invalid budget or an empty configuration.
SearchVerdict escape_search(const Configuration& config, const SearchBudget& budget);

// Can `key` reach its start offset + `displacement`, relative to the other
// pieces? Throws UnknownPiece.
ReachVerdict key_piece_reachable(const Configuration& config, std::string_view key,
                                 Offset displacement, const SearchBudget& budget);

// Pieces that must move along with `piece` for it to advance one unit in `d`,
// including `piece` itself; placement order.
std::vector<std::string> slide_dependency(const Configuration& config, std::string_view piece,
                                          Direction d);

// Apply unit moves in order; nullopt as soon as one would overlap another piece.
std::optional<Configuration> replay(const Configuration& config, std::span<const SlideMove> trace);

// Replays an escaped verdict and checks that the escaping set sweeps freely.
bool verify_escape(const Configuration& config, const SearchVerdict& verdict);

}  // namespace polylock
