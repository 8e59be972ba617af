#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polylock/classify.hpp"
#include "polylock/error.hpp"
#include "polylock/io.hpp"
#include "polylock/separation.hpp"

using namespace polylock;

namespace {

Configuration grid(const char* text) { return parse_config(text); }

}  // namespace

TEST(BlockingGraph, MatchesPairOracleOnPackings) {
  const PackingParams params = fixtures::small_packing();
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Configuration c = random_packing(params, seed);
    for (Direction d : kAllDirections) {
      const BlockingGraph g = blocking_graph(c, d);
      const auto expected = oracle::blocking_pairs(c, d);
      const std::set<std::pair<std::size_t, std::size_t>> got(g.edges.begin(), g.edges.end());
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(BlockingGraph, InterlockedPairHasCycle) {
  // A U with a plug: sliding the plug along x runs into the U's arms, and
  // sliding the U runs into the plug.
  const Configuration c = grid("UPU\nUUU\n");
  const BlockingGraph g = blocking_graph(c, Direction::PosX);
  EXPECT_FALSE(g.acyclic());
  EXPECT_TRUE(blocking_graph(c, Direction::PosY).acyclic());
}

TEST(PlanUto, PeelsStackInOrder) {
  const Configuration c = grid("AB\n");
  const UtoResult r = plan_uto(c, Direction::PosX);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.plan->moves.size(), 2u);
  EXPECT_EQ(r.plan->moves[0], (Move{{"B"}, Direction::PosX}));
  EXPECT_EQ(r.plan->moves[1], (Move{{"A"}, Direction::PosX}));
}

TEST(PlanUto, ReportsCycle) {
  const UtoResult r = plan_uto(fixtures::load("pinwheel.txt").config, Direction::PosX);
  EXPECT_FALSE(r.ok());
  EXPECT_GE(r.cycle.size(), 2u);
}

TEST(GroupLe5, UWithPlugFormsGroup) {
  const auto groups = group_le5(grid("UPU\nUUU\n"));
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].members, (std::vector<std::string>{"U", "P"}));
  EXPECT_EQ(groups[0].internal_axis, Axis::Y);
  EXPECT_TRUE(is_monotone(groups[0].union_shape, Axis::Y));
}

TEST(GroupLe5, EmptyUFillsItsPocket) {
  const auto groups = group_le5(grid("U.U\nUUU\n"));
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].union_shape.size(), 6u);
  EXPECT_FALSE(groups[0].internal_axis);
}

TEST(GroupLe5, SidewaysUStaysAlone) {
  const auto groups = group_le5(grid("UU\nUP\nUU\n"));
  EXPECT_EQ(groups.size(), 2u);
}

TEST(GroupLe5, RejectsLargePieces) {
  EXPECT_THROW(group_le5(grid("AAAAAA\n")), DomainError);
}

TEST(SeparateLe5, PlugFixtureSimulatesValid) {
  const Configuration c = fixtures::load("u_plug.txt").config;
  const SeparationPlan plan = separate_le5(c);
  EXPECT_TRUE(simulate_plan(c, plan).valid);
}

TEST(SeparateLe5, HandAuthoredPacking) {
  const Configuration c = fixtures::load("packing.txt").config;
  const SeparationPlan plan = separate_le5(c);
  const SimulationReport r = simulate_plan(c, plan);
  EXPECT_TRUE(r.valid) << r.reason;
}

TEST(SeparateLe5, TwoPluggedUs) {
  const Configuration c = grid("AAA.BBB\nACA.BDB\n.C...D.\n");
  const SimulationReport r = simulate_plan(c, separate_le5(c));
  EXPECT_TRUE(r.valid) << r.reason;
}

TEST(Simulate, DetectsCollision) {
  const Configuration c = grid("AB\n");
  const SimulationReport r = simulate_plan(c, SeparationPlan{{Move{{"A"}, Direction::PosX}}});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failed_move, 0u);
  ASSERT_TRUE(r.collision);
  EXPECT_EQ(r.collision->first, "A");
  EXPECT_EQ(r.collision->second, "B");
}

TEST(Simulate, RequiresEveryPieceSeparated) {
  const Configuration c = grid("A.B\n..C\n");
  const SimulationReport r = simulate_plan(c, SeparationPlan{{Move{{"A"}, Direction::NegX}}});
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.failed_move);
}

TEST(Simulate, MovesStayInsideClusters) {
  const Configuration c = grid("ABC\n");
  const SeparationPlan ok{{Move{{"B", "C"}, Direction::PosX}, Move{{"C"}, Direction::PosX}}};
  EXPECT_TRUE(simulate_plan(c, ok).valid);
  const SeparationPlan spanning{{Move{{"C"}, Direction::PosX}, Move{{"B", "C"}, Direction::PosY}}};
  EXPECT_FALSE(simulate_plan(c, spanning).valid);
}

TEST(Simulate, RejectsMalformedMoves) {
  const Configuration c = grid("AB\n");
  EXPECT_THROW(simulate_plan(c, SeparationPlan{{Move{{}, Direction::PosX}}}), PlanError);
  EXPECT_THROW(simulate_plan(c, SeparationPlan{{Move{{"Z"}, Direction::PosX}}}), PlanError);
  EXPECT_THROW(simulate_plan(c, SeparationPlan{{Move{{"A", "A"}, Direction::PosX}}}), PlanError);
}

TEST(Simulate, EmptyAndSinglePiece) {
  EXPECT_TRUE(simulate_plan(Configuration{}, SeparationPlan{}).valid);
  EXPECT_TRUE(simulate_plan(grid("A\n"), SeparationPlan{}).valid);
}

TEST(Simulate, StackedDominoesOrderMatters) {
  const Configuration c = grid("TT\nBB\n");
  EXPECT_TRUE(simulate_plan(c, SeparationPlan{{Move{{"T"}, Direction::PosY}, Move{{"B"}, Direction::PosY}}}).valid);
  const SimulationReport r =
      simulate_plan(c, SeparationPlan{{Move{{"B"}, Direction::PosY}, Move{{"T"}, Direction::PosY}}});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failed_move, 0u);
}

TEST(BlockingGraph, DominoAndMonomino) {
  const Configuration c = grid("DD...M\n");
  const BlockingGraph g = blocking_graph(c, Direction::PosX);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_TRUE(blocking_graph(grid("A.\n.B\n"), Direction::PosX).edges.empty());
}

TEST(PlanUto, ClaspedOctominoesFormTwoCycle) {
  // Two C-octominoes hooked around each other's arm, turned so the clasp
  // resists +x.
  const std::vector<Cell> a{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  const std::vector<Cell> b{{0, 4}, {1, 4}, {2, 4}, {3, 4}, {3, 3}, {3, 2}, {2, 2}, {1, 2}};
  auto turn = [](std::vector<Cell> cells) {
    for (Cell& c : cells) c = {c.y, -c.x};
    return cells;
  };
  const Configuration c({Placement::from_cells("A", turn(a)), Placement::from_cells("B", turn(b))});
  const UtoResult r = plan_uto(c, Direction::PosX);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.cycle.size(), 2u);
  EXPECT_FALSE(blocking_graph(c, Direction::PosX).acyclic());
}

TEST(PlanUto, NestedStaircasesPeelFromTheRight) {
  const Configuration c = grid(
      "A...\n"
      "AB..\n"
      "ABC.\n"
      "ABCD\n");
  const UtoResult r = plan_uto(c, Direction::PosX);
  ASSERT_TRUE(r.ok());
  std::vector<std::string> order;
  for (const Move& m : r.plan->moves) order.push_back(m.pieces.front());
  EXPECT_EQ(order, (std::vector<std::string>{"D", "C", "B", "A"}));
  EXPECT_TRUE(simulate_plan(c, *r.plan).valid);
}

TEST(GroupLe5, PlusArmInPocket) {
  const Configuration c = grid(
      ".P.\n"
      "PPP\n"
      "UPU\n"
      "UUU\n");
  const auto groups = group_le5(c);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].members.size(), 2u);
  EXPECT_TRUE(is_monotone(groups[0].union_shape, Axis::Y));
  const SimulationReport r = simulate_plan(c, separate_le5(c));
  EXPECT_TRUE(r.valid) << r.reason;
}

TEST(GroupLe5, OnePieceInTwoPockets) {
  const Configuration c = grid(
      "VVV\n"
      "VIV\n"
      ".I.\n"
      ".I.\n"
      ".I.\n"
      "UIU\n"
      "UUU\n");
  const auto groups = group_le5(c);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].members.size(), 3u);
  const SimulationReport r = simulate_plan(c, separate_le5(c));
  EXPECT_TRUE(r.valid) << r.reason;
}

TEST(GroupLe5, NoUsMeansSingletons) {
  const auto groups = group_le5(grid("AB\nCD\n"));
  EXPECT_EQ(groups.size(), 4u);
}

TEST(SeparateLe5, LoneU) {
  const Configuration c = grid("U.U\nUUU\n");
  EXPECT_EQ(separate_le5(c).moves.size(), 1u);
}
