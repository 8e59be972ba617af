#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polylock/classify.hpp"

using namespace polylock;

namespace {

Polyomino shape(std::vector<Cell> cells) { return Polyomino(std::move(cells)); }

}  // namespace

TEST(Classify, MatchesLineOracleForAllShapesUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for (const Polyomino& free : enumerate_free(n)) {
      for (const Polyomino& p : fixed_orientations(free)) {
        const MonotoneReport r = classify(p);
        EXPECT_EQ(r.y_monotone, oracle::lines_contiguous(p.cells(), true));
        EXPECT_EQ(r.x_monotone, oracle::lines_contiguous(p.cells(), false));
        EXPECT_EQ(r.orthogonally_convex, r.x_monotone && r.y_monotone);
      }
    }
  }
}

TEST(Classify, UPentominoIsMonotoneInOneAxis) {
  const MonotoneReport r = classify(u_pentomino());
  EXPECT_TRUE(r.x_monotone);
  EXPECT_FALSE(r.y_monotone);
  EXPECT_FALSE(r.orthogonally_convex);
}

TEST(Classify, SixHexominoesAreNotOrthogonallyConvex) {
  int count = 0;
  for (const Polyomino& p : enumerate_free(6)) count += classify(p).orthogonally_convex ? 0 : 1;
  EXPECT_EQ(count, 6);
}

TEST(Pockets, UOpensUpward) {
  const auto found = pockets(u_pentomino(), Axis::Y);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].cells, (std::vector<Cell>{{1, 1}}));
  EXPECT_EQ(found[0].opening, Direction::PosY);
  EXPECT_TRUE(pockets(u_pentomino(), Axis::X).empty());
}

TEST(Pockets, RotatedUOpensSideways) {
  const Polyomino side = apply_symmetry(u_pentomino(), 1);
  const auto found = pockets(side, Axis::X);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_TRUE(found[0].opening == Direction::PosX || found[0].opening == Direction::NegX);
  EXPECT_TRUE(pockets(side, Axis::Y).empty());
}

TEST(Pockets, ShapeWithPocketsOnBothAxes) {
  //  AA.
  //  .A.
  //  AAA
  //  A.A
  const Polyomino s = shape({{0, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}});
  const auto y = pockets(s, Axis::Y);
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(y[0].cells, (std::vector<Cell>{{1, 0}}));
  EXPECT_EQ(y[0].opening, Direction::NegY);
  const auto x = pockets(s, Axis::X);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0].cells, (std::vector<Cell>{{0, 2}}));
  EXPECT_EQ(x[0].opening, Direction::NegX);
}

TEST(Pockets, HoleIsReportedAsEnclosed) {
  const Polyomino ring = shape({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  try {
    pockets(ring, Axis::Y);
    FAIL() << "expected EnclosedPocket";
  } catch (const EnclosedPocket& e) {
    EXPECT_EQ(e.cells(), (std::vector<Cell>{{1, 1}}));
  }
}

TEST(Pockets, ClosureIsMonotone) {
  for (const Polyomino& p : enumerate_free(6)) {
    for (Axis axis : {Axis::X, Axis::Y}) {
      const auto closure = monotone_closure(p, axis);
      EXPECT_TRUE(oracle::lines_contiguous(closure, axis == Axis::Y));
      for (const Cell& c : p.cells()) EXPECT_TRUE(std::binary_search(closure.begin(), closure.end(), c));
    }
  }
}

TEST(Pockets, NonMonotoneFixedShapesHavePockets) {
  for (int n = 5; n <= 6; ++n) {
    for (const Polyomino& free : enumerate_free(n)) {
      for (const Polyomino& p : fixed_orientations(free)) {
        for (Axis axis : {Axis::X, Axis::Y}) {
          if (is_monotone(p, axis)) continue;
          const auto found = pockets(p, axis);
          EXPECT_FALSE(found.empty());
          for (const Pocket& pk : found) EXPECT_EQ(axis_of(pk.opening), axis);
        }
      }
    }
  }
}

TEST(UPentomino, RecognisedInEveryOrientation) {
  for (const Polyomino& p : fixed_orientations(u_pentomino())) {
    EXPECT_TRUE(is_u_pentomino(p));
    EXPECT_TRUE(is_u_pentomino(p.translated({7, -2})));
  }
  EXPECT_FALSE(is_u_pentomino(shape({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}})));
}

TEST(UPentomino, FoundInConfigurationWithWorldOpening) {
  const Configuration c = fixtures::load("u_plug.txt").config;
  const auto us = find_u_pentominoes(c);
  ASSERT_EQ(us.size(), 1u);
  EXPECT_EQ(us[0].piece_id, "U");
  EXPECT_EQ(us[0].opening, Direction::PosY);
}
