#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "polylock/classify.hpp"
#include "polylock/error.hpp"
#include "polylock/io.hpp"

using namespace polylock;

namespace {

int error_line(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::set<std::vector<Cell>> cell_sets(const Configuration& c) {
  std::set<std::vector<Cell>> out;
  for (const Placement& p : c.placements()) out.insert(p.cells());
  return out;
}

}  // namespace

TEST(GridText, LTromino) {
  const Configuration c = parse_config("AA\n.A");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.placements()[0].id(), "A");
  EXPECT_EQ(c.placements()[0].cells(), (std::vector<Cell>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(GridText, TopLineIsHighestRow) {
  const Configuration c = parse_config("A\n.\n.\n");
  EXPECT_EQ(c.at("A").cells(), (std::vector<Cell>{{0, 2}}));
}

TEST(GridText, CornerContactIsDisconnected) {
  EXPECT_THROW(parse_config("AB\nBA"), ParseError);
  EXPECT_EQ(error_line("AB\nBA"), 2);
}

TEST(GridText, PiecesInReadingOrder) {
  const Configuration c = parse_config("BA\nCC\n");
  EXPECT_EQ(c.placements()[0].id(), "B");
  EXPECT_EQ(c.placements()[1].id(), "A");
  EXPECT_EQ(c.placements()[2].id(), "C");
}

TEST(GridText, CrLfAndTrailingBlankLines) {
  EXPECT_EQ(parse_config("AA\r\n.A\r\n\r\n"), parse_config("AA\n.A"));
}

TEST(Structured, UClassifiesXMonotoneOnly) {
  const Configuration c = fixtures::load("u.txt").config;
  const MonotoneReport r = classify(c.at("U").world_shape());
  EXPECT_TRUE(r.x_monotone);
  EXPECT_FALSE(r.y_monotone);
}

TEST(Structured, KeyAndComments) {
  const Document d = parse_document(
      "polylock-config v1\n# note\npiece k1: (0,0) (1,0)\n\npiece 42: ( -1 , 3 )\nkey k1\n");
  EXPECT_EQ(d.key, "k1");
  EXPECT_EQ(d.config.at("42").cells(), (std::vector<Cell>{{-1, 3}}));
}

TEST(Structured, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,0)\npiece a: (5,5)\n"), 3);
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,0)\npiece b: (0,0)\n"), 3);
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,0) (2,0)\n"), 2);
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,x)\n"), 2);
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,0) junk\n"), 2);
  EXPECT_EQ(error_line("polylock-config v1\npiece a (0,0)\n"), 2);
  EXPECT_EQ(error_line("polylock-config v1\npiece a:\n"), 2);
  EXPECT_EQ(error_line("polylock-config v1\nwhat\n"), 2);
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,0)\nkey b\n"), 3);
  EXPECT_EQ(error_line("polylock-config v1\npiece a: (0,0) (0,0)\n"), 2);
}

TEST(Detect, HeaderDecidesFormat) {
  EXPECT_EQ(detect_format("\n  polylock-config v1\n"), TextFormat::Structured);
  EXPECT_EQ(detect_format("AA\n"), TextFormat::GridText);
  EXPECT_EQ(detect_format(""), TextFormat::GridText);
}

TEST(RoundTrip, StructuredPreservesEverything) {
  for (const Configuration& c : fixtures::format_corpus()) {
    EXPECT_EQ(parse_config(emit_structured(c)), c);
  }
  const Document keyed = fixtures::load("tray_keyed.txt");
  const Document again = parse_document(emit_structured(keyed.config, keyed.key));
  EXPECT_EQ(again.key, keyed.key);
  EXPECT_EQ(again.config, keyed.config);
}

TEST(RoundTrip, GridPreservesCells) {
  for (const Configuration& c : fixtures::format_corpus()) {
    const auto cells = occupied_cells(c);
    const bool non_negative =
        std::all_of(cells.begin(), cells.end(), [](const Cell& x) { return x.x >= 0 && x.y >= 0; });
    const Configuration back = parse_config(emit_grid(c));
    if (non_negative) {
      EXPECT_EQ(cell_sets(back), cell_sets(c));
    } else {
      EXPECT_EQ(back.size(), c.size());
    }
  }
}

TEST(RoundTrip, GridKeepsSingleCharacterIds) {
  const Configuration c = parse_config("AAB\n.CB\n");
  EXPECT_EQ(parse_config(emit_grid(c)), c);
}

TEST(EmitGrid, TooManyPiecesToRename) {
  std::vector<Placement> many;
  for (int i = 0; i < 63; ++i) many.push_back(Placement::from_cells("piece" + std::to_string(i), {{2 * i, 0}}));
  EXPECT_THROW(emit_grid(Configuration(std::move(many))), DomainError);
}
