#pragma once

// Two text formats for configurations.
//
// GridText: one character per cell, '.' or ' ' empty, any other character
// names a piece. The first line is the top row; the last line is y = 0 and the
// first column is x = 0, so y grows upward as in the model.
//
// Structured:
//   polylock-config v1
//   # comment
//   piece A: (0,0) (1,0) (0,1)
//   key A

#include <optional>
#include <string>
#include <string_view>

#include "polylock/grid.hpp"

namespace polylock {

enum class TextFormat { GridText, Structured };

inline constexpr std::string_view kStructuredHeader = "polylock-config v1";

struct Document {
  Configuration config;
  std::optional<std::string> key;  // piece named by a `key` line
};

TextFormat detect_format(std::string_view text);

// Throws ParseError with the offending line number.
Document parse_document(std::string_view text);
Configuration parse_config(std::string_view text);

std::string emit_structured(const Configuration& config,
                            const std::optional<std::string>& key = std::nullopt);

// Pieces keep their ids when every id is a single printable character other
// than '.'; otherwise they are renamed A-Z, a-z, 0-9 in placement order.
// The grid spans from min(0, min corner) so non-negative coordinates survive a
// round trip unchanged. Throws DomainError beyond 62 renamed pieces.
std::string emit_grid(const Configuration& config);

// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace polylock
