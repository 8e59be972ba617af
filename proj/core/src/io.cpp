#include "polylock/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "polylock/error.hpp"

namespace polylock {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool is_empty_cell(char c) { return c == '.' || c == ' ' || c == '\t'; }

// First cell of `cells` not edge-connected to cells.front(), if any.
std::optional<Cell> stray_cell(const std::vector<Cell>& cells) {
  std::set<Cell> all(cells.begin(), cells.end());
  std::set<Cell> seen{cells.front()};
  std::vector<Cell> todo{cells.front()};
  while (!todo.empty()) {
    const Cell c = todo.back();
    todo.pop_back();
    for (Direction d : kAllDirections) {
      const Cell n = c + unit_step(d);
      if (all.contains(n) && seen.insert(n).second) todo.push_back(n);
    }
  }
  for (const Cell& c : cells) {
    if (!seen.contains(c)) return c;
  }
  return std::nullopt;
}

Document parse_grid(std::string_view text) {
  std::vector<std::string_view> lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  const int rows = static_cast<int>(lines.size());

  std::vector<char> order;
  std::map<char, std::vector<Cell>> cells;
  std::map<Cell, int> line_of;
  for (int li = 0; li < rows; ++li) {
    for (std::size_t col = 0; col < lines[li].size(); ++col) {
      const char ch = lines[li][col];
      if (is_empty_cell(ch)) continue;
      if (static_cast<unsigned char>(ch) < 0x21 || static_cast<unsigned char>(ch) > 0x7e) {
        throw ParseError(li + 1, "unexpected character code " + std::to_string(static_cast<int>(
                                     static_cast<unsigned char>(ch))));
      }
      const Cell c{static_cast<int>(col), rows - 1 - li};
      if (!cells.contains(ch)) order.push_back(ch);
      cells[ch].push_back(c);
      line_of[c] = li + 1;
    }
  }
  std::vector<Placement> placements;
  for (char ch : order) {
    auto& piece = cells[ch];
    if (auto stray = stray_cell(piece)) {
      throw ParseError(line_of[*stray], std::string("piece '") + ch + "' is not edge-connected");
    }
    placements.push_back(Placement::from_cells(std::string(1, ch), piece));
  }
  return Document{Configuration(std::move(placements)), std::nullopt};
}

Document parse_structured(std::string_view text) {
  static const std::regex cell_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  const std::vector<std::string_view> lines = split_lines(text);
  bool header = false;
  std::vector<Placement> placements;
  std::map<std::string, int> id_line;
  std::map<Cell, std::pair<std::string, int>> owner;
  std::optional<std::pair<std::string, int>> key;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kStructuredHeader) throw ParseError(ln, "expected header '" + std::string(kStructuredHeader) + "'");
      header = true;
      continue;
    }
    if (line.starts_with("key")) {
      const std::string_view id = trim(line.substr(3));
      if (id.empty() || id.size() == line.size() - 3 || id.find_first_of(" \t") != std::string_view::npos) {
        throw ParseError(ln, "malformed key line");
      }
      if (key) throw ParseError(ln, "second key line");
      key = std::pair{std::string(id), ln};
      continue;
    }
    if (!line.starts_with("piece ") && !line.starts_with("piece\t")) {
      throw ParseError(ln, "expected 'piece', 'key' or a comment");
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(ln, "missing ':' after piece id");
    const std::string id(trim(line.substr(6, colon - 6)));
    if (id.empty() || id.find_first_of(" \t(),") != std::string::npos) {
      throw ParseError(ln, "malformed piece id '" + id + "'");
    }
    if (auto [it, fresh] = id_line.emplace(id, ln); !fresh) {
      throw ParseError(ln, "duplicate piece id '" + id + "' (first on line " + std::to_string(it->second) + ")");
    }

    const std::string rest(line.substr(colon + 1));
    std::vector<Cell> cells;
    std::size_t pos = 0;
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), cell_re); it != std::sregex_iterator(); ++it) {
      if (!trim(std::string_view(rest).substr(pos, it->position() - pos)).empty()) {
        throw ParseError(ln, "malformed coordinate near '" + rest.substr(pos, it->position() - pos) + "'");
      }
      try {
        cells.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
      } catch (const std::out_of_range&) {
        throw ParseError(ln, "coordinate out of range '" + it->str() + "'");
      }
      pos = it->position() + it->length();
    }
    if (!trim(std::string_view(rest).substr(pos)).empty()) {
      throw ParseError(ln, "malformed coordinate near '" + rest.substr(pos) + "'");
    }
    if (cells.empty()) throw ParseError(ln, "piece '" + id + "' has no cells");
    std::set<Cell> distinct;
    for (const Cell& c : cells) {
      if (!distinct.insert(c).second) {
        throw ParseError(ln, "piece '" + id + "' lists a cell twice");
      }
      if (auto [it, fresh] = owner.emplace(c, std::pair{id, ln}); !fresh) {
        throw ParseError(ln, "piece '" + id + "' overlaps piece '" + it->second.first + "' (line " +
                                 std::to_string(it->second.second) + ")");
      }
    }
    if (stray_cell(cells)) throw ParseError(ln, "piece '" + id + "' is not edge-connected");
    placements.push_back(Placement::from_cells(id, std::move(cells)));
  }
  if (!header) throw ParseError(0, "missing header");
  if (key && !id_line.contains(key->first)) {
    throw ParseError(key->second, "key names unknown piece '" + key->first + "'");
  }
  Document doc{Configuration(std::move(placements)), std::nullopt};
  if (key) doc.key = key->first;
  return doc;
}

}  // namespace

TextFormat detect_format(std::string_view text) {
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) continue;
    return line == kStructuredHeader ? TextFormat::Structured : TextFormat::GridText;
  }
  return TextFormat::GridText;
}

Document parse_document(std::string_view text) {
  return detect_format(text) == TextFormat::Structured ? parse_structured(text) : parse_grid(text);
}

Configuration parse_config(std::string_view text) { return parse_document(text).config; }

std::string emit_structured(const Configuration& config, const std::optional<std::string>& key) {
  std::ostringstream out;
  out << kStructuredHeader << '\n';
  for (const Placement& p : config.placements()) {
    out << "piece " << p.id() << ':';
    for (const Cell& c : p.cells()) out << " (" << c.x << ',' << c.y << ')';
    out << '\n';
  }
  if (key) out << "key " << *key << '\n';
  return out.str();
}

std::string emit_grid(const Configuration& config) {
  if (config.empty()) return "";
  static constexpr std::string_view kNames = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  const auto& placements = config.placements();
  const bool keep = std::all_of(placements.begin(), placements.end(), [](const Placement& p) {
    const std::string& id = p.id();
    return id.size() == 1 && id[0] > 0x20 && id[0] < 0x7f && id[0] != '.';
  });
  if (!keep && placements.size() > kNames.size()) {
    throw DomainError("grid text can name at most " + std::to_string(kNames.size()) + " pieces");
  }
  Cell lo{0, 0};
  Cell hi{0, 0};
  for (const Cell& c : occupied_cells(config)) {
    lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
  }
  const auto width = static_cast<std::size_t>(hi.x - lo.x + 1);
  std::vector<std::string> rows(static_cast<std::size_t>(hi.y - lo.y + 1), std::string(width, '.'));
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const char name = keep ? placements[i].id()[0] : kNames[i];
    for (const Cell& c : placements[i].cells()) {
      rows[static_cast<std::size_t>(hi.y - c.y)][static_cast<std::size_t>(c.x - lo.x)] = name;
    }
  }
  std::string out;
  for (const std::string& row : rows) out += row + '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace polylock
