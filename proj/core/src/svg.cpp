#include "polylock/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace polylock {
namespace {

constexpr int kCell = 20;
constexpr int kMargin = 2;  // in cells

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fill_for(std::size_t index) {
  const double hue = std::fmod(static_cast<double>(index) * 137.508, 360.0);
  const int light = 62 + static_cast<int>(index % 3) * 8;
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,60%%,%d%%)", hue, light);
  return buf;
}

class Frame {
 public:
  Frame(Cell lo, Cell hi) : lo_(lo), hi_(hi) {}
  double x(double mx) const { return (mx - lo_.x + kMargin) * kCell; }
  double y(double my) const { return (hi_.y + 1 - my + kMargin) * kCell; }
  int width() const { return (hi_.x - lo_.x + 1 + 2 * kMargin) * kCell; }
  int height() const { return (hi_.y - lo_.y + 1 + 2 * kMargin) * kCell; }

 private:
  Cell lo_;
  Cell hi_;
};

// Closed boundary loops of a cell set, counter-clockwise around the cells.
std::vector<std::vector<Cell>> outline(const std::vector<Cell>& cells) {
  const std::set<Cell> in(cells.begin(), cells.end());
  std::map<Cell, std::vector<Cell>> edges;  // vertex -> successors
  for (const Cell& c : cells) {
    if (!in.contains({c.x, c.y - 1})) edges[{c.x, c.y}].push_back({c.x + 1, c.y});
    if (!in.contains({c.x + 1, c.y})) edges[{c.x + 1, c.y}].push_back({c.x + 1, c.y + 1});
    if (!in.contains({c.x, c.y + 1})) edges[{c.x + 1, c.y + 1}].push_back({c.x, c.y + 1});
    if (!in.contains({c.x - 1, c.y})) edges[{c.x, c.y + 1}].push_back({c.x, c.y});
  }
  std::vector<std::vector<Cell>> loops;
  while (!edges.empty()) {
    const Cell start = edges.begin()->first;
    std::vector<Cell> loop{start};
    Cell at = start;
    do {
      auto it = edges.find(at);
      const Cell next = it->second.front();
      it->second.erase(it->second.begin());
      if (it->second.empty()) edges.erase(it);
      at = next;
      loop.push_back(at);
    } while (at != start);
    loop.pop_back();
    // Drop vertices in the middle of straight runs.
    std::vector<Cell> corners;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Cell& prev = loop[(i + loop.size() - 1) % loop.size()];
      const Cell& next = loop[(i + 1) % loop.size()];
      const bool straight = (prev.x == loop[i].x && next.x == loop[i].x) || (prev.y == loop[i].y && next.y == loop[i].y);
      if (!straight) corners.push_back(loop[i]);
    }
    loops.push_back(std::move(corners));
  }
  return loops;
}

std::pair<double, double> centroid(const std::vector<Cell>& cells) {
  double sx = 0;
  double sy = 0;
  for (const Cell& c : cells) {
    sx += c.x + 0.5;
    sy += c.y + 0.5;
  }
  return {sx / static_cast<double>(cells.size()), sy / static_cast<double>(cells.size())};
}

// Center of the piece's cell nearest its centroid, so labels sit on the piece.
std::pair<double, double> label_point(const std::vector<Cell>& cells) {
  const auto [cx, cy] = centroid(cells);
  const Cell* best = &cells.front();
  double best_d = 1e300;
  for (const Cell& c : cells) {
    const double d = (c.x + 0.5 - cx) * (c.x + 0.5 - cx) + (c.y + 0.5 - cy) * (c.y + 0.5 - cy);
    if (d < best_d) {
      best_d = d;
      best = &c;
    }
  }
  return {best->x + 0.5, best->y + 0.5};
}

}  // namespace

std::string render_svg(const Configuration& config, const SvgAnnotations& annotations) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (config.empty() && annotations.highlight.empty()) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1\" height=\"1\" "
           "viewBox=\"0 0 1 1\"/>\n";
    return out.str();
  }

  std::vector<Cell> all = occupied_cells(config);
  all.insert(all.end(), annotations.highlight.begin(), annotations.highlight.end());
  Cell lo = all.front();
  Cell hi = all.front();
  for (const Cell& c : all) {
    lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
  }
  const Frame f(lo, hi);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width() << "\" height=\""
      << f.height() << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height() << "\">\n";
  out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#222\"/></marker></defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << f.width() << "\" height=\"" << f.height() << "\" fill=\"white\"/>\n";

  const auto& placements = config.placements();
  for (std::size_t i = 0; i < placements.size(); ++i) {
    std::string d;
    for (const auto& loop : outline(placements[i].cells())) {
      for (std::size_t k = 0; k < loop.size(); ++k) {
        d += (k == 0 ? "M" : " L") + num(f.x(loop[k].x)) + "," + num(f.y(loop[k].y));
      }
      d += " Z ";
    }
    d.pop_back();
    out << "<path class=\"piece\" data-id=\"" << escape(placements[i].id()) << "\" d=\"" << d << "\" fill=\""
        << fill_for(i) << "\" fill-rule=\"evenodd\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  }

  for (const Cell& c : annotations.highlight) {
    out << "<rect class=\"pocket\" x=\"" << num(f.x(c.x)) << "\" y=\"" << num(f.y(c.y + 1)) << "\" width=\""
        << kCell << "\" height=\"" << kCell
        << "\" fill=\"none\" stroke=\"#d22\" stroke-width=\"2\" stroke-dasharray=\"4 2\"/>\n";
  }

  if (annotations.graph) {
    for (const auto& [blocker, blocked] : annotations.graph->edges) {
      if (blocker >= placements.size() || blocked >= placements.size()) continue;
      const auto [x1, y1] = label_point(placements[blocker].cells());
      const auto [x2, y2] = label_point(placements[blocked].cells());
      out << "<line class=\"blocking-edge\" x1=\"" << num(f.x(x1)) << "\" y1=\"" << num(f.y(y1)) << "\" x2=\""
          << num(f.x(x2)) << "\" y2=\"" << num(f.y(y2))
          << "\" stroke=\"#36c\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    }
  }

  if (annotations.plan) {
    const auto& moves = annotations.plan->moves;
    for (std::size_t k = 0; k < moves.size(); ++k) {
      std::vector<Cell> cells;
      for (const std::string& id : moves[k].pieces) {
        if (!config.index_of(id)) continue;
        const auto more = config.at(id).cells();
        cells.insert(cells.end(), more.begin(), more.end());
      }
      if (cells.empty()) cells.push_back(lo);
      const auto [cx, cy] = centroid(cells);
      const Offset step = unit_step(moves[k].direction);
      const double ex = cx + 1.5 * step.dx;
      const double ey = cy + 1.5 * step.dy;
      out << "<g class=\"move\"><line class=\"move-arrow\" x1=\"" << num(f.x(cx)) << "\" y1=\"" << num(f.y(cy))
          << "\" x2=\"" << num(f.x(ex)) << "\" y2=\"" << num(f.y(ey))
          << "\" stroke=\"#222\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/><text x=\"" << num(f.x(ex))
          << "\" y=\"" << num(f.y(ey)) << "\" font-family=\"monospace\" font-size=\"10\" fill=\"#222\">"
          << k + 1 << "</text></g>\n";
    }
  }

  for (const Placement& p : placements) {
    const auto [lx, ly] = label_point(p.cells());
    out << "<text class=\"label\" x=\"" << num(f.x(lx)) << "\" y=\"" << num(f.y(ly))
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"central\">"
        << escape(p.id()) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polylock
