#include "polylock/separation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "polylock/classify.hpp"
#include "polylock/error.hpp"

namespace polylock {

bool BlockingGraph::has_edge(std::size_t blocker, std::size_t blocked) const {
  return std::binary_search(edges.begin(), edges.end(), std::pair{blocker, blocked});
}

std::vector<std::size_t> BlockingGraph::find_cycle() const {
  const std::size_t n = nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [from, to] : edges) out[from].push_back(to);

  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::White) continue;
    // Iterative DFS: (node, next child position).
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [node, child] = stack.back();
      if (child == out[node].size()) {
        mark[node] = Mark::Black;
        stack.pop_back();
        continue;
      }
      const std::size_t next = out[node][child++];
      if (mark[next] == Mark::Grey) {
        std::vector<std::size_t> cycle{next};
        for (std::size_t v = node; v != next; v = parent[v]) cycle.push_back(v);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (mark[next] == Mark::White) {
        mark[next] = Mark::Grey;
        parent[next] = node;
        stack.emplace_back(next, 0);
      }
    }
  }
  return {};
}

BlockingGraph blocking_graph(const Configuration& config, Direction d) {
  BlockingGraph graph;
  graph.direction = d;
  const auto& placements = config.placements();
  for (const Placement& p : placements) graph.nodes.push_back(p.id());

  // Per line across d: (signed position along d, piece), sorted.
  std::unordered_map<int, std::vector<std::pair<int, std::size_t>>> lines;
  const int s = sign_of(d);
  for (std::size_t i = 0; i < placements.size(); ++i) {
    for (const Cell& c : placements[i].cells()) lines[across(c, d)].emplace_back(s * along(c, d), i);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto& [_, line] : lines) {
    std::sort(line.begin(), line.end());
    // Every cell ahead of a cell of p, on p's line, blocks p.
    for (std::size_t a = 0; a < line.size(); ++a) {
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        if (line[a].second != line[b].second) edges.emplace(line[b].second, line[a].second);
      }
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

std::string to_string(const Move& move) {
  std::string out = "{";
  for (std::size_t i = 0; i < move.pieces.size(); ++i) {
    if (i) out += ",";
    out += move.pieces[i];
  }
  out += "} ";
  out += to_string(move.direction);
  return out;
}

std::string to_string(const SeparationPlan& plan) {
  std::ostringstream out;
  for (std::size_t i = 0; i < plan.moves.size(); ++i) {
    out << "move " << i << ": " << to_string(plan.moves[i]) << "\n";
  }
  return out.str();
}

namespace {

void require_valid(const Configuration& config, const SeparationPlan& plan, const char* who) {
  const SimulationReport report = simulate_plan(config, plan);
  if (!report.valid) {
    throw InvariantViolation(std::string(who) + " produced a plan that fails simulation: " +
                             report.reason);
  }
}

// Peel order without the simulation check; failure carries a cycle.
UtoResult peel(const Configuration& config, Direction d) {
  const BlockingGraph graph = blocking_graph(config, d);
  const std::size_t n = graph.nodes.size();
  std::vector<std::vector<std::size_t>> blockers(n);
  for (const auto& [q, p] : graph.edges) blockers[p].push_back(q);

  std::vector<int> front(n);
  const int s = sign_of(d);
  for (std::size_t i = 0; i < n; ++i) {
    int best = std::numeric_limits<int>::min();
    for (const Cell& c : config.placements()[i].cells()) best = std::max(best, s * along(c, d));
    front[i] = best;
  }

  std::vector<bool> gone(n, false);
  SeparationPlan plan;
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (gone[i]) continue;
      const bool free = std::all_of(blockers[i].begin(), blockers[i].end(),
                                    [&](std::size_t q) { return gone[q]; });
      if (free && (!pick || front[i] > front[*pick])) pick = i;
    }
    if (!pick) {
      // Every remaining piece is blocked by a remaining piece, so the induced
      // subgraph has a cycle.
      BlockingGraph rest;
      rest.direction = d;
      rest.nodes = graph.nodes;
      for (const auto& e : graph.edges) {
        if (!gone[e.first] && !gone[e.second]) rest.edges.push_back(e);
      }
      UtoResult failed;
      for (std::size_t v : rest.find_cycle()) failed.cycle.push_back(graph.nodes[v]);
      return failed;
    }
    gone[*pick] = true;
    plan.moves.push_back({{graph.nodes[*pick]}, d});
  }
  return {std::move(plan), {}};
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

UtoResult plan_uto(const Configuration& config, Direction d) {
  UtoResult result = peel(config, d);
  if (result.ok()) require_valid(config, *result.plan, "plan_uto");
  return result;
}

std::vector<Group> group_le5(const Configuration& config) {
  const auto& placements = config.placements();
  std::map<Cell, std::size_t> owner;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    if (placements[i].shape().size() > 5) {
      throw DomainError("piece '" + placements[i].id() + "' has more than five cells");
    }
    for (const Cell& c : placements[i].cells()) owner.emplace(c, i);
  }

  DisjointSets sets(placements.size());
  std::map<std::size_t, Cell> empty_pocket;  // U index -> its unfilled pocket cell
  for (const UPiece& u : find_u_pentominoes(config)) {
    if (axis_of(u.opening) != Axis::Y) continue;  // opens along x: stays alone
    const std::size_t ui = *config.index_of(u.piece_id);
    const Cell pocket = pockets(placements[ui].world_shape(), Axis::Y).front().cells.front();
    if (auto it = owner.find(pocket); it != owner.end()) {
      sets.unite(ui, it->second);
    } else {
      empty_pocket.emplace(ui, pocket);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < placements.size(); ++i) by_root[sets.find(i)].push_back(i);

  std::vector<Group> groups;
  for (const auto& [root, members] : by_root) {
    std::vector<Cell> cells;
    std::vector<std::string> ids;
    for (std::size_t i : members) {
      ids.push_back(placements[i].id());
      for (const Cell& c : placements[i].cells()) cells.push_back(c);
    }
    if (members.size() == 1) {
      if (auto it = empty_pocket.find(members[0]); it != empty_pocket.end()) {
        cells.push_back(it->second);
      }
    }
    Polyomino world = [&] {
      try {
        return Polyomino(cells);
      } catch (const InvalidShape&) {
        throw InvariantViolation("group of '" + ids.front() + "' is not edge-connected");
      }
    }();
    if (members.size() > 3) {
      throw InvariantViolation("group of '" + ids.front() + "' has more than three members");
    }
    if (!is_monotone(world, Axis::Y)) {
      throw InvariantViolation("group of '" + ids.front() + "' is not y-monotone");
    }
    const Cell lo = world.min_corner();
    std::optional<Axis> internal;
    if (members.size() > 1) internal = Axis::Y;
    groups.push_back({std::move(ids), canonicalize(world), {lo.x, lo.y}, internal});
  }
  return groups;
}

SeparationPlan separate_le5(const Configuration& config) {
  const std::vector<Group> groups = group_le5(config);

  std::vector<Placement> hulls;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    hulls.emplace_back("g" + std::to_string(g), groups[g].union_shape, groups[g].offset);
  }
  const Configuration grouped(std::move(hulls));

  // Groups are y-monotone, so sliding along x must work; y is the fallback.
  std::optional<SeparationPlan> outer;
  for (Direction d : {Direction::PosX, Direction::NegX, Direction::PosY, Direction::NegY}) {
    UtoResult r = peel(grouped, d);
    if (r.ok()) {
      outer = std::move(r.plan);
      break;
    }
  }
  if (!outer) throw InvariantViolation("separate_le5: no direction separates the groups");

  SeparationPlan plan;
  std::vector<std::size_t> order;
  for (const Move& m : outer->moves) {
    const std::size_t g = std::stoul(m.pieces.front().substr(1));
    order.push_back(g);
    plan.moves.push_back({groups[g].members, m.direction});
  }

  const auto uses = find_u_pentominoes(config);
  for (std::size_t g : order) {
    const Group& group = groups[g];
    if (group.members.size() < 2) continue;
    std::vector<Placement> members;
    for (const std::string& id : group.members) members.push_back(config.at(id));
    const Configuration local(std::move(members));

    // The filler leaves through the pocket opening of the group's U.
    std::vector<Direction> tries;
    for (const UPiece& u : uses) {
      if (axis_of(u.opening) == Axis::Y &&
          std::find(group.members.begin(), group.members.end(), u.piece_id) != group.members.end()) {
        tries = {u.opening, opposite(u.opening)};
        break;
      }
    }
    for (Direction d : kAllDirections) {
      if (std::find(tries.begin(), tries.end(), d) == tries.end()) tries.push_back(d);
    }

    bool separated = false;
    for (Direction d : tries) {
      UtoResult r = peel(local, d);
      if (!r.ok()) continue;
      for (Move& m : r.plan->moves) plan.moves.push_back(std::move(m));
      separated = true;
      break;
    }
    if (!separated) {
      throw InvariantViolation("separate_le5: members of group '" + group.members.front() +
                               "' cannot be separated");
    }
  }

  require_valid(config, plan, "separate_le5");
  return plan;
}

SimulationReport simulate_plan(const Configuration& config, const SeparationPlan& plan) {
  const auto& placements = config.placements();
  const std::size_t n = placements.size();
  std::vector<std::vector<Cell>> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = placements[i].cells();

  std::vector<std::size_t> cluster(n, 0);
  std::size_t next_cluster = 1;

  for (std::size_t k = 0; k < plan.moves.size(); ++k) {
    const Move& move = plan.moves[k];
    if (move.pieces.empty()) throw PlanError("move " + std::to_string(k) + " moves no piece");
    std::vector<std::size_t> movers;
    for (const std::string& id : move.pieces) {
      const auto i = config.index_of(id);
      if (!i) throw PlanError("move " + std::to_string(k) + " references unknown piece '" + id + "'");
      if (std::find(movers.begin(), movers.end(), *i) != movers.end()) {
        throw PlanError("move " + std::to_string(k) + " lists piece '" + id + "' twice");
      }
      movers.push_back(*i);
    }

    SimulationReport report;
    report.failed_move = k;
    const std::size_t home = cluster[movers.front()];
    for (std::size_t i : movers) {
      if (cluster[i] != home) {
        report.reason = "move " + std::to_string(k) + " spans pieces that were already separated";
        return report;
      }
    }
    for (std::size_t i : movers) {
      for (std::size_t j = 0; j < n; ++j) {
        if (cluster[j] != home || std::find(movers.begin(), movers.end(), j) != movers.end()) {
          continue;
        }
        if (sweep_collides(cells[i], cells[j], move.direction)) {
          report.collision = {placements[i].id(), placements[j].id()};
          report.reason = "move " + std::to_string(k) + ": '" + placements[i].id() +
                          "' runs into '" + placements[j].id() + "'";
          return report;
        }
      }
    }
    const std::size_t fresh = next_cluster++;
    for (std::size_t i : movers) cluster[i] = fresh;
  }

  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[cluster[i]].push_back(i);
  for (const auto& [_, group] : members) {
    if (group.size() > 1) {
      SimulationReport report;
      report.reason = "pieces '" + placements[group[0]].id() + "' and '" +
                      placements[group[1]].id() + "' are never separated";
      return report;
    }
  }
  SimulationReport ok;
  ok.valid = true;
  return ok;
}

}  // namespace polylock
