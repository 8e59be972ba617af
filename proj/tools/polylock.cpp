// polylock: command-line front end for the polylock library.
//
// Exit codes: 0 success / escaped / valid plan, 1 usage or input error,
// 2 negative answer (no plan, locked, unreachable), 3 search budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "polylock/classify.hpp"
#include "polylock/continuous.hpp"
#include "polylock/error.hpp"
#include "polylock/io.hpp"
#include "polylock/search.hpp"
#include "polylock/separation.hpp"
#include "polylock/svg.hpp"

namespace {

using namespace polylock;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNo = 2;
constexpr int kBudget = 3;

int env_threads() {
  const char* v = std::getenv("POLYLOCK_THREADS");
  if (!v || !*v) return 1;
  try {
    const int n = std::stoi(v);
    if (n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw DomainError("POLYLOCK_THREADS must be a positive integer");
}

Direction direction_arg(const std::string& text) {
  if (auto d = parse_direction(text)) return *d;
  throw DomainError("unknown direction '" + text + "' (use +x, -x, +y or -y)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out;
  for (const Cell& c : cells) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
  }
  return out;
}

void print_trace(const std::vector<SlideMove>& trace) {
  std::cout << "trace: " << trace.size() << " unit moves\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::cout << "  step " << i + 1 << ": " << to_string(trace[i]) << '\n';
  }
}

struct BudgetFlags {
  int radius = 3;
  std::size_t max_states = 1'000'000;
  std::string mode = "single";
  int max_subset = 4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--radius", radius, "Chebyshev bound on piece displacement")->capture_default_str();
    cmd->add_option("--max-states", max_states, "State budget")->capture_default_str();
    cmd->add_option("--mode", mode, "single or subset")
        ->check(CLI::IsMember({"single", "subset"}))
        ->capture_default_str();
    cmd->add_option("--max-subset", max_subset, "Largest subset moved at once in subset mode")
        ->capture_default_str();
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.radius = radius;
    b.max_states = max_states;
    b.mode = *parse_move_mode(mode);
    b.max_subset = max_subset;
    b.threads = env_threads();
    return b;
  }
};

int run_classify(const std::string& file) {
  const Document doc = parse_document(read_file(file));
  for (const Placement& p : doc.config.placements()) {
    const Polyomino shape = p.world_shape();
    const MonotoneReport r = classify(shape);
    std::cout << p.id() << ": x-monotone=" << yes_no(r.x_monotone) << " y-monotone=" << yes_no(r.y_monotone)
              << " orthogonally-convex=" << yes_no(r.orthogonally_convex) << '\n';
    for (Axis axis : {Axis::X, Axis::Y}) {
      if (is_monotone(shape, axis)) continue;
      try {
        for (const Pocket& pocket : pockets(shape, axis)) {
          std::cout << "  pocket " << to_string(axis) << ": " << cells_text(pocket.cells) << " opening "
                    << to_string(pocket.opening) << '\n';
        }
      } catch (const EnclosedPocket& e) {
        std::cout << "  pocket " << to_string(axis) << ": " << cells_text(e.cells()) << " enclosed\n";
      }
    }
  }
  return kOk;
}

int run_separate(const std::string& file, const std::string& mode, const std::string& dir) {
  const Configuration config = parse_config(read_file(file));
  SeparationPlan plan;
  if (mode == "uto") {
    const UtoResult r = plan_uto(config, direction_arg(dir));
    if (!r.ok()) {
      std::cout << "no plan: blocking cycle";
      for (const std::string& id : r.cycle) std::cout << ' ' << id;
      std::cout << '\n';
      return kNo;
    }
    plan = *r.plan;
  } else {
    try {
      plan = separate_le5(config);
    } catch (const DomainError& e) {
      std::cout << "no plan: " << e.what() << '\n';
      return kNo;
    } catch (const InvariantViolation& e) {
      std::cout << "no plan: " << e.what() << '\n';
      return kNo;
    }
  }
  std::cout << to_string(plan);
  const SimulationReport report = simulate_plan(config, plan);
  if (report.valid) {
    std::cout << "simulation: valid\n";
    return kOk;
  }
  std::cout << "simulation: invalid: " << report.reason << '\n';
  return kNo;
}

int run_solve(const std::string& file, const BudgetFlags& flags) {
  const Configuration config = parse_config(read_file(file));
  const SearchVerdict v = escape_search(config, flags.budget());
  std::cout << "outcome: " << to_string(v.outcome) << '\n';
  std::cout << "states: " << v.states_explored << '\n';
  if (v.outcome == SearchOutcome::Escaped) {
    print_trace(v.trace);
    std::cout << "escape: " << to_string(*v.escape) << '\n';
    return kOk;
  }
  return v.outcome == SearchOutcome::LockedWithinBudget ? kNo : kBudget;
}

int run_key(const std::string& file, std::string piece, int dx, int dy, const BudgetFlags& flags) {
  const Document doc = parse_document(read_file(file));
  if (piece.empty()) {
    if (!doc.key) throw DomainError("no --piece given and the file names no key piece");
    piece = *doc.key;
  }
  const ReachVerdict v = key_piece_reachable(doc.config, piece, {dx, dy}, flags.budget());
  std::cout << "outcome: " << to_string(v.outcome) << '\n';
  std::cout << "states: " << v.states_explored << '\n';
  if (v.outcome == ReachOutcome::Reachable) {
    print_trace(v.trace);
    return kOk;
  }
  return v.outcome == ReachOutcome::Unreachable ? kNo : kBudget;
}

int run_deps(const std::string& file, const std::string& piece, const std::string& dir) {
  const Configuration config = parse_config(read_file(file));
  const auto deps = slide_dependency(config, piece, direction_arg(dir));
  for (std::size_t i = 0; i < deps.size(); ++i) std::cout << (i ? " " : "") << deps[i];
  std::cout << '\n';
  return kOk;
}

int run_enumerate(int n, const std::string& filter) {
  std::vector<Polyomino> kept;
  for (const Polyomino& shape : enumerate_free(n)) {
    const MonotoneReport r = classify(shape);
    const bool keep = filter.empty() || (filter == "ortho-convex" && r.orthogonally_convex) ||
                      (filter == "x-monotone" && r.x_monotone) || (filter == "y-monotone" && r.y_monotone) ||
                      (filter == "non-convex" && !r.orthogonally_convex);
    if (keep) kept.push_back(shape);
  }
  std::cout << "count: " << kept.size() << '\n';
  for (const Polyomino& shape : kept) {
    std::cout << '\n' << emit_grid(Configuration({Placement("#", shape)}));
  }
  return kOk;
}

int run_render(const std::string& file, const std::string& output, const std::string& annotate,
               const std::string& dir) {
  const Configuration config = parse_config(read_file(file));
  SvgAnnotations notes;
  if (annotate == "plan") {
    notes.plan = separate_le5(config);
  } else if (annotate == "pockets") {
    for (const Placement& p : config.placements()) {
      for (Axis axis : {Axis::X, Axis::Y}) {
        try {
          for (const Pocket& pocket : pockets(p.world_shape(), axis)) {
            notes.highlight.insert(notes.highlight.end(), pocket.cells.begin(), pocket.cells.end());
          }
        } catch (const EnclosedPocket& e) {
          notes.highlight.insert(notes.highlight.end(), e.cells().begin(), e.cells().end());
        }
      }
    }
  } else if (annotate == "graph") {
    notes.graph = blocking_graph(config, direction_arg(dir));
  }
  const std::string svg = render_svg(config, notes);
  if (output == "-") {
    std::cout << svg;
    return kOk;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write '" + output + "'");
  out << svg;
  return kOk;
}

Rational rational_arg(const std::string& text) { return Rational::parse(text); }

int run_lemma_extent(double w, double h, double beta) {
  std::cout.precision(12);
  std::cout << "extent: " << rotated_vertical_extent(w, h, beta) << '\n';
  std::cout << "angle-bound: " << extent_angle_bound(w, h) << '\n';
  return kOk;
}

int run_lemma_corridor(const std::string& w, const std::string& h, const std::string& gap, const std::string& eps) {
  const CorridorVerdict v =
      corridor_pins_horizontally({rational_arg(w), rational_arg(h), rational_arg(gap), rational_arg(eps)});
  std::cout.precision(12);
  if (v.pinned) {
    std::cout << "pinned: yes\nslope-at-zero: " << v.slope_at_zero << '\n';
    return kOk;
  }
  std::cout << "pinned: no\nwitness-beta: " << v.witness->beta << "\nwitness-extent: " << v.witness->extent
            << "\nvertical-room: " << v.witness->vertical_room << '\n';
  return kNo;
}

int run_lemma_chain(const std::vector<std::string>& rects, const std::vector<std::string>& overlaps,
                    const std::string& gap, const std::string& eps) {
  RectChainScene scene;
  for (const std::string& r : rects) {
    const auto x = r.find('x');
    if (x == std::string::npos) throw DomainError("rectangle '" + r + "' is not WxH");
    scene.rects.push_back({rational_arg(r.substr(0, x)), rational_arg(r.substr(x + 1))});
  }
  for (const std::string& o : overlaps) scene.overlaps.push_back(rational_arg(o));
  scene.gap = rational_arg(gap);
  scene.epsilon = rational_arg(eps);
  const ChainReport report = chain_hypotheses_hold(scene);
  std::cout << "holds: " << yes_no(report.holds) << '\n';
  for (std::size_t i = 0; i < report.inner_widths.size(); ++i) {
    std::cout << "inner-width " << i << ": " << report.inner_widths[i].to_string() << '\n';
  }
  if (!report.holds) std::cout << "failure: " << report.failure << '\n';
  return report.holds ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability and interlocking analysis for polyomino systems"};
  app.require_subcommand(1);
  int code = kOk;
  std::string file;

  auto* classify_cmd = app.add_subcommand("classify", "Monotonicity and pockets of each piece");
  classify_cmd->add_option("file", file, "Configuration file")->required();

  std::string sep_mode = "le5";
  std::string dir = "+x";
  auto* separate_cmd = app.add_subcommand("separate", "Build and simulate a separation plan");
  separate_cmd->add_option("file", file, "Configuration file")->required();
  separate_cmd->add_option("--mode", sep_mode, "le5 or uto")->check(CLI::IsMember({"le5", "uto"}))->capture_default_str();
  separate_cmd->add_option("--dir", dir, "Direction for uto mode")->capture_default_str();

  BudgetFlags budget;
  auto* solve_cmd = app.add_subcommand("solve", "Search for an escape by unit translations");
  solve_cmd->add_option("file", file, "Configuration file")->required();
  budget.attach(solve_cmd);

  std::string piece;
  int dx = 0;
  int dy = 0;
  auto* key_cmd = app.add_subcommand("key", "Can a piece reach a displacement relative to the rest?");
  key_cmd->add_option("file", file, "Configuration file")->required();
  key_cmd->add_option("--piece", piece, "Key piece (defaults to the file's key line)");
  key_cmd->add_option("--dx", dx, "Target x displacement")->required();
  key_cmd->add_option("--dy", dy, "Target y displacement")->required();
  budget.attach(key_cmd);

  auto* deps_cmd = app.add_subcommand("deps", "Pieces pushed along by a one-unit slide");
  deps_cmd->add_option("file", file, "Configuration file")->required();
  deps_cmd->add_option("--piece", piece, "Piece to slide")->required();
  deps_cmd->add_option("--dir", dir, "Direction")->required();

  int n = 0;
  std::string filter;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List free polyominoes");
  enumerate_cmd->add_option("-n", n, "Cell count (1..10)")->required();
  enumerate_cmd->add_option("--filter", filter, "ortho-convex, x-monotone, y-monotone or non-convex")
      ->check(CLI::IsMember({"ortho-convex", "x-monotone", "y-monotone", "non-convex"}));

  auto* lemma_cmd = app.add_subcommand("lemma", "Continuous rectangle checks");
  lemma_cmd->require_subcommand(1);
  double w = 0;
  double h = 0;
  double beta = 0;
  auto* extent_cmd = lemma_cmd->add_subcommand("extent", "Vertical extent of a rotated rectangle");
  extent_cmd->set_help_flag("--help", "Print this help message and exit");
  extent_cmd->add_option("--w", w, "Width")->required();
  extent_cmd->add_option("--h", h, "Height")->required();
  extent_cmd->add_option("--beta", beta, "Rotation in radians")->required();

  std::string rw, rh, gap, eps = "0";
  auto* corridor_cmd = lemma_cmd->add_subcommand("corridor", "Is a rectangle pinned between two lines?");
  corridor_cmd->set_help_flag("--help", "Print this help message and exit");
  corridor_cmd->add_option("--w", rw, "Width (decimal or p/q)")->required();
  corridor_cmd->add_option("--h", rh, "Height")->required();
  corridor_cmd->add_option("--gap", gap, "Distance between the lines")->required();
  corridor_cmd->add_option("--eps", eps, "Perturbation bound")->capture_default_str();

  std::vector<std::string> rects;
  std::vector<std::string> overlaps;
  auto* chain_cmd = lemma_cmd->add_subcommand("chain", "Check the stacked-rectangle hypotheses");
  chain_cmd->add_option("--rect", rects, "WxH, bottom to top, repeatable")->required();
  chain_cmd->add_option("--overlap", overlaps, "Overlap of consecutive rectangles, repeatable");
  chain_cmd->add_option("--gap", gap, "Distance between the lines")->required();
  chain_cmd->add_option("--eps", eps, "Perturbation bound")->capture_default_str();

  std::string output;
  std::string annotate;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG drawing");
  render_cmd->add_option("file", file, "Configuration file")->required();
  render_cmd->add_option("-o,--output", output, "Output path, '-' for stdout")->required();
  render_cmd->add_option("--annotate", annotate, "plan, pockets or graph")
      ->check(CLI::IsMember({"plan", "pockets", "graph"}));
  render_cmd->add_option("--dir", dir, "Direction for the graph annotation")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) code = run_classify(file);
    else if (*separate_cmd) code = run_separate(file, sep_mode, dir);
    else if (*solve_cmd) code = run_solve(file, budget);
    else if (*key_cmd) code = run_key(file, piece, dx, dy, budget);
    else if (*deps_cmd) code = run_deps(file, piece, dir);
    else if (*enumerate_cmd) code = run_enumerate(n, filter);
    else if (*extent_cmd) code = run_lemma_extent(w, h, beta);
    else if (*corridor_cmd) code = run_lemma_corridor(rw, rh, gap, eps);
    else if (*chain_cmd) code = run_lemma_chain(rects, overlaps, gap, eps);
    else if (*render_cmd) code = run_render(file, output, annotate, dir);
  } catch (const std::exception& e) {
    std::cerr << "polylock: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
