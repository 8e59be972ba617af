#include "fixtures.hpp"

#include "polylock/classify.hpp"
#include "polylock/error.hpp"
#include "polylock/separation.hpp"

namespace fixtures {

using namespace polylock;

Document load(const std::string& name) {
  return parse_document(read_file(std::string(POLYLOCK_TEST_DATA) + "/" + name));
}

PackingParams dense_pentomino_packing() {
  PackingParams p;
  p.width = 15;
  p.height = 15;
  p.max_pieces = 25;
  p.min_density = 0.5;
  p.shapes = shape_pool(5, 5);
  for (int copy = 0; copy < 4; ++copy) {
    for (const Polyomino& u : fixed_orientations(u_pentomino())) p.shapes.push_back(u);
  }
  p.pocket_fill_bias = 0.8;
  return p;
}

PackingParams y_monotone_packing() {
  PackingParams p;
  p.width = 12;
  p.height = 12;
  p.max_pieces = 16;
  p.shapes = shape_pool(1, 7, [](const Polyomino& s) { return is_monotone(s, Axis::Y); });
  return p;
}

PackingParams ortho_convex_packing() {
  PackingParams p;
  p.width = 12;
  p.height = 12;
  p.max_pieces = 16;
  p.shapes = shape_pool(1, 7, [](const Polyomino& s) { return classify(s).orthogonally_convex; });
  return p;
}

PackingParams small_packing() {
  PackingParams p;
  p.width = 8;
  p.height = 8;
  p.max_pieces = 4;
  p.touching = true;
  p.shapes = shape_pool(1, 5);
  for (const Polyomino& u : fixed_orientations(u_pentomino())) p.shapes.push_back(u);
  p.pocket_fill_bias = 1.0;
  return p;
}

bool planner_succeeds(const Configuration& config) {
  try {
    if (simulate_plan(config, separate_le5(config)).valid) return true;
  } catch (const Error&) {
  }
  for (Direction d : kAllDirections) {
    const UtoResult r = plan_uto(config, d);
    if (r.ok() && simulate_plan(config, *r.plan).valid) return true;
  }
  return false;
}

std::vector<Configuration> format_corpus() {
  std::vector<Configuration> out;
  for (const char* name : {"pinwheel.txt", "zchain.txt", "tray.txt", "tray_keyed.txt", "u.txt", "u_plug.txt",
                           "packing.txt"}) {
    out.push_back(load(name).config);
  }
  out.emplace_back();
  out.push_back(Configuration({Placement("solo", u_pentomino(), {-3, -7})}));
  for (int n = 1; n <= 5; ++n) {
    std::vector<Placement> row;
    int x = 0;
    for (const Polyomino& shape : enumerate_free(n)) {
      row.emplace_back("s" + std::to_string(row.size()), shape, Offset{x, 0});
      x += shape.width() + 1;
    }
    out.emplace_back(std::move(row));
  }
  PackingParams dense = dense_pentomino_packing();
  PackingParams small = small_packing();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(random_packing(dense, seed));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(random_packing(small, seed));
  return out;
}

}  // namespace fixtures
