#include "polylock/packing.hpp"

#include <random>
#include <set>

#include "polylock/classify.hpp"
#include "polylock/error.hpp"

namespace polylock {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

class Board {
 public:
  Board(int width, int height) : width_(width), height_(height), used_(width * height, false) {}

  bool fits(const Polyomino& shape, Offset at) const {
    for (const Cell& c : shape.cells()) {
      const Cell w = c + at;
      if (w.x < 0 || w.y < 0 || w.x >= width_ || w.y >= height_) return false;
      if (used_[w.y * width_ + w.x]) return false;
    }
    return true;
  }
  void put(const Polyomino& shape, Offset at) {
    for (const Cell& c : shape.cells()) {
      const Cell w = c + at;
      used_[w.y * width_ + w.x] = true;
    }
  }
  bool touches(const Polyomino& shape, Offset at) const {
    for (const Cell& c : shape.cells()) {
      for (Direction d : kAllDirections) {
        const Cell w = c + at + unit_step(d);
        if (w.x >= 0 && w.y >= 0 && w.x < width_ && w.y < height_ && used_[w.y * width_ + w.x]) return true;
      }
    }
    return false;
  }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  int width_;
  int height_;
  std::vector<bool> used_;
};

std::optional<Offset> random_fit(const Board& board, const Polyomino& shape, bool touching, Rng& rng) {
  std::vector<Offset> spots;
  for (int y = 0; y + shape.height() <= board.height(); ++y) {
    for (int x = 0; x + shape.width() <= board.width(); ++x) {
      if (board.fits(shape, {x, y}) && (!touching || board.touches(shape, {x, y}))) spots.push_back({x, y});
    }
  }
  if (spots.empty()) return std::nullopt;
  return spots[rng.below(spots.size())];
}

Configuration draw(const PackingParams& params, Rng& rng) {
  Board board(params.width, params.height);
  std::vector<Placement> placed;
  auto name = [&] { return "p" + std::to_string(placed.size()); };

  std::size_t misses = 0;
  while (static_cast<int>(placed.size()) < params.max_pieces &&
         misses < params.shapes.size() * 2) {
    const Polyomino& shape = params.shapes[rng.below(params.shapes.size())];
    const auto at = random_fit(board, shape, params.touching && !placed.empty(), rng);
    if (!at) {
      ++misses;
      continue;
    }
    misses = 0;
    board.put(shape, *at);
    placed.emplace_back(name(), shape, *at);

    if (!is_u_pentomino(shape) || rng.unit() >= params.pocket_fill_bias) continue;
    const Polyomino world = shape.translated(*at);
    auto found = pockets(world, Axis::Y);
    if (found.empty()) found = pockets(world, Axis::X);
    const Cell pocket = found.front().cells.front();
    // Try a few shapes, each anchored by one of its cells on the pocket.
    for (int attempt = 0; attempt < 16 && static_cast<int>(placed.size()) < params.max_pieces;
         ++attempt) {
      const Polyomino& plug = params.shapes[rng.below(params.shapes.size())];
      const Cell anchor = plug.cells()[rng.below(plug.size())];
      const Offset plug_at{pocket.x - anchor.x, pocket.y - anchor.y};
      if (board.fits(plug, plug_at)) {
        board.put(plug, plug_at);
        placed.emplace_back(name(), plug, plug_at);
        break;
      }
    }
  }
  return Configuration(std::move(placed));
}

}  // namespace

std::vector<Polyomino> shape_pool(int min_cells, int max_cells,
                                  const std::function<bool(const Polyomino&)>& keep) {
  std::vector<Polyomino> out;
  for (int n = min_cells; n <= max_cells; ++n) {
    for (const Polyomino& free : enumerate_free(n)) {
      for (Polyomino& fixed : fixed_orientations(free)) {
        if (!keep || keep(fixed)) out.push_back(std::move(fixed));
      }
    }
  }
  return out;
}

Configuration random_packing(const PackingParams& params, std::uint64_t seed) {
  if (params.width <= 0 || params.height <= 0 || params.max_pieces < 0) {
    throw DomainError("random_packing: box and piece count must be positive");
  }
  if (params.shapes.empty()) throw DomainError("random_packing: empty shape pool");
  Rng rng(seed);
  const double area = static_cast<double>(params.width) * params.height;
  for (int redraw = 0; redraw < params.max_redraws; ++redraw) {
    Configuration config = draw(params, rng);
    std::size_t cells = 0;
    for (const Placement& p : config.placements()) cells += p.shape().size();
    if (static_cast<double>(cells) >= params.min_density * area) return config;
  }
  throw DomainError("random_packing: density target not reached");
}

}  // namespace polylock
