#include "polylock/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polylock {

double rotated_vertical_extent(double w, double h, double beta) {
  if (!(w > 0) || !(h > 0)) throw DomainError("rectangle dimensions must be positive");
  if (!(std::abs(beta) < std::numbers::pi / 2)) throw DomainError("rotation must satisfy |beta| < pi/2");
  return h * std::cos(beta) + w * std::sin(std::abs(beta));
}

double extent_angle_bound(double w, double h) {
  if (!(w > 0) || !(h > 0)) throw DomainError("rectangle dimensions must be positive");
  return std::atan(w / h);
}

CorridorVerdict corridor_pins_horizontally(const CorridorScene& scene) {
  const Rational zero{0};
  if (scene.width <= zero || scene.height <= zero || scene.gap <= zero) {
    throw DomainError("corridor dimensions must be positive");
  }
  if (scene.epsilon < zero) throw DomainError("epsilon must be non-negative");
  if (scene.gap < scene.height) {
    throw InfeasibleScene("rectangle of height " + scene.height.to_string() +
                          " does not fit a corridor of width " + scene.gap.to_string());
  }
  const double w = scene.width.to_double();
  const double h = scene.height.to_double();
  CorridorVerdict verdict;
  if (scene.gap == scene.height) {
    verdict.pinned = true;
    verdict.slope_at_zero = w;
    return verdict;
  }

  const double gap = scene.gap.to_double();
  double lo = 0;
  double hi = extent_angle_bound(w, h);
  if (rotated_vertical_extent(w, h, hi) <= gap) {
    lo = hi;
  } else {
    while (hi - lo > 1e-9) {
      const double mid = lo + (hi - lo) / 2;
      (rotated_vertical_extent(w, h, mid) <= gap ? lo : hi) = mid;
    }
  }
  CorridorWitness witness;
  witness.beta = lo;
  witness.extent = rotated_vertical_extent(w, h, lo);
  witness.vertical_room = gap - witness.extent;
  verdict.witness = witness;
  return verdict;
}

ChainReport chain_hypotheses_hold(const RectChainScene& scene) {
  ChainReport report;
  auto fail = [&](std::string why) {
    report.holds = false;
    report.failure = std::move(why);
    return report;
  };
  const Rational zero{0};
  if (scene.rects.empty()) return fail("at least one rectangle is required");
  for (std::size_t i = 0; i < scene.rects.size(); ++i) {
    if (scene.rects[i].width <= zero || scene.rects[i].height <= zero) {
      return fail("rectangle " + std::to_string(i) + " has a non-positive dimension");
    }
  }
  if (scene.overlaps.size() + 1 != scene.rects.size()) {
    return fail("expected " + std::to_string(scene.rects.size() - 1) + " overlaps, got " +
                std::to_string(scene.overlaps.size()));
  }
  if (scene.gap <= zero) return fail("corridor gap must be positive");
  if (scene.epsilon < zero) return fail("epsilon must be non-negative");

  Rational narrowest = scene.rects.front().width;
  for (const auto& r : scene.rects) narrowest = std::min(narrowest, r.width);
  if (!(scene.epsilon < narrowest / Rational(10))) {
    return fail("epsilon " + scene.epsilon.to_string() + " is not below narrowest width / 10 = " +
                (narrowest / Rational(10)).to_string());
  }

  for (std::size_t i = 0; i < scene.overlaps.size(); ++i) {
    const Rational& overlap = scene.overlaps[i];
    const std::string pair = std::to_string(i) + "-" + std::to_string(i + 1);
    if (overlap <= zero) return fail("overlap " + pair + " must be positive");
    if (overlap > scene.rects[i].width || overlap > scene.rects[i + 1].width) {
      return fail("overlap " + pair + " exceeds a rectangle width");
    }
    const Rational inner = overlap - Rational(2) * scene.rects[i].width / Rational(5);
    if (inner <= zero) return fail("inner width at " + pair + " is " + inner.to_string() + ", not positive");
    report.inner_widths.push_back(inner);
  }

  Rational stacked{0};
  for (const auto& r : scene.rects) stacked += r.height;
  if (stacked != scene.gap) {
    report.inner_widths.clear();
    return fail("stacked height " + stacked.to_string() + " differs from gap " + scene.gap.to_string());
  }
  report.holds = true;
  return report;
}

}  // namespace polylock
