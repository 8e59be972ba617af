#pragma once

// Checks for the continuous lemmas about rectangles trapped between two
// horizontal lines. Decisions on scene geometry are exact on rational inputs;
// angles and extents are doubles.

#include <optional>
#include <string>
#include <vector>

#include "polylock/error.hpp"
#include "polylock/rational.hpp"

namespace polylock {

// Vertical extent of a w x h rectangle rotated by beta radians:
// h*cos(beta) + w*sin(|beta|). Requires w, h > 0 and |beta| < pi/2.
double rotated_vertical_extent(double w, double h, double beta);

// Largest angle for which the strict extent inequality is claimed: atan(w/h).
double extent_angle_bound(double w, double h);

class InfeasibleScene : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CorridorScene {
  Rational width;
  Rational height;
  Rational gap;  // distance between the two fixed lines
  Rational epsilon{0};
};

// A placement other than a pure horizontal shift: the rectangle tilted by
// `beta` still fits, leaving `vertical_room` between it and the lines.
struct CorridorWitness {
  double beta = 0;
  double extent = 0;
  double vertical_room = 0;
};

struct CorridorVerdict {
  bool pinned = false;
  // Pinned: derivative of the extent at 0, which is w > 0.
  double slope_at_zero = 0;
  std::optional<CorridorWitness> witness;
};

// Throws DomainError for non-positive dimensions or negative epsilon, and
// InfeasibleScene when the gap is smaller than the height.
CorridorVerdict corridor_pins_horizontally(const CorridorScene& scene);

struct RectChainScene {
  struct Rect {
    Rational width;
    Rational height;
  };
  std::vector<Rect> rects;  // bottom to top
  // overlaps[i]: horizontal overlap of rects[i] and rects[i + 1].
  std::vector<Rational> overlaps;
  Rational gap;
  Rational epsilon{0};
};

struct ChainReport {
  bool holds = false;
  // overlaps[i] - 2 * width[i] / 5, for every consecutive pair.
  std::vector<Rational> inner_widths;
  std::string failure;  // first failing hypothesis, empty when holds
};

ChainReport chain_hypotheses_hold(const RectChainScene& scene);

}  // namespace polylock
