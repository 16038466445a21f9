#pragma once

#include <vector>

#include "chroma/geom.hpp"
#include "chroma/parallel.hpp"

namespace chroma {

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("input contains no points") {}
};

class MissingColor : public Error {
 public:
  explicit MissingColor(int color)
      : Error("color " + std::to_string(color) + " has no point"), color_(color) {}
  int color() const { return color_; }

 private:
  int color_;
};

/// Precise colored points; colors are ids in [0, k).
struct PrecisePointSet {
  std::vector<ColoredPoint> points;
  int k = 0;
};

/// Throws EmptyInput, MissingColor, or Error for ids outside [0, k).
void validate(const PrecisePointSet& ps);

struct McscResult {
  Circle circle;
  /// The one, two or three points the circle was built from.
  std::vector<ColoredPoint> witness;
  /// One contained point per color, indexed by color.
  std::vector<ColoredPoint> per_color_cover;
};

/// Minimum color spanning circle by exact candidate enumeration.
///
/// Candidates are single points, diametral circles of bichromatic pairs and
/// circumcircles of trichromatic triples. Any smallest color spanning circle
/// is the smallest enclosing circle of one point per color, and that circle
/// is fixed by two or three of them, so restricting candidates to distinct
/// colors loses nothing. Among feasible candidates the minimum of
/// (radius, center.x, center.y) is returned; the input is sorted first, so
/// the result does not depend on input order or on the worker count.
McscResult mcsc_exact(const PrecisePointSet& ps, Tolerance tol = {}, Workers workers = {});

/// True iff every color has a point inside c (closed, within eps).
bool feasible(const Circle& c, const PrecisePointSet& ps, Tolerance tol = {});

/// max over colors of the distance from x to the nearest point of that color.
/// 1-Lipschitz in x; its minimum over the plane is the MCSC radius.
double spanning_radius_at(Point x, const PrecisePointSet& ps);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Brackets the MCSC radius by minimizing spanning_radius_at over a grid of
/// pitch h covering the bounding box inflated by its diameter. hi is the
/// grid minimum; lo = hi - h*sqrt(2)/2. Grid blocks are pruned with the
/// Lipschitz bound, which returns the same minimum as a full scan.
Bracket mcsc_grid_oracle(const PrecisePointSet& ps, double h);

}  // namespace chroma
