#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chroma/instance.hpp"

namespace chroma {

inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;

/// Minimum red-blue distance demanded of realizations in the hardness gadgets.
inline constexpr double kSeparation = 9.0 / 8.0;
inline constexpr double kStackSpacing = 3.0 / 8.0;
inline constexpr double kClauseSide = 7.0 / 2.0;

/// Distance from a clause triangle corner to the red disk center on the
/// corner-to-g line. With f anchors at distance rho from g, the all-f choice
/// is infeasible iff rho < 9/8 (g itself is the best blue point), and a
/// single t choice is feasible iff rho^2 + rho/2 + 1/4 >= 81/64, i.e.
/// rho >= 0.7883. rho = side/sqrt(3) - 1/2 - offset, so the offset must lie
/// in (0.3957, 0.7324]; 0.56 puts rho at 0.9607, near the middle.
inline constexpr double kDefaultClauseOffset = 0.56;

enum class StackPattern { BRB, RBR };

/// Three disks of alternating color on a line, 3/8 apart.
struct StackGadget {
  Point mid_center;
  /// Unit direction from the middle disk to the first outer disk.
  Point axis{0.0, 1.0};
  StackPattern pattern = StackPattern::BRB;
  /// Disk at mid + 3/8 axis, the middle disk, disk at mid - 3/8 axis.
  std::array<ColoredDisk, 3> disks{};

  Instance instance() const;
};

/// Throws Error if axis is not a nonzero finite direction; it is normalized.
StackGadget make_stack(Point mid_center, StackPattern pattern, Point axis = {0.0, 1.0});

/// The two realizations of a stack with all cross-color distances 9/8.
/// `left` puts the middle point on the middle disk's boundary at
/// mid - 1/2 * right, where right is axis rotated clockwise by 90 degrees;
/// `right` mirrors it. Points follow disk order.
struct StackExtremes {
  Realization left;
  Realization right;
};

StackExtremes stack_extreme_realizations(const StackGadget& s);

struct PDeltaReport {
  double min_cross_color_distance = 0.0;
  bool pass = true;
  /// Cross-color pairs closer than delta - eps, as (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;
};

/// Checks that every pair of differently colored points is at least
/// delta - eps apart.
PDeltaReport pdelta_check(std::span<const ColoredPoint> points, double delta, Tolerance tol = {});

/// Monte Carlo probe of the stack's rigidity: samples realizations and
/// returns false as soon as one passes pdelta_check(delta) with its middle
/// point farther than `neighborhood` from both extreme middle points.
///
/// Each sample draws the middle point (half on the boundary, half inside);
/// each outer disk then takes, with probability 1/2, its point farthest
/// from the middle point and otherwise a random point.
bool stack_rigidity_probe(const StackGadget& s, std::size_t samples, std::uint64_t seed,
                          double neighborhood, double delta = kSeparation, Tolerance tol = {},
                          Workers workers = {});

enum class Placement { t, f };

/// Equilateral triangle of side 7/2 centered at g, one red disk per corner
/// and a blue disk at g. Corners sit at angles 90, 210 and 330 degrees.
struct ClauseGadget {
  Point g;
  double side = kClauseSide;
  double corner_offset = kDefaultClauseOffset;
  std::array<Point, 3> corners{};
  std::array<ColoredDisk, 3> red{};
  ColoredDisk blue;
  /// Farthest point of each red disk from g on its corner line.
  std::array<Point, 3> t_anchor{};
  /// Nearest point of each red disk to g on its corner line.
  std::array<Point, 3> f_anchor{};

  /// Red disks in corner order followed by the blue disk.
  Instance instance() const;
};

ClauseGadget make_clause_gadget(Point g, double corner_offset = kDefaultClauseOffset);

/// True iff, with red points fixed at the chosen anchors, some point of the
/// blue disk is at least 9/8 - eps from all three. The blue disk is scanned
/// on a grid of pitch 1e-3, then `samples` seeded random points are tried.
bool clause_feasibility(const ClauseGadget& cg, std::array<Placement, 3> choices,
                        std::size_t samples, std::uint64_t seed, Tolerance tol = {});

/// Square grid pitch 2*sqrt(2)*epsilon.
double tightness_pitch(double epsilon);

/// Blue disk at the origin, red disks on a square grid of pitch
/// 2*sqrt(2)*epsilon filling the square [-(1/2 + pitch), 1/2 + pitch]^2, and
/// `far_blue` more blue disks at (100 + 2i, 0). Every realization has
/// MCSC radius at most 1/4 + epsilon.
Instance make_tightness_instance(double epsilon, int far_blue = 0);

}  // namespace chroma
