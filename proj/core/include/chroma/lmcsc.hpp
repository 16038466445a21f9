#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "chroma/instance.hpp"

namespace chroma {

class ColorAbsent : public Error {
 public:
  explicit ColorAbsent(int color)
      : Error("color " + std::to_string(color) + " is not present in the instance") {}
};

/// Integer coordinates (a, b) of the lattice point anchor + a*u + b*v.
struct LatticeIndex {
  long a = 0;
  long b = 0;

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// Realization that snaps two colors onto a square lattice of side 1/2
/// rotated by 45 degrees. Lattice points with even a+b carry color_a and
/// odd ones color_b, so any two snapped points of different colors are at
/// least 1/2 apart.
struct GridRealization {
  Realization realization;
  /// Lattice position of each snapped point; empty for disks left at
  /// their center.
  std::vector<std::optional<LatticeIndex>> lattice;
  int color_a = 0;
  int color_b = 1;
  Point anchor;
  Point u;
  Point v;
};

/// Lattice basis vectors, each of length 1/2.
Point grid_basis_u();
Point grid_basis_v();

/// Snaps disks of color_a and color_b to lattice corners of the cell
/// containing their center; other disks keep their centers. Throws
/// ColorAbsent if either color has no disk, Error if they are equal.
GridRealization grid_realization(const Instance& inst, int color_a, int color_b,
                                 Point anchor = {}, Tolerance tol = {});

enum class Branch { centers, grid };

std::string_view to_string(Branch b);

/// Bounds attached to an approximate largest MCSC.
struct Certificate {
  double r_c = 0.0;
  /// Upper bound on the largest MCSC radius.
  double upper = 0.0;
  double achieved = 0.0;
  /// achieved / upper; at least 1/3, at least 1/2 for color-disjoint input.
  double factor = 0.0;
  Branch branch = Branch::centers;
};

struct LmcscResult {
  Realization realization;
  Circle circle;
  Certificate certificate;
};

/// 1/3-approximation of the largest possible MCSC.
///
/// If the centers' MCSC radius r_c is at least 1/4 the centers themselves
/// are returned. Otherwise the two smallest color ids are snapped to the
/// rotated lattice, whose MCSC is at least 1/4. With a single color every
/// realization has radius 0; the certificate then reports upper = 0 and
/// factor = 1.
LmcscResult lmcsc_approx(const Instance& inst, Tolerance tol = {}, Workers workers = {},
                         Point anchor = {});

/// r_c + 1/2, or 0 when the instance has a single color.
double upper_bound(const Instance& inst, Tolerance tol = {});

/// True iff every pair of differently colored disks is strictly separated:
/// center distance > 1 + eps. Tangent closed disks intersect.
bool is_color_disjoint(const Instance& inst, Tolerance tol = {});

/// Draws one realization: each disk independently picks a uniform boundary
/// point with probability 1/2 and a uniform interior point otherwise.
Realization sample_realization(const Instance& inst, std::mt19937_64& rng);

struct SamplingResult {
  Realization realization;
  McscResult mcsc;
  double radius = 0.0;
  std::size_t best_sample = 0;
};

/// Lower-bound probe for the largest MCSC: the best of `samples` random
/// realizations. Sample i uses derived_stream(seed, i); ties keep the
/// lowest index, so the result is independent of the worker count.
SamplingResult lmcsc_sampling_oracle(const Instance& inst, std::size_t samples,
                                     std::uint64_t seed, Tolerance tol = {},
                                     Workers workers = {});

}  // namespace chroma
