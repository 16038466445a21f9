#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chroma/geom.hpp"
#include "chroma/mcsc.hpp"

namespace chroma {

/// Colored unit disks (diameter 1) with colors in [0, k).
struct Instance {
  std::vector<ColoredDisk> disks;
  int k = 0;
};

/// One point per disk, in disk order, each carrying its disk_index.
using Realization = std::vector<ColoredPoint>;

/// Throws EmptyInput, MissingColor, or Error for bad colors or coordinates.
void validate(const Instance& inst);

/// Builds an instance whose k is one more than the largest color id.
Instance make_instance(std::vector<ColoredDisk> disks);

/// Disk centers as a precise point set (disk_index filled in).
PrecisePointSet centers(const Instance& inst);

/// Wraps a realization of inst as a precise point set.
PrecisePointSet as_point_set(const Realization& r, int k);

/// True iff r has one point per disk, colors match and every point lies in
/// its closed disk within eps.
bool is_realization_of(const Realization& r, const Instance& inst, Tolerance tol = {});

/// Realization placing every point at its disk center.
Realization center_realization(const Instance& inst);

/// Permutation sorting disks by (x, y, color); stable for equal keys.
std::vector<std::size_t> canonical_order(std::span<const ColoredDisk> disks);

}  // namespace chroma
