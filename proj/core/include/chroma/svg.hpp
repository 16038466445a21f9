#pragma once

#include <span>
#include <string>

#include "chroma/geom.hpp"

namespace chroma::svg {

/// Static SVG figure: one <circle> per disk, one for the solution circle,
/// and a small square marker per realization point. The viewBox fits the
/// bounding box of everything drawn plus a 10% margin; y points up.
std::string render(std::span<const ColoredDisk> disks, std::span<const ColoredPoint> points,
                   const Circle& solution);

}  // namespace chroma::svg
