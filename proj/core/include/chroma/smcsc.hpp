#pragma once

#include "chroma/instance.hpp"

namespace chroma {

struct SmcscResult {
  /// Smallest possible color spanning circle over all realizations.
  Circle circle;
  /// A realization whose MCSC has radius circle.radius.
  Realization realization;
  /// MCSC of the disk centers.
  Circle centers_circle;
};

/// Exact smallest MCSC of an instance of unit disks.
///
/// The answer is the centers' MCSC shrunk by the disk radius, or a single
/// point when the centers' MCSC radius is at most 1/2. Disks whose centers
/// lie in the centers' circle are realized by stepping at most 1/2 from
/// their center toward its center; the others keep their center.
SmcscResult smcsc(const Instance& inst, Tolerance tol = {}, Workers workers = {});

}  // namespace chroma
