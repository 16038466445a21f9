#include "chroma/smcsc.hpp"

#include <algorithm>

namespace chroma {

SmcscResult smcsc(const Instance& inst, Tolerance tol, Workers workers) {
  validate(inst);
  const McscResult on_centers = mcsc_exact(centers(inst), tol, workers);

  SmcscResult result;
  result.centers_circle = on_centers.circle;
  result.circle = Circle{on_centers.circle.center,
                         std::max(0.0, on_centers.circle.radius - kDiskRadius)};

  result.realization = center_realization(inst);
  for (auto& p : result.realization) {
    if (contains(result.centers_circle, p.point, tol)) {
      p.point = pull_toward(p.point, result.centers_circle.center, kDiskRadius);
    }
  }
  return result;
}

}  // namespace chroma
