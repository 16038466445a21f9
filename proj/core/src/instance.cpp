#include "chroma/instance.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace chroma {

void validate(const Instance& inst) {
  if (inst.disks.empty()) throw EmptyInput();
  if (inst.k < 1) throw Error("color count must be at least 1");
  std::vector<bool> seen(inst.k, false);
  for (const auto& d : inst.disks) {
    if (!is_finite(d.center)) throw Error("disk centers must be finite");
    if (d.color < 0 || d.color >= inst.k) {
      throw Error("color id " + std::to_string(d.color) + " outside [0, " +
                  std::to_string(inst.k) + ")");
    }
    seen[d.color] = true;
  }
  for (int c = 0; c < inst.k; ++c) {
    if (!seen[c]) throw MissingColor(c);
  }
}

Instance make_instance(std::vector<ColoredDisk> disks) {
  int k = 0;
  for (const auto& d : disks) k = std::max(k, d.color + 1);
  return Instance{std::move(disks), k};
}

PrecisePointSet centers(const Instance& inst) {
  return as_point_set(center_realization(inst), inst.k);
}

PrecisePointSet as_point_set(const Realization& r, int k) { return PrecisePointSet{r, k}; }

bool is_realization_of(const Realization& r, const Instance& inst, Tolerance tol) {
  if (r.size() != inst.disks.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& d = inst.disks[i];
    if (r[i].color != d.color) return false;
    if (!contains(Circle{d.center, kDiskRadius}, r[i].point, tol)) return false;
  }
  return true;
}

Realization center_realization(const Instance& inst) {
  Realization r;
  r.reserve(inst.disks.size());
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    r.push_back({inst.disks[i].center, inst.disks[i].color, i});
  }
  return r;
}

std::vector<std::size_t> canonical_order(std::span<const ColoredDisk> disks) {
  std::vector<std::size_t> order(disks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(disks[a].center.x, disks[a].center.y, disks[a].color) <
           std::tie(disks[b].center.x, disks[b].center.y, disks[b].color);
  });
  return order;
}

}  // namespace chroma
