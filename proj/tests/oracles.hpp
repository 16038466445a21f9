#pragma once

// Test-only reference implementations. Nothing here calls into the
// candidate enumeration of mcsc_exact.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "chroma/instance.hpp"

namespace chroma::testing {

inline bool covers_all(double cx, double cy, double r, const PrecisePointSet& ps, double eps) {
  std::set<int> hit;
  for (const auto& p : ps.points) {
    if (std::hypot(p.point.x - cx, p.point.y - cy) <= r + eps) hit.insert(p.color);
  }
  return static_cast<int>(hit.size()) == ps.k;
}

/// Smallest feasible circle among all single points, all pairs and all
/// non-collinear triples regardless of color. O(n^4).
inline double brute_force_mcsc_radius(const PrecisePointSet& ps, double eps = 1e-9) {
  const auto& p = ps.points;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double cx, double cy, double r) {
    if (r < best && covers_all(cx, cy, r, ps, eps)) best = r;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    consider(p[i].point.x, p[i].point.y, 0.0);
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Point a = p[i].point;
      const Point b = p[j].point;
      consider((a.x + b.x) / 2, (a.y + b.y) / 2, std::hypot(a.x - b.x, a.y - b.y) / 2);
      for (std::size_t l = j + 1; l < p.size(); ++l) {
        const Point c = p[l].point;
        const double bx = b.x - a.x, by = b.y - a.y, qx = c.x - a.x, qy = c.y - a.y;
        const double d = 2 * (bx * qy - by * qx);
        if (std::abs(d) < 1e-12) continue;
        const double ux = (qy * (bx * bx + by * by) - by * (qx * qx + qy * qy)) / d;
        const double uy = (bx * (qx * qx + qy * qy) - qx * (bx * bx + by * by)) / d;
        consider(a.x + ux, a.y + uy, std::hypot(ux, uy));
      }
    }
  }
  return best;
}

/// max over colors of the nearest same-colored distance, evaluated directly.
inline double spanning_radius_direct(double x, double y, const PrecisePointSet& ps) {
  std::vector<double> nearest(ps.k, std::numeric_limits<double>::infinity());
  for (const auto& p : ps.points) {
    nearest[p.color] = std::min(nearest[p.color], std::hypot(p.point.x - x, p.point.y - y));
  }
  return *std::max_element(nearest.begin(), nearest.end());
}

/// Random precise point set with every color present.
inline PrecisePointSet random_points(std::mt19937_64& rng, int n, int k, double width) {
  std::uniform_real_distribution<double> coord(0.0, width);
  std::uniform_int_distribution<int> color(0, k - 1);
  PrecisePointSet ps;
  ps.k = k;
  for (int i = 0; i < n; ++i) {
    ps.points.push_back({{coord(rng), coord(rng)}, i < k ? i : color(rng), std::nullopt});
  }
  return ps;
}

inline Instance random_instance(std::mt19937_64& rng, int n, int k, double width) {
  std::uniform_real_distribution<double> coord(0.0, width);
  std::uniform_int_distribution<int> color(0, k - 1);
  Instance inst;
  inst.k = k;
  for (int i = 0; i < n; ++i) inst.disks.push_back({{coord(rng), coord(rng)}, i < k ? i : color(rng)});
  return inst;
}

/// Random realization, uniform in each disk (independent of the library sampler).
inline Realization random_realization(const Instance& inst, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Realization r;
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    const double rad = kDiskRadius * std::sqrt(u(rng));
    const double th = 2 * M_PI * u(rng);
    const Point c = inst.disks[i].center;
    r.push_back({{c.x + rad * std::cos(th), c.y + rad * std::sin(th)}, inst.disks[i].color, i});
  }
  return r;
}

template <class T>
std::vector<T> shuffled(std::vector<T> v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace chroma::testing
