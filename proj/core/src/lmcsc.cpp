#include "chroma/lmcsc.hpp"

#include <cmath>
#include <limits>

#include "chroma/random.hpp"

namespace chroma {

namespace {

constexpr double kQuarterSqrt2 = 0.35355339059327376220;  // sqrt(2)/4
constexpr double kGridBranchThreshold = 0.25;

Point lattice_point(Point anchor, LatticeIndex idx) {
  const Point u = grid_basis_u();
  const Point v = grid_basis_v();
  return anchor + static_cast<double>(idx.a) * u + static_cast<double>(idx.b) * v;
}

bool lex_greater(LatticeIndex x, LatticeIndex y) {
  return x.a > y.a || (x.a == y.a && x.b > y.b);
}

}  // namespace

Point grid_basis_u() { return {kQuarterSqrt2, kQuarterSqrt2}; }
Point grid_basis_v() { return {kQuarterSqrt2, -kQuarterSqrt2}; }

std::string_view to_string(Branch b) { return b == Branch::centers ? "centers" : "grid"; }

GridRealization grid_realization(const Instance& inst, int color_a, int color_b, Point anchor,
                                 Tolerance tol) {
  if (color_a == color_b) throw Error("snapped colors must differ");
  bool has_a = false;
  bool has_b = false;
  for (const auto& d : inst.disks) {
    has_a = has_a || d.color == color_a;
    has_b = has_b || d.color == color_b;
  }
  if (!has_a) throw ColorAbsent(color_a);
  if (!has_b) throw ColorAbsent(color_b);

  GridRealization out;
  out.color_a = color_a;
  out.color_b = color_b;
  out.anchor = anchor;
  out.u = grid_basis_u();
  out.v = grid_basis_v();
  out.realization = center_realization(inst);
  out.lattice.assign(inst.disks.size(), std::nullopt);

  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    const ColoredDisk& disk = inst.disks[i];
    if (disk.color != color_a && disk.color != color_b) continue;

    // Cell coordinates in the lattice frame; |u| = |v| = 1/2. floor() puts
    // centers on cell edges into the cell with the larger index.
    const Point rel = disk.center - anchor;
    const double s = dot(rel, out.u) * 4.0;
    const double t = dot(rel, out.v) * 4.0;
    const auto a = static_cast<long>(std::floor(s));
    const auto b = static_cast<long>(std::floor(t));

    const long parity = disk.color == color_a ? 0 : 1;
    const bool base_matches = (((a + b) % 2) + 2) % 2 == parity;
    const LatticeIndex first = base_matches ? LatticeIndex{a, b} : LatticeIndex{a + 1, b};
    const LatticeIndex second = base_matches ? LatticeIndex{a + 1, b + 1} : LatticeIndex{a, b + 1};

    const Circle region{disk.center, kDiskRadius};
    const bool first_in = contains(region, lattice_point(anchor, first), tol);
    const bool second_in = contains(region, lattice_point(anchor, second), tol);
    LatticeIndex chosen;
    if (first_in && second_in) {
      chosen = lex_greater(first, second) ? first : second;
    } else if (first_in || second_in) {
      chosen = first_in ? first : second;
    } else {
      // Only reachable through rounding; keep the nearer corner.
      chosen = dist(disk.center, lattice_point(anchor, first)) <=
                       dist(disk.center, lattice_point(anchor, second))
                   ? first
                   : second;
    }
    out.realization[i].point = lattice_point(anchor, chosen);
    out.lattice[i] = chosen;
  }
  return out;
}

double upper_bound(const Instance& inst, Tolerance tol) {
  validate(inst);
  if (inst.k == 1) return 0.0;
  return mcsc_exact(centers(inst), tol).circle.radius + kDiskRadius;
}

LmcscResult lmcsc_approx(const Instance& inst, Tolerance tol, Workers workers, Point anchor) {
  validate(inst);
  const McscResult on_centers = mcsc_exact(centers(inst), tol, workers);
  const double r_c = on_centers.circle.radius;

  LmcscResult result;
  result.certificate.r_c = r_c;
  if (inst.k == 1 || r_c >= kGridBranchThreshold) {
    result.realization = center_realization(inst);
    result.circle = on_centers.circle;
    result.certificate.branch = Branch::centers;
  } else {
    GridRealization grid = grid_realization(inst, 0, 1, anchor, tol);
    result.circle = mcsc_exact(as_point_set(grid.realization, inst.k), tol, workers).circle;
    result.realization = std::move(grid.realization);
    result.certificate.branch = Branch::grid;
  }

  result.certificate.achieved = result.circle.radius;
  if (inst.k == 1) {
    result.certificate.upper = 0.0;
    result.certificate.factor = 1.0;
  } else {
    result.certificate.upper = r_c + kDiskRadius;
    result.certificate.factor = result.certificate.achieved / result.certificate.upper;
  }
  return result;
}

bool is_color_disjoint(const Instance& inst, Tolerance tol) {
  const auto& disks = inst.disks;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      if (disks[i].color == disks[j].color) continue;
      if (dist(disks[i].center, disks[j].center) <= 2.0 * kDiskRadius + tol.eps) return false;
    }
  }
  return true;
}

Realization sample_realization(const Instance& inst, std::mt19937_64& rng) {
  Realization r = center_realization(inst);
  for (auto& p : r) {
    const Point c = p.point;
    p.point = uniform01(rng) < 0.5 ? uniform_on_circle(c, kDiskRadius, rng)
                                   : uniform_in_disk(c, kDiskRadius, rng);
  }
  return r;
}

SamplingResult lmcsc_sampling_oracle(const Instance& inst, std::size_t samples,
                                     std::uint64_t seed, Tolerance tol, Workers workers) {
  validate(inst);
  if (samples == 0) throw Error("sample count must be at least 1");

  std::vector<SamplingResult> per_worker(std::max(1u, workers.count));
  std::vector<char> filled(per_worker.size(), 0);
  parallel_chunks(samples, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = derived_stream(seed, i);
      Realization r = sample_realization(inst, rng);
      McscResult m = mcsc_exact(as_point_set(r, inst.k), tol);
      if (!filled[w] || m.circle.radius > per_worker[w].radius) {
        per_worker[w] = SamplingResult{std::move(r), std::move(m), 0.0, i};
        per_worker[w].radius = per_worker[w].mcsc.circle.radius;
        filled[w] = 1;
      }
    }
  });

  std::size_t best = 0;
  for (std::size_t w = 1; w < per_worker.size(); ++w) {
    if (!filled[w]) continue;
    const auto& cand = per_worker[w];
    const auto& cur = per_worker[best];
    if (cand.radius > cur.radius || (cand.radius == cur.radius && cand.best_sample < cur.best_sample)) {
      best = w;
    }
  }
  return std::move(per_worker[best]);
}

}  // namespace chroma
