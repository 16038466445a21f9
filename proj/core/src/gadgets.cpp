#include "chroma/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chroma/random.hpp"

namespace chroma {

namespace {

// Clockwise perpendicular of a direction.
Point right_of(Point axis) { return {axis.y, -axis.x}; }

Point to_world(const StackGadget& s, double along_right, double along_axis) {
  return s.mid_center + along_right * right_of(s.axis) + along_axis * s.axis;
}

Realization stack_points(const StackGadget& s, double side) {
  // In the stack frame the middle point sits at (side/2, 0) and each outer
  // point lies on the ray from it through the outer center, 1/2 beyond the
  // center: (-2/5, +-27/40) scaled by side. Their distance is 5/8 + 1/2.
  Realization r;
  r.push_back({to_world(s, -0.4 * side, 27.0 / 40.0), s.disks[0].color, 0});
  r.push_back({to_world(s, 0.5 * side, 0.0), s.disks[1].color, 1});
  r.push_back({to_world(s, -0.4 * side, -27.0 / 40.0), s.disks[2].color, 2});
  return r;
}

Point farthest_point(Point center, Point from) {
  const Point d = center - from;
  const double len = norm(d);
  if (len == 0.0) return center + Point{kDiskRadius, 0.0};
  return center + (kDiskRadius / len) * d;
}

Point unit_direction(double degrees) {
  const double rad = degrees * 3.14159265358979323846 / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

}  // namespace

Instance StackGadget::instance() const {
  return Instance{{disks.begin(), disks.end()}, 2};
}

StackGadget make_stack(Point mid_center, StackPattern pattern, Point axis) {
  const double len = norm(axis);
  if (!(std::isfinite(len) && len > 0.0)) throw Error("stack axis must be a nonzero direction");
  StackGadget s;
  s.mid_center = mid_center;
  s.axis = (1.0 / len) * axis;
  s.pattern = pattern;
  const int outer = pattern == StackPattern::BRB ? kBlue : kRed;
  const int middle = pattern == StackPattern::BRB ? kRed : kBlue;
  s.disks[0] = {mid_center + kStackSpacing * s.axis, outer};
  s.disks[1] = {mid_center, middle};
  s.disks[2] = {mid_center - kStackSpacing * s.axis, outer};
  return s;
}

StackExtremes stack_extreme_realizations(const StackGadget& s) {
  return {stack_points(s, -1.0), stack_points(s, 1.0)};
}

PDeltaReport pdelta_check(std::span<const ColoredPoint> points, double delta, Tolerance tol) {
  if (!(delta > 0.0)) throw Error("delta must be positive");
  PDeltaReport report;
  report.min_cross_color_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].color == points[j].color) continue;
      const double d = dist(points[i].point, points[j].point);
      report.min_cross_color_distance = std::min(report.min_cross_color_distance, d);
      if (d < delta - tol.eps) report.violating_pairs.emplace_back(i, j);
    }
  }
  report.pass = report.violating_pairs.empty();
  return report;
}

bool stack_rigidity_probe(const StackGadget& s, std::size_t samples, std::uint64_t seed,
                          double neighborhood, double delta, Tolerance tol, Workers workers) {
  if (samples == 0) throw Error("sample count must be at least 1");
  if (!(neighborhood > 0.0)) throw Error("neighborhood must be positive");

  const StackExtremes extremes = stack_extreme_realizations(s);
  const Point left_mid = extremes.left[1].point;
  const Point right_mid = extremes.right[1].point;

  std::vector<char> refuted(std::max(1u, workers.count), 0);
  parallel_chunks(samples, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && !refuted[w]; ++i) {
      auto rng = derived_stream(seed, i);
      Realization r = center_realization(s.instance());
      const Point mid = s.disks[1].center;
      r[1].point = uniform01(rng) < 0.5 ? uniform_on_circle(mid, kDiskRadius, rng)
                                        : uniform_in_disk(mid, kDiskRadius, rng);
      for (std::size_t outer : {std::size_t{0}, std::size_t{2}}) {
        const Point c = s.disks[outer].center;
        r[outer].point = uniform01(rng) < 0.5 ? farthest_point(c, r[1].point)
                                              : uniform_in_disk(c, kDiskRadius, rng);
      }
      if (!pdelta_check(r, delta, tol).pass) continue;
      const double off = std::min(dist(r[1].point, left_mid), dist(r[1].point, right_mid));
      if (off > neighborhood) refuted[w] = 1;
    }
  });
  return std::none_of(refuted.begin(), refuted.end(), [](char c) { return c != 0; });
}

Instance ClauseGadget::instance() const {
  return Instance{{red[0], red[1], red[2], blue}, 2};
}

ClauseGadget make_clause_gadget(Point g, double corner_offset) {
  if (!(corner_offset >= 0.0)) throw Error("clause corner offset must be non-negative");
  ClauseGadget cg;
  cg.g = g;
  cg.corner_offset = corner_offset;
  const double circumradius = cg.side / std::sqrt(3.0);
  const std::array<double, 3> angles{90.0, 210.0, 330.0};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point dir = unit_direction(angles[i]);
    const double center_dist = circumradius - corner_offset;
    cg.corners[i] = g + circumradius * dir;
    cg.red[i] = {g + center_dist * dir, kRed};
    cg.t_anchor[i] = g + (center_dist + kDiskRadius) * dir;
    cg.f_anchor[i] = g + (center_dist - kDiskRadius) * dir;
  }
  cg.blue = {g, kBlue};
  return cg;
}

bool clause_feasibility(const ClauseGadget& cg, std::array<Placement, 3> choices,
                        std::size_t samples, std::uint64_t seed, Tolerance tol) {
  std::array<Point, 3> reds{};
  for (std::size_t i = 0; i < 3; ++i) {
    reds[i] = choices[i] == Placement::t ? cg.t_anchor[i] : cg.f_anchor[i];
  }
  const double need = kSeparation - tol.eps;
  auto clear_of_reds = [&](Point q) {
    return std::all_of(reds.begin(), reds.end(), [&](Point r) { return dist(q, r) >= need; });
  };

  constexpr double kPitch = 1e-3;
  const long steps = static_cast<long>(std::ceil(kDiskRadius / kPitch));
  const Circle blue{cg.blue.center, kDiskRadius};
  for (long i = -steps; i <= steps; ++i) {
    for (long j = -steps; j <= steps; ++j) {
      const Point q = cg.blue.center + Point{static_cast<double>(i) * kPitch,
                                             static_cast<double>(j) * kPitch};
      if (contains(blue, q, tol) && clear_of_reds(q)) return true;
    }
  }
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = derived_stream(seed, i);
    const Point q = uniform01(rng) < 0.5 ? uniform_on_circle(blue.center, kDiskRadius, rng)
                                         : uniform_in_disk(blue.center, kDiskRadius, rng);
    if (clear_of_reds(q)) return true;
  }
  return false;
}

double tightness_pitch(double epsilon) { return 2.0 * std::sqrt(2.0) * epsilon; }

Instance make_tightness_instance(double epsilon, int far_blue) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  if (far_blue < 0) throw Error("far blue count must be non-negative");
  const double pitch = tightness_pitch(epsilon);
  const double half_width = kDiskRadius + pitch;
  const long m = static_cast<long>(std::ceil(half_width / pitch));

  Instance inst;
  inst.k = 2;
  inst.disks.push_back({{0.0, 0.0}, kBlue});
  for (long i = -m; i <= m; ++i) {
    for (long j = -m; j <= m; ++j) {
      const Point c{static_cast<double>(i) * pitch, static_cast<double>(j) * pitch};
      if (std::abs(c.x) <= half_width + 1e-12 && std::abs(c.y) <= half_width + 1e-12) {
        inst.disks.push_back({c, kRed});
      }
    }
  }
  for (int i = 0; i < far_blue; ++i) {
    inst.disks.push_back({{100.0 + 2.0 * i, 0.0}, kBlue});
  }
  return inst;
}

}  // namespace chroma
