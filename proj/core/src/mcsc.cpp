#include "chroma/mcsc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>

namespace chroma {

namespace {

struct Key {
  double radius = std::numeric_limits<double>::infinity();
  double cx = 0.0;
  double cy = 0.0;

  bool operator<(const Key& o) const {
    return std::tie(radius, cx, cy) < std::tie(o.radius, o.cx, o.cy);
  }
};

struct Candidate {
  Key key;
  std::array<std::size_t, 3> ids{};
  std::size_t size = 0;
};

double sq_dist(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool canonical_less(const ColoredPoint& a, const ColoredPoint& b) {
  return std::tie(a.point.x, a.point.y, a.color, a.disk_index) <
         std::tie(b.point.x, b.point.y, b.color, b.disk_index);
}

// Points grouped by color, in canonical order.
class ColorIndex {
 public:
  ColorIndex(const std::vector<ColoredPoint>& pts, int k) : by_color_(k) {
    for (const auto& p : pts) by_color_[p.color].push_back(p.point);
  }

  bool covers(Point center, double radius, double eps) const {
    const double reach = radius + eps;
    const double reach2 = reach * reach;
    for (const auto& group : by_color_) {
      bool hit = false;
      for (const auto& q : group) {
        if (sq_dist(center, q) <= reach2) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }

  double spanning_radius_at(Point x) const {
    double worst = 0.0;
    for (const auto& group : by_color_) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : group) best = std::min(best, sq_dist(x, q));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  }

 private:
  std::vector<std::vector<Point>> by_color_;
};

}  // namespace

void validate(const PrecisePointSet& ps) {
  if (ps.points.empty()) throw EmptyInput();
  if (ps.k < 1) throw Error("color count must be at least 1");
  std::vector<bool> seen(ps.k, false);
  for (const auto& p : ps.points) {
    if (!is_finite(p.point)) throw Error("point coordinates must be finite");
    if (p.color < 0 || p.color >= ps.k) {
      throw Error("color id " + std::to_string(p.color) + " outside [0, " +
                  std::to_string(ps.k) + ")");
    }
    seen[p.color] = true;
  }
  for (int c = 0; c < ps.k; ++c) {
    if (!seen[c]) throw MissingColor(c);
  }
}

bool feasible(const Circle& c, const PrecisePointSet& ps, Tolerance tol) {
  if (ps.k < 1) return true;
  std::vector<bool> hit(ps.k, false);
  int remaining = ps.k;
  const double reach = c.radius + tol.eps;
  for (const auto& p : ps.points) {
    if (p.color < 0 || p.color >= ps.k || hit[p.color]) continue;
    if (sq_dist(c.center, p.point) <= reach * reach) {
      hit[p.color] = true;
      if (--remaining == 0) return true;
    }
  }
  return false;
}

double spanning_radius_at(Point x, const PrecisePointSet& ps) {
  return ColorIndex(ps.points, ps.k).spanning_radius_at(x);
}

McscResult mcsc_exact(const PrecisePointSet& ps, Tolerance tol, Workers workers) {
  validate(ps);

  std::vector<ColoredPoint> pts = ps.points;
  std::sort(pts.begin(), pts.end(), canonical_less);
  // Repeated points of one color add no candidates.
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const ColoredPoint& a, const ColoredPoint& b) {
                          return a.point == b.point && a.color == b.color;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  const ColorIndex index(pts, ps.k);

  // Any point's spanning radius is achievable, so the optimum is at most
  // the smallest of them; the rarest color's points suffice for a bound.
  std::vector<std::size_t> color_size(ps.k, 0);
  for (const auto& p : pts) ++color_size[p.color];
  const int rarest = static_cast<int>(
      std::min_element(color_size.begin(), color_size.end()) - color_size.begin());
  double upper = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    if (p.color == rarest) upper = std::min(upper, index.spanning_radius_at(p.point));
  }
  const double bound = upper + tol.eps;

  // Bichromatic neighbors close enough to share a candidate circle. Points
  // are sorted by x, so the scan stops once the x gap alone is too large.
  std::vector<std::vector<std::size_t>> near(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && pts[j].point.x - pts[i].point.x <= 2.0 * bound; ++j) {
      if (pts[i].color != pts[j].color && dist(pts[i].point, pts[j].point) <= 2.0 * bound) {
        near[i].push_back(j);
      }
    }
  }

  std::vector<Candidate> best_per_worker(std::max(1u, workers.count));
  parallel_chunks(n, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    Candidate best;
    auto offer = [&](const Circle& c, std::array<std::size_t, 3> ids, std::size_t size) {
      const Key key{c.radius, c.center.x, c.center.y};
      if (c.radius > bound || !(key < best.key)) return;
      if (!index.covers(c.center, c.radius, tol.eps)) return;
      best = Candidate{key, ids, size};
    };

    for (std::size_t i = begin; i < end; ++i) {
      const Point pi = pts[i].point;
      offer(Circle{pi, 0.0}, {i, 0, 0}, 1);
      for (std::size_t a = 0; a < near[i].size(); ++a) {
        const std::size_t j = near[i][a];
        const Point pj = pts[j].point;
        offer(diametral_circle(pi, pj), {i, j, 0}, 2);
        if (ps.k < 3) continue;
        const double dij = dist(pi, pj);
        for (std::size_t b = a + 1; b < near[i].size(); ++b) {
          const double reach = 2.0 * std::min(bound, best.key.radius + tol.eps);
          if (dij > reach) break;
          const std::size_t l = near[i][b];
          if (pts[l].color == pts[j].color) continue;
          const Point pl = pts[l].point;
          if (dist(pi, pl) > reach || dist(pj, pl) > reach) continue;
          try {
            offer(circumcircle(pi, pj, pl, tol), {i, j, l}, 3);
          } catch (const CollinearError&) {
            // Degenerate triple; its enclosing circle is a diametral pair.
          }
        }
      }
    }
    best_per_worker[w] = best;
  });

  Candidate best;
  for (const auto& c : best_per_worker) {
    if (c.size > 0 && c.key < best.key) best = c;
  }
  if (best.size == 0) {
    // Unreachable for valid input: the optimum circle is always a candidate.
    throw Error("no feasible candidate circle found");
  }

  McscResult result;
  result.circle = Circle{{best.key.cx, best.key.cy}, best.key.radius};
  for (std::size_t s = 0; s < best.size; ++s) result.witness.push_back(pts[best.ids[s]]);

  result.per_color_cover.resize(ps.k);
  std::vector<double> nearest(ps.k, std::numeric_limits<double>::infinity());
  for (const auto& p : pts) {
    const double d = dist(result.circle.center, p.point);
    if (d < nearest[p.color]) {
      nearest[p.color] = d;
      result.per_color_cover[p.color] = p;
    }
  }
  return result;
}

Bracket mcsc_grid_oracle(const PrecisePointSet& ps, double h) {
  validate(ps);
  if (!(h > 0.0)) throw Error("grid resolution must be positive");

  const ColorIndex index(ps.points, ps.k);
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& p : ps.points) {
    min_x = std::min(min_x, p.point.x);
    min_y = std::min(min_y, p.point.y);
    max_x = std::max(max_x, p.point.x);
    max_y = std::max(max_y, p.point.y);
  }
  const double diameter = std::hypot(max_x - min_x, max_y - min_y);
  const double x0 = min_x - diameter;
  const double y0 = min_y - diameter;
  const auto nx = static_cast<long>(std::ceil((max_x - min_x + 2.0 * diameter) / h));
  const auto ny = static_cast<long>(std::ceil((max_y - min_y + 2.0 * diameter) / h));

  auto value = [&](long i, long j) {
    return index.spanning_radius_at({x0 + static_cast<double>(i) * h, y0 + static_cast<double>(j) * h});
  };

  struct Block {
    long i0, i1, j0, j1;
  };
  double best = std::numeric_limits<double>::infinity();
  std::vector<Block> stack{{0, nx, 0, ny}};
  while (!stack.empty()) {
    const Block b = stack.back();
    stack.pop_back();
    const long ic = (b.i0 + b.i1) / 2;
    const long jc = (b.j0 + b.j1) / 2;
    const double f = value(ic, jc);
    best = std::min(best, f);
    const double reach =
        h * std::hypot(static_cast<double>(std::max(ic - b.i0, b.i1 - ic)),
                       static_cast<double>(std::max(jc - b.j0, b.j1 - jc)));
    if (b.i0 == b.i1 && b.j0 == b.j1) continue;
    // Slack covers rounding in the Lipschitz bound.
    if (f - reach > best + 1e-12 * (1.0 + best)) continue;
    if (b.i1 - b.i0 >= b.j1 - b.j0) {
      stack.push_back({b.i0, ic, b.j0, b.j1});
      if (ic + 1 <= b.i1) stack.push_back({ic + 1, b.i1, b.j0, b.j1});
    } else {
      stack.push_back({b.i0, b.i1, b.j0, jc});
      if (jc + 1 <= b.j1) stack.push_back({b.i0, b.i1, jc + 1, b.j1});
    }
  }
  return {best - h * std::sqrt(2.0) / 2.0, best};
}

}  // namespace chroma
