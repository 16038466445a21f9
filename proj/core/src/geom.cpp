#include "chroma/geom.hpp"

#include <algorithm>

namespace chroma {

Tolerance Tolerance::with_eps(double eps) {
  if (!(std::isfinite(eps) && eps > 0.0)) {
    throw Error("tolerance must be finite and positive, got " + std::to_string(eps));
  }
  return Tolerance{eps};
}

double dist(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

Circle diametral_circle(Point p, Point q) {
  return {{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}, 0.5 * dist(p, q)};
}

Circle circumcircle(Point p, Point q, Point r, Tolerance tol) {
  const Point b = q - p;
  const Point c = r - p;
  const double twice_area = cross(b, c);
  const double longest = std::max({norm(b), norm(c), dist(q, r)});
  if (std::abs(0.5 * twice_area) < tol.eps * longest || longest == 0.0) {
    throw CollinearError();
  }
  const double bb = dot(b, b);
  const double cc = dot(c, c);
  const double d = 2.0 * twice_area;
  const Point offset{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
  const Point center = p + offset;
  // Largest of the three distances keeps every defining point inside.
  const double radius = std::max({norm(offset), dist(center, q), dist(center, r)});
  return {center, radius};
}

bool contains(const Circle& c, Point p, Tolerance tol) {
  return dist(c.center, p) <= c.radius + tol.eps;
}

Point pull_toward(Point source, Point target, double max_step) {
  const double d = dist(source, target);
  if (d <= max_step) {
    return target;
  }
  const double t = max_step / d;
  return {source.x + t * (target.x - source.x), source.y + t * (target.y - source.y)};
}

}  // namespace chroma
