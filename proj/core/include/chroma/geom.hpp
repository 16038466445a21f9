#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace chroma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by circumcircle() when the three points do not span a triangle.
class CollinearError : public Error {
 public:
  CollinearError() : Error("points are collinear within tolerance") {}
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Lexicographic order on (x, y).
inline bool lex_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Every imprecise point is a closed disk of diameter 1.
inline constexpr double kDiskRadius = 0.5;

struct ColoredDisk {
  Point center;
  int color = 0;
};

/// A colored location. disk_index names the disk a realization point was
/// drawn from; precise inputs leave it empty.
struct ColoredPoint {
  Point point;
  int color = 0;
  std::optional<std::size_t> disk_index;
};

/// Absolute tolerance on distances shared by every predicate.
struct Tolerance {
  double eps = 1e-9;

  /// Throws Error unless eps is finite and positive.
  static Tolerance with_eps(double eps);
};

double dist(Point p, Point q);

/// Circle with segment pq as diameter.
Circle diametral_circle(Point p, Point q);

/// Circle through p, q and r. Throws CollinearError when the triangle area
/// is below tol.eps times its longest side.
Circle circumcircle(Point p, Point q, Point r, Tolerance tol = {});

/// Closed containment: dist(center, p) <= radius + eps.
bool contains(const Circle& c, Point p, Tolerance tol = {});

/// Moves source toward target by at most max_step.
Point pull_toward(Point source, Point target, double max_step);

}  // namespace chroma
