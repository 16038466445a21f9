#include "chroma/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

namespace chroma::svg {

namespace {

constexpr std::array<const char*, 8> kPalette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const char* color_of(int c) { return kPalette[static_cast<std::size_t>(c) % kPalette.size()]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Point c, double r) {
    min_x = std::min(min_x, c.x - r);
    min_y = std::min(min_y, c.y - r);
    max_x = std::max(max_x, c.x + r);
    max_y = std::max(max_y, c.y + r);
  }
};

}  // namespace

std::string render(std::span<const ColoredDisk> disks, std::span<const ColoredPoint> points,
                   const Circle& solution) {
  Box box;
  for (const auto& d : disks) box.add(d.center, kDiskRadius);
  for (const auto& p : points) box.add(p.point, 0.0);
  box.add(solution.center, solution.radius);

  const double width = std::max(box.max_x - box.min_x, 1e-6);
  const double height = std::max(box.max_y - box.min_y, 1e-6);
  const double margin = 0.1 * std::max(width, height);
  const double vx = box.min_x - margin;
  const double vy = -(box.max_y + margin);
  const double vw = width + 2.0 * margin;
  const double vh = height + 2.0 * margin;
  const double stroke = 0.004 * std::max(vw, vh);
  const double marker = 2.5 * stroke;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' '
      << num(vw) << ' ' << num(vh) << "\" width=\"800\" height=\"" << num(800.0 * vh / vw)
      << "\">\n";
  out << "  <g id=\"disks\" fill-opacity=\"0.15\" stroke-width=\"" << num(stroke) << "\">\n";
  for (const auto& d : disks) {
    out << "    <circle cx=\"" << num(d.center.x) << "\" cy=\"" << num(-d.center.y) << "\" r=\""
        << num(kDiskRadius) << "\" fill=\"" << color_of(d.color) << "\" stroke=\""
        << color_of(d.color) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g id=\"solution\">\n"
      << "    <circle cx=\"" << num(solution.center.x) << "\" cy=\"" << num(-solution.center.y)
      << "\" r=\"" << num(solution.radius) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
      << num(stroke) << "\" stroke-dasharray=\"" << num(3 * stroke) << "\"/>\n"
      << "  </g>\n";
  out << "  <g id=\"points\">\n";
  for (const auto& p : points) {
    out << "    <rect x=\"" << num(p.point.x - marker / 2) << "\" y=\""
        << num(-p.point.y - marker / 2) << "\" width=\"" << num(marker) << "\" height=\""
        << num(marker) << "\" fill=\"" << color_of(p.color) << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace chroma::svg
