#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "contourgraph/common.hpp"

namespace cng {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Ordered boundary of a 2-D shape. The point sequence is implicitly closed:
/// the segment from points.back() to points.front() is part of the outline
/// and index arithmetic is modulo size().
struct Contour {
  std::vector<Point> points;
  std::string label;  // empty = unlabeled
  std::string id;     // empty = anonymous

  std::size_t size() const { return points.size(); }

  const Point& at_wrapped(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(points.size());
    return points[static_cast<std::size_t>(((i % n) + n) % n)];
  }
};

inline Point centroid(const Contour& c) {
  require(!c.points.empty(), "centroid: empty contour");
  Point m;
  for (const Point& p : c.points) {
    m.x += p.x;
    m.y += p.y;
  }
  m.x /= static_cast<double>(c.size());
  m.y /= static_cast<double>(c.size());
  return m;
}

/// Length of the closed polyline through the contour points.
inline double perimeter(const Contour& c) {
  const std::size_t n = c.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += distance(c.points[i], c.points[(i + 1) % n]);
  }
  return total;
}

/// Checks the contour invariants: at least 3 points and no two cyclically
/// consecutive points identical. Throws std::invalid_argument on violation.
inline void validate_contour(const Contour& c) {
  require(c.size() >= 3, "contour: needs at least 3 points, got " +
                             std::to_string(c.size()));
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = c.points[i];
    const Point& b = c.points[(i + 1) % n];
    require(a.x != b.x || a.y != b.y,
            "contour: consecutive duplicate point at index " + std::to_string(i));
  }
}

}  // namespace cng
