#ifndef PIXREC_GEOMETRY_HPP
#define PIXREC_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <vector>

namespace pixrec {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::sqrt(norm2(p)); }
inline double dist(Point a, Point b) { return norm(a - b); }

// Axis-aligned closed box.
struct Box {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  bool contains(Point p) const {
    return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
  }
  Box expanded(double r) const { return {x0 - r, y0 - r, x1 + r, y1 + r}; }
};

inline Box box_union(const Box& a, const Box& b) {
  return {std::min(a.x0, b.x0), std::min(a.y0, b.y0),
          std::max(a.x1, b.x1), std::max(a.y1, b.y1)};
}

// Squared distance from p to the closed box (0 when inside).
inline double box_dist2(const Box& b, Point p) {
  double dx = std::max({b.x0 - p.x, 0.0, p.x - b.x1});
  double dy = std::max({b.y0 - p.y, 0.0, p.y - b.y1});
  return dx * dx + dy * dy;
}

// Squared distance from p to the farthest corner of the box.
inline double box_maxdist2(const Box& b, Point p) {
  double dx = std::max(std::abs(p.x - b.x0), std::abs(p.x - b.x1));
  double dy = std::max(std::abs(p.y - b.y0), std::abs(p.y - b.y1));
  return dx * dx + dy * dy;
}

// Closed segment vs closed box, exact separating-axis test.
inline bool segment_meets_box(Point p, Point q, const Box& b) {
  if (std::max(p.x, q.x) < b.x0 || std::min(p.x, q.x) > b.x1 ||
      std::max(p.y, q.y) < b.y0 || std::min(p.y, q.y) > b.y1)
    return false;
  // Remaining axis: the segment normal.
  Point d = q - p;
  double c00 = cross(d, Point{b.x0, b.y0} - p);
  double c01 = cross(d, Point{b.x0, b.y1} - p);
  double c10 = cross(d, Point{b.x1, b.y0} - p);
  double c11 = cross(d, Point{b.x1, b.y1} - p);
  double lo = std::min({c00, c01, c10, c11});
  double hi = std::max({c00, c01, c10, c11});
  return lo <= 0.0 && hi >= 0.0;
}

// Convex polygon (CCW) vs closed box, exact separating-axis test.
bool convex_polygon_meets_box(const std::vector<Point>& poly, const Box& b);

inline double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

}  // namespace pixrec

#endif
