#pragma once

// Internal helpers shared by the diagram sources: integer division, segment predicates and the
// crossings of one fundamental path with the alpha lines.

#include "oneone/diagram.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace oneone::geom {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

struct Segment {
  Point a;
  Point b;
  double min_x, max_x, min_y, max_y;

  Segment(Point p, Point q) : a(std::move(p)), b(std::move(q)) {
    double ax = a.x.get_d(), bx = b.x.get_d(), ay = a.y.get_d(), by = b.y.get_d();
    min_x = std::min(ax, bx);
    max_x = std::max(ax, bx);
    min_y = std::min(ay, by);
    max_y = std::max(ay, by);
  }

  Segment translated(long vx, long vy) const {
    Point v{Rational(vx), Rational(vy)};
    return Segment(a + v, b + v);
  }
};

/// Closed segments share at least one point.
bool segments_intersect(const Segment& s, const Segment& t);

/// The closed segment contains a point of base + Z^2.
bool segment_hits_lattice(const Segment& s, const Point& base);

/// A crossing of the fundamental path with the line y = line + 1/2.
struct BaseCrossing {
  long segment;  ///< the crossing lies on the segment from vertex(segment) to vertex(segment + 1)
  Rational tau;  ///< in (0, 1)
  long line;
  Rational x;
  int sign;  ///< +1 when the path moves upward
};

/// Crossings of vertices 0..N of the lift with the alpha lines, sorted along the path.
std::vector<BaseCrossing> base_crossings(const Diagram& d);

/// Sum of winding numbers of the loop around every point of base + Z^2.
long enclosed_translates(std::span<const Point> loop, const Point& base);

}  // namespace oneone::geom
