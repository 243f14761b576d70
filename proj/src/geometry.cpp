#include "geometry.hpp"

namespace oneone::geom {

namespace {

bool within_box(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
  if (s.max_x + 1e-9 < t.min_x || t.max_x + 1e-9 < s.min_x || s.max_y + 1e-9 < t.min_y ||
      t.max_y + 1e-9 < s.min_y) {
    return false;
  }
  int o1 = sign(orient(s.a, s.b, t.a));
  int o2 = sign(orient(s.a, s.b, t.b));
  int o3 = sign(orient(t.a, t.b, s.a));
  int o4 = sign(orient(t.a, t.b, s.b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(s.a, s.b, t.a)) return true;
  if (o2 == 0 && within_box(s.a, s.b, t.b)) return true;
  if (o3 == 0 && within_box(t.a, t.b, s.a)) return true;
  if (o4 == 0 && within_box(t.a, t.b, s.b)) return true;
  return false;
}

bool segment_hits_lattice(const Segment& s, const Point& base) {
  Point p = s.a - base;
  Point q = s.b - base;
  Rational dx = q.x - p.x;
  Rational dy = q.y - p.y;
  // Walk the integer abscissae (or ordinates for steep segments) and test the other coordinate.
  if (abs(dx) >= abs(dy)) {
    Integer lo = ceil(std::min(p.x, q.x));
    Integer hi = floor(std::max(p.x, q.x));
    for (Integer x = lo; x <= hi; ++x) {
      Rational y = p.y + (Rational(x) - p.x) * dy / dx;
      if (y.get_den() == 1) return true;
    }
  } else {
    Integer lo = ceil(std::min(p.y, q.y));
    Integer hi = floor(std::max(p.y, q.y));
    for (Integer y = lo; y <= hi; ++y) {
      Rational x = p.x + (Rational(y) - p.y) * dx / dy;
      if (x.get_den() == 1) return true;
    }
  }
  return false;
}

std::vector<BaseCrossing> base_crossings(const Diagram& d) {
  std::vector<BaseCrossing> out;
  const Rational half(1, 2);
  const long n = d.num_vertices();
  for (long k = 0; k < n; ++k) {
    Point a = d.vertex(k);
    Point b = d.vertex(k + 1);
    if (a.y == b.y) continue;
    const int dir = a.y < b.y ? 1 : -1;
    // Lines y = j + 1/2 strictly between the endpoint heights.
    long lo = to_long(ceil(std::min(a.y, b.y) - half));
    long hi = to_long(floor(std::max(a.y, b.y) - half));
    std::vector<BaseCrossing> here;
    for (long j = lo; j <= hi; ++j) {
      Rational y = Rational(j) + half;
      Rational tau = (y - a.y) / (b.y - a.y);
      here.push_back({k, tau, j, a.x + tau * (b.x - a.x), dir});
    }
    if (dir < 0) std::reverse(here.begin(), here.end());
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

long enclosed_translates(std::span<const Point> loop, const Point& base) {
  if (loop.empty()) return 0;
  Rational min_x = loop[0].x, max_x = loop[0].x, min_y = loop[0].y, max_y = loop[0].y;
  for (const auto& p : loop) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  long x_lo = to_long(ceil(min_x - base.x));
  long x_hi = to_long(floor(max_x - base.x));
  long y_lo = to_long(ceil(min_y - base.y));
  long y_hi = to_long(floor(max_y - base.y));
  long total = 0;
  for (long i = x_lo; i <= x_hi; ++i) {
    for (long j = y_lo; j <= y_hi; ++j) {
      total += winding_number(loop, Point{base.x + i, base.y + j});
    }
  }
  return total;
}

}  // namespace oneone::geom
