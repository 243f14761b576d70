#pragma once

// Brute-force oracles: plain enumeration with no cleverness, for cross-checking the library.

#include "oneone/diagram.hpp"
#include "oneone/lattice.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace oracle {

using oneone::Integer;
using oneone::Point;
using oneone::Rational;

inline Integer floor_q(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// The sequence {lo, hi} plus every fraction strictly between with denominator <= max_den,
// found by trying every numerator for every denominator; returns the neighbours around s.
inline std::pair<Rational, Rational> farey_gap(const Rational& lo, const Rational& hi, const Rational& s,
                                               long max_den) {
  std::vector<Rational> seq{lo, hi};
  for (long den = 1; den <= max_den; ++den) {
    Integer first = floor_q(lo * den);
    Integer last = floor_q(hi * den) + 1;
    for (Integer num = first; num <= last; ++num) {
      Rational f(num, den);
      f.canonicalize();
      if (lo < f && f < hi) seq.push_back(f);
    }
  }
  std::sort(seq.begin(), seq.end());
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] <= s && s <= seq[i + 1]) return {seq[i], seq[i + 1]};
  }
  return {lo, hi};
}

// Lattice points in the closed triangle 0, v, w, counted by scanning the bounding box.
inline long triangle_lattice_points(long vx, long vy, long wx, long wy) {
  auto cross = [](long ax, long ay, long bx, long by) { return ax * by - ay * bx; };
  const long x0 = std::min({0L, vx, wx}), x1 = std::max({0L, vx, wx});
  const long y0 = std::min({0L, vy, wy}), y1 = std::max({0L, vy, wy});
  const long orient = cross(vx, vy, wx, wy) > 0 ? 1 : -1;
  long count = 0;
  for (long x = x0; x <= x1; ++x) {
    for (long y = y0; y <= y1; ++y) {
      const long a = orient * cross(vx, vy, x, y);
      const long b = orient * cross(wx - vx, wy - vy, x - vx, y - vy);
      const long c = orient * cross(-wx, -wy, x - wx, y - wy);
      if (a >= 0 && b >= 0 && c >= 0) ++count;
    }
  }
  return count;
}

// Crossings of the projected beta with alpha, as (x mod 1, upward?) pairs, found by walking every
// segment of the path and every horizontal line y = k + 1/2 it spans.
struct BruteCrossing {
  Rational x;
  bool upward;
};

inline std::vector<BruteCrossing> crossings(const oneone::Diagram& d) {
  std::vector<Point> path = d.beta();
  Point last = path.front();
  last.x += d.offset().x;
  last.y += d.offset().y;
  path.push_back(last);
  std::vector<BruteCrossing> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Point& p = path[i];
    const Point& q = path[i + 1];
    const Rational ylo = std::min(p.y, q.y), yhi = std::max(p.y, q.y);
    for (Integer k = floor_q(ylo) - 1; k <= floor_q(yhi) + 1; ++k) {
      Rational level = Rational(k) + Rational(1, 2);
      if (!(ylo < level && level < yhi)) continue;
      Rational x = p.x + (q.x - p.x) * (level - p.y) / (q.y - p.y);
      x -= floor_q(x);
      out.push_back({x, q.y > p.y});
    }
  }
  return out;
}

// Point-in-polygon by the even-odd rule on a horizontal ray; the point must be off the boundary.
inline bool inside(const std::vector<Point>& poly, const Point& p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      Rational x = a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y);
      if (p.x < x) in = !in;
    }
  }
  return in;
}

// Lifts of point + Z^2 inside a simple polygon, by scanning its bounding box.
inline long enclosed_lifts(const std::vector<Point>& poly, const Point& point) {
  Rational x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
  for (const auto& v : poly) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  long count = 0;
  for (Integer i = floor_q(x0 - point.x) - 1; i <= floor_q(x1 - point.x) + 1; ++i) {
    for (Integer j = floor_q(y0 - point.y) - 1; j <= floor_q(y1 - point.y) + 1; ++j) {
      if (inside(poly, Point{point.x + Rational(i), point.y + Rational(j)})) ++count;
    }
  }
  return count;
}

}  // namespace oracle
