// Elimination of empty bigons.
//
// A bigon is removable when its beta arc joins two crossings that are consecutive along the lift
// of beta (so the arc meets no alpha line in between), both crossings lie on the same lifted
// alpha line, no other crossing sits between them on that line, and the disk holds no basepoint.
// Such a disk is empty of everything, and an empty bigon of minimal area always has this form, so
// the diagram is reduced exactly when no removable bigon remains.
//
// Removal replaces the arc by a horizontal segment just across the alpha line, at a distance
// chosen small enough that the thin band it sweeps meets no other part of the diagram.

#include "oneone/diagram.hpp"

#include "geometry.hpp"

#include <algorithm>
#include <optional>

namespace oneone {

namespace {

const Rational kHalf(1, 2);

struct Candidate {
  long first;  // indices into the base crossing list; second may wrap to the next period
  long second;
  bool wraps;
  Rational area;
};

struct CrossingView {
  std::vector<geom::BaseCrossing> list;
  std::vector<Rational> sorted_fracs;
};

Rational lifted_parameter(const geom::BaseCrossing& c, long period, long n) {
  return Rational(period * n + c.segment) + c.tau;
}

// Number of entries of the sorted list of fractional parts lying strictly inside the arc of
// length span (< 1) that starts at start on the circle R/Z.
long count_strictly_inside(const std::vector<Rational>& fracs, const Rational& start, const Rational& span) {
  Rational end = start + span;
  auto count_open = [&](const Rational& lo, const Rational& hi) {
    auto a = std::upper_bound(fracs.begin(), fracs.end(), lo);
    auto b = std::lower_bound(fracs.begin(), fracs.end(), hi);
    return b > a ? static_cast<long>(b - a) : 0L;
  };
  if (end <= 1) return count_open(start, end);
  // Wraps past 1: (start, 1) plus [0, end - 1).
  long total = count_open(start, Rational(1));
  auto b = std::lower_bound(fracs.begin(), fracs.end(), end - 1);
  total += static_cast<long>(b - fracs.begin());
  return total;
}

std::optional<Candidate> find_removable(const Diagram& d, const CrossingView& view) {
  const auto& cs = view.list;
  const long m = static_cast<long>(cs.size());
  const long n = d.num_vertices();
  const long a = d.offset().x;
  const long b = d.offset().y;
  std::optional<Candidate> best;
  for (long i = 0; i < m; ++i) {
    const bool wraps = i + 1 == m;
    const long j = wraps ? 0 : i + 1;
    const auto& c1 = cs[static_cast<std::size_t>(i)];
    const auto& c2 = cs[static_cast<std::size_t>(j)];
    const long line2 = c2.line + (wraps ? b : 0);
    if (line2 != c1.line) continue;
    const Rational x2 = c2.x + (wraps ? a : 0);
    Rational lo = std::min(c1.x, x2);
    Rational span = abs(c1.x - x2);
    if (span >= 1) continue;
    if (count_strictly_inside(view.sorted_fracs, frac(lo), span) != 0) continue;

    Rational g1 = lifted_parameter(c1, 0, n);
    Rational g2 = lifted_parameter(c2, wraps ? 1 : 0, n);
    auto loop = d.arc(g1, g2);
    if (geom::enclosed_translates(loop, Point{0, 0}) != 0) continue;
    if (geom::enclosed_translates(loop, d.w()) != 0) continue;
    Rational area = abs(signed_area(loop));
    if (!best || area < best->area) best = Candidate{i, j, wraps, area};
  }
  return best;
}

CrossingView view_of(const Diagram& d) {
  CrossingView v;
  v.list = geom::base_crossings(d);
  v.sorted_fracs.reserve(v.list.size());
  for (const auto& c : v.list) v.sorted_fracs.push_back(frac(c.x));
  std::sort(v.sorted_fracs.begin(), v.sorted_fracs.end());
  return v;
}

// |dx/dy| of the segment carrying a crossing.
Rational run_per_rise(const Diagram& d, const geom::BaseCrossing& c) {
  Point p = d.vertex(c.segment);
  Point q = d.vertex(c.segment + 1);
  return abs((q.x - p.x) / (q.y - p.y));
}

Diagram remove(const Diagram& d, const CrossingView& view, const Candidate& cand) {
  const long n = d.num_vertices();
  const auto& c1 = view.list[static_cast<std::size_t>(cand.first)];
  const auto& c2 = view.list[static_cast<std::size_t>(cand.second)];
  const Rational line_y = Rational(c1.line) + kHalf;
  // An arc leaving upward bulges above the line, so it gets pushed below, and vice versa.
  const int push = c1.sign > 0 ? -1 : 1;

  const Rational x2 = c2.x + (cand.wraps ? d.offset().x : 0);
  const Rational lo = std::min(c1.x, x2);
  const Rational hi = std::max(c1.x, x2);

  // Vertical room: no vertex, z or w may sit within the band.
  Rational bound = kHalf;
  auto room = [&](const Rational& y) {
    Rational gap = frac(push > 0 ? y - line_y : line_y - y);
    if (gap > 0 && gap < bound) bound = gap;
  };
  for (long k = 0; k < n; ++k) room(d.vertex(k).y);
  room(d.w().y);

  // Horizontal room: other strands crossing the line drift sideways inside the band.
  const Rational corner_drift = std::max(run_per_rise(d, c1), run_per_rise(d, c2));
  for (const auto& c : view.list) {
    Rational f = frac(c.x - lo);
    Rational dist(-1);
    for (int shift = -1; shift <= 1; ++shift) {
      Rational x = lo + f + shift;
      if (lo <= x && x <= hi) continue;
      Rational dd = x < lo ? lo - x : x - hi;
      if (dist < 0 || dd < dist) dist = dd;
    }
    Rational limit = dist / (run_per_rise(d, c) + corner_drift + 1);
    if (limit < bound) bound = limit;
  }

  Rational eps(1, 4);
  while (eps >= bound) eps /= 2;

  const Rational target_y = line_y + push * eps;
  auto param_at_height = [&](long segment, long period_shift) -> Rational {
    Point p = d.vertex(segment + period_shift * n);
    Point q = d.vertex(segment + period_shift * n + 1);
    return Rational(segment + period_shift * n) + (target_y - p.y) / (q.y - p.y);
  };
  // target_y is measured on the lifted line of the first crossing, so the second crossing's
  // segment is taken in the period that carries that line.
  const long k1 = c1.segment;
  const long k2 = c2.segment + (cand.wraps ? n : 0);
  Rational ga = param_at_height(c1.segment, 0);
  Rational gb = param_at_height(c2.segment, cand.wraps ? 1 : 0);
  if (!(ga < Rational(k1) + c1.tau) || !(gb > Rational(k2) + c2.tau) || k2 > k1 + n) {
    throw InternalInconsistency("bigon removal: band endpoints fall outside their segments");
  }

  DiagramData out;
  out.offset = d.offset();
  out.w = d.w();
  out.beta.push_back(d.point_at(ga));
  out.beta.push_back(d.point_at(gb));
  for (long k = k2 + 1; k <= k1 + n; ++k) out.beta.push_back(d.vertex(k));
  return unchecked_diagram(std::move(out));
}

}  // namespace

bool is_reduced(const Diagram& d) { return !find_removable(d, view_of(d)).has_value(); }

ReductionStep reduce_once(const Diagram& d) {
  auto view = view_of(d);
  auto cand = find_removable(d, view);
  if (!cand) return {d, false};
  Diagram next = remove(d, view, *cand);
  const auto before = static_cast<long>(view.list.size());
  const auto after = static_cast<long>(geom::base_crossings(next).size());
  if (after != before - 2) {
    throw InternalInconsistency("bigon removal changed the intersection count from " +
                                std::to_string(before) + " to " + std::to_string(after));
  }
  return {std::move(next), true};
}

Diagram reduce(const Diagram& d) {
  Diagram current = d;
  while (true) {
    auto step = reduce_once(current);
    if (!step.changed) return current;
    current = std::move(step.diagram);
  }
}

}  // namespace oneone
