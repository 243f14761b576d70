#include "oneone/diagram.hpp"

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace oneone {

std::string to_string(DiagramErrorKind kind) {
  switch (kind) {
    case DiagramErrorKind::NonPrimitiveOffset: return "NonPrimitiveOffset";
    case DiagramErrorKind::DegenerateOffset: return "DegenerateOffset";
    case DiagramErrorKind::SelfIntersecting: return "SelfIntersecting";
    case DiagramErrorKind::BasepointOnCurve: return "BasepointOnCurve";
    case DiagramErrorKind::NotTransverse: return "NotTransverse";
    case DiagramErrorKind::Malformed: return "Malformed";
    case DiagramErrorKind::NotRealizable: return "NotRealizable";
  }
  return "Unknown";
}

std::string to_string(GraphicSign s) {
  switch (s) {
    case GraphicSign::Positive: return "positive";
    case GraphicSign::Negative: return "negative";
    case GraphicSign::Either: return "either";
    case GraphicSign::None: return "none";
  }
  return "none";
}

std::string to_string(CoherenceVerdict v) {
  switch (v) {
    case CoherenceVerdict::Positive: return "Positive";
    case CoherenceVerdict::Negative: return "Negative";
    case CoherenceVerdict::Both: return "Both";
    case CoherenceVerdict::Incoherent: return "Incoherent";
  }
  return "Incoherent";
}

namespace {

const Rational kHalf(1, 2);

bool on_alpha(const Rational& y) { return frac(y) == kHalf; }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Removes vertices whose neighbours (taken cyclically modulo the offset) are collinear with them
// and continue in the same direction.
std::vector<Point> drop_collinear(std::vector<Point> beta, const LatticeVector& offset) {
  const Point shift = offset.as_point();
  bool changed = true;
  while (changed && beta.size() > 1) {
    changed = false;
    const std::size_t n = beta.size();
    for (std::size_t k = 0; k < n; ++k) {
      Point prev = k == 0 ? beta[n - 1] - shift : beta[k - 1];
      Point next = k + 1 == n ? beta[0] + shift : beta[k + 1];
      const Point& here = beta[k];
      Point u = here - prev;
      Point v = next - here;
      if (cross(u, v) == 0 && u.x * v.x + u.y * v.y > 0) {
        beta.erase(beta.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return beta;
}

}  // namespace

// --- Diagram accessors -------------------------------------------------------

long Diagram::num_classes() const { return std::labs(data_.offset.y); }

Point Diagram::vertex(long k) const {
  const long n = num_vertices();
  long period = geom::floor_div(k, n);
  long idx = k - period * n;
  return data_.beta[static_cast<std::size_t>(idx)] +
         Point{Rational(period * data_.offset.x), Rational(period * data_.offset.y)};
}

Point Diagram::point_at(const Rational& g) const {
  long k = to_long(floor(g));
  Rational tau = g - k;
  Point a = vertex(k);
  if (tau == 0) return a;
  Point b = vertex(k + 1);
  return a + tau * (b - a);
}

std::vector<Point> Diagram::arc(const Rational& g1, const Rational& g2) const {
  std::vector<Point> pts;
  pts.push_back(point_at(g1));
  long first = to_long(floor(g1)) + 1;
  long last = to_long(ceil(g2)) - 1;
  for (long k = first; k <= last; ++k) pts.push_back(vertex(k));
  Point end = point_at(g2);
  if (!(pts.back() == end)) pts.push_back(end);
  return pts;
}

Diagram unchecked_diagram(DiagramData data) {
  data.beta = drop_collinear(std::move(data.beta), data.offset);
  return Diagram(std::move(data));
}

// --- Validation ----------------------------------------------------------------

Diagram Diagram::validate(DiagramData raw) {
  using K = DiagramErrorKind;
  const long a = raw.offset.x;
  const long b = raw.offset.y;
  if (b == 0) throw DiagramError(K::DegenerateOffset, "offset.y must be nonzero");
  if (std::gcd(std::labs(a), std::labs(b)) != 1) {
    throw DiagramError(K::NonPrimitiveOffset, "offset (" + std::to_string(a) + ", " +
                                                  std::to_string(b) + ") is not primitive");
  }
  if (raw.beta.empty()) throw DiagramError(K::Malformed, "beta path has no vertices");
  if (on_alpha(raw.w.y)) throw DiagramError(K::BasepointOnCurve, "w lies on alpha");
  if (is_integer(raw.w.x) && is_integer(raw.w.y)) {
    throw DiagramError(K::BasepointOnCurve, "w coincides with z");
  }
  // Zero-length segments and immediate reversals make the path degenerate.
  {
    const std::size_t n = raw.beta.size();
    const Point shift = raw.offset.as_point();
    for (std::size_t k = 0; k < n; ++k) {
      Point prev = k == 0 ? raw.beta[n - 1] - shift : raw.beta[k - 1];
      Point next = k + 1 == n ? raw.beta[0] + shift : raw.beta[k + 1];
      Point u = raw.beta[k] - prev;
      Point v = next - raw.beta[k];
      if (v == Point{0, 0}) throw DiagramError(K::SelfIntersecting, "zero-length beta segment");
      if (cross(u, v) == 0 && u.x * v.x + u.y * v.y < 0) {
        throw DiagramError(K::SelfIntersecting, "beta path doubles back on itself");
      }
    }
  }

  Diagram d = unchecked_diagram(std::move(raw));
  const long n = d.num_vertices();
  // Straight-through vertices were dropped above; any vertex left on alpha is a real corner.
  for (const auto& v : d.beta()) {
    if (on_alpha(v.y)) {
      throw DiagramError(K::NotTransverse, "beta vertex (" + to_string(v.x) + ", " + to_string(v.y) +
                                               ") lies on alpha");
    }
  }

  std::vector<geom::Segment> segs;
  segs.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) segs.emplace_back(d.vertex(k), d.vertex(k + 1));

  for (const auto& s : segs) {
    if (geom::segment_hits_lattice(s, Point{0, 0})) {
      throw DiagramError(K::BasepointOnCurve, "beta passes through a lift of z");
    }
    if (geom::segment_hits_lattice(s, d.w())) {
      throw DiagramError(K::BasepointOnCurve, "beta passes through a lift of w");
    }
  }

  // Every pair of segments among all Z^2-translates must be disjoint, except consecutive
  // segments of the lift, which share exactly their common vertex.
  for (long k = 0; k < n; ++k) {
    for (long l = k; l < n; ++l) {
      const auto& s1 = segs[static_cast<std::size_t>(k)];
      const auto& s2 = segs[static_cast<std::size_t>(l)];
      long vx_lo = static_cast<long>(std::ceil(s1.min_x - s2.max_x - 1e-9));
      long vx_hi = static_cast<long>(std::floor(s1.max_x - s2.min_x + 1e-9));
      long vy_lo = static_cast<long>(std::ceil(s1.min_y - s2.max_y - 1e-9));
      long vy_hi = static_cast<long>(std::floor(s1.max_y - s2.min_y + 1e-9));
      for (long vx = vx_lo; vx <= vx_hi; ++vx) {
        for (long vy = vy_lo; vy <= vy_hi; ++vy) {
          // Global indices when the translate is a multiple of the offset.
          std::optional<long> gap;
          if (vy % b == 0 && vx == (vy / b) * a) gap = (vy / b) * n + l - k;
          if (gap && *gap == 0) continue;
          geom::Segment moved = s2.translated(vx, vy);
          if (gap && std::labs(*gap) == 1) {
            // Adjacent along the lift: the shared vertex is the only contact allowed, and the
            // reversal check above already rules out overlaps.
            continue;
          }
          if (geom::segments_intersect(s1, moved)) {
            throw DiagramError(K::SelfIntersecting,
                               "beta segments " + std::to_string(k) + " and " + std::to_string(l) +
                                   " meet after translation by (" + std::to_string(vx) + ", " +
                                   std::to_string(vy) + ")");
          }
        }
      }
    }
  }
  return d;
}

// --- Intersections -------------------------------------------------------------

std::vector<IntersectionPoint> class_intersections(const Diagram& d, long class_id) {
  const long n = d.num_vertices();
  const long a = d.offset().x;
  const long b = d.offset().y;
  const long classes = d.num_classes();
  std::vector<IntersectionPoint> out;
  for (const auto& c : geom::base_crossings(d)) {
    long cls = geom::floor_mod(c.line, classes);
    if (cls != class_id) continue;
    long period = (class_id - c.line) / b;
    IntersectionPoint p;
    p.alpha_position = frac(c.x);
    p.beta_parameter = Rational(c.segment) + c.tau;
    p.sign = c.sign;
    p.class_id = class_id;
    p.lift_x = c.x + period * a;
    p.lift_parameter = Rational(period * n + c.segment) + c.tau;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const IntersectionPoint& l, const IntersectionPoint& r) { return l.lift_x < r.lift_x; });
  return out;
}

std::vector<IntersectionPoint> intersections(const Diagram& d) {
  std::vector<IntersectionPoint> all;
  for (long c = 0; c < d.num_classes(); ++c) {
    auto pts = class_intersections(d, c);
    all.insert(all.end(), pts.begin(), pts.end());
  }
  return all;
}

// --- Bigons --------------------------------------------------------------------

bool Bigon::runs_leftward() const {
  const auto& first = source.lift_parameter < target.lift_parameter ? source : target;
  const auto& second = source.lift_parameter < target.lift_parameter ? target : source;
  return first.lift_x > second.lift_x;
}

long z_multiplicity(std::span<const Point> loop) { return geom::enclosed_translates(loop, Point{0, 0}); }

long w_multiplicity(std::span<const Point> loop, const Point& w) {
  return geom::enclosed_translates(loop, w);
}

std::vector<Point> bigon_boundary(const Diagram& d, const Bigon& bg) {
  const bool source_first = bg.source.lift_parameter < bg.target.lift_parameter;
  const auto& g1 = source_first ? bg.source.lift_parameter : bg.target.lift_parameter;
  const auto& g2 = source_first ? bg.target.lift_parameter : bg.source.lift_parameter;
  auto pts = d.arc(g1, g2);
  // Listed from target back to source along beta; the closing edge runs along alpha.
  if (source_first) std::reverse(pts.begin(), pts.end());
  return pts;
}

std::vector<Bigon> bigons(const Diagram& d, long class_id) {
  auto pts = class_intersections(d, class_id);
  std::sort(pts.begin(), pts.end(), [](const IntersectionPoint& l, const IntersectionPoint& r) {
    return l.lift_parameter < r.lift_parameter;
  });
  std::vector<Bigon> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& first = pts[i];
    const auto& second = pts[i + 1];
    Bigon bg;
    // Leaving the class line upward means the arc lies above it.
    bg.half_plane = first.sign > 0 ? HalfPlane::Upper : HalfPlane::Lower;
    const bool first_is_left = first.lift_x < second.lift_x;
    const auto& left = first_is_left ? first : second;
    const auto& right = first_is_left ? second : first;
    bg.source = bg.half_plane == HalfPlane::Upper ? left : right;
    bg.target = bg.half_plane == HalfPlane::Upper ? right : left;
    auto loop = bigon_boundary(d, bg);
    bg.n_z = z_multiplicity(loop);
    bg.n_w = w_multiplicity(loop, d.w());
    bg.area = abs(signed_area(loop));
    if (bg.n_z < 0 || bg.n_w < 0) {
      throw InternalInconsistency("bigon boundary is oriented clockwise");
    }
    out.push_back(std::move(bg));
  }
  return out;
}

// --- Verdicts ------------------------------------------------------------------

GraphicSign graphic_sign(const Diagram& d, long class_id) {
  auto pts = class_intersections(d, class_id);
  if (pts.size() == 1) return GraphicSign::Either;
  std::sort(pts.begin(), pts.end(), [](const IntersectionPoint& l, const IntersectionPoint& r) {
    return l.lift_parameter < r.lift_parameter;
  });
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].lift_x < pts[i + 1].lift_x) decreasing = false;
    else increasing = false;
  }
  if (!increasing && !decreasing) return GraphicSign::None;
  // Orient beta so alpha . beta > 0; that reverses the parameter when offset.y < 0.
  bool same_order = d.offset().y > 0 ? increasing : decreasing;
  return same_order ? GraphicSign::Negative : GraphicSign::Positive;
}

CoherenceVerdict coherence(const Diagram& d) {
  bool any_left = false;
  bool any_right = false;
  for (long c = 0; c < d.num_classes(); ++c) {
    for (const auto& bg : bigons(d, c)) {
      (bg.runs_leftward() ? any_left : any_right) = true;
    }
  }
  if (!any_left && !any_right) return CoherenceVerdict::Both;
  if (any_left && any_right) return CoherenceVerdict::Incoherent;
  // Coherent boundary orientation needs beta to run against alpha along every bigon, so alpha
  // and beta are oriented with product +1 when bigons run leftward under the path parameter.
  int orientation_product = any_left ? 1 : -1;
  int intersection_sign = orientation_product * (d.offset().y > 0 ? 1 : -1);
  return intersection_sign > 0 ? CoherenceVerdict::Positive : CoherenceVerdict::Negative;
}

CoherenceVerdict coherence_from_graphic(const Diagram& d) {
  bool pos = false;
  bool neg = false;
  for (long c = 0; c < d.num_classes(); ++c) {
    switch (graphic_sign(d, c)) {
      case GraphicSign::Positive: pos = true; break;
      case GraphicSign::Negative: neg = true; break;
      case GraphicSign::Either: break;
      case GraphicSign::None: return CoherenceVerdict::Incoherent;
    }
  }
  if (pos && neg) return CoherenceVerdict::Incoherent;
  if (pos) return CoherenceVerdict::Positive;
  if (neg) return CoherenceVerdict::Negative;
  return CoherenceVerdict::Both;
}

}  // namespace oneone
