// Inclusion diagrams of 1-bridge braids into a filled solid torus.
//
// The braid arc gamma runs from z = (0, 0) to (t, omega); w is its upper end mod Z^2. A straight
// curve beta0 of class (q, p) misses both ends. Wherever beta0 crosses a lift of gamma, a finger
// is pushed along gamma past z, so the result avoids gamma. Fingers from crossings farther from
// z are thinner and shorter, so they nest inside the ones closer to z. The output is then
// reduced by bigon elimination.

#include "oneone/braid.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace oneone {

namespace {

struct Crossing {
  Rational lambda;  // position along gamma, in (0, 1)
  Rational sigma;   // position along the beta0 period, in [0, 1)
  Point start;      // lift of z at the lower end of the crossed gamma lift
};

// x, y with a x + b y = 1 for coprime a, b.
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_s, -old_t};
  return {old_s, old_t};
}

std::optional<Diagram> try_build(const Point& dir_gamma, const Point& w, long p, long q, const Rational& c,
                                 const std::vector<Crossing>& crossings, const Rational& base) {
  const Point d{Rational(q), Rational(p)};
  const Point line_origin{c / p, Rational(0)};
  const std::size_t count = crossings.size();

  // Rank by distance from z along gamma: the nearest crossing gets the widest finger.
  std::vector<std::size_t> by_lambda(count);
  std::iota(by_lambda.begin(), by_lambda.end(), 0);
  std::sort(by_lambda.begin(), by_lambda.end(),
            [&](std::size_t l, std::size_t r) { return crossings[l].lambda < crossings[r].lambda; });
  std::vector<Rational> width(count);
  for (std::size_t r = 0; r < count; ++r) width[by_lambda[r]] = base * Rational(static_cast<long>(count - r));

  // Start the period in the widest gap between fingers, off the alpha lines.
  std::vector<std::size_t> by_sigma(count);
  std::iota(by_sigma.begin(), by_sigma.end(), 0);
  std::sort(by_sigma.begin(), by_sigma.end(),
            [&](std::size_t l, std::size_t r) { return crossings[l].sigma < crossings[r].sigma; });
  // With no fingers the whole period is one gap.
  Rational start_sigma(1, 2), best_gap(1);
  if (count > 0) {
    best_gap = -1;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& a = crossings[by_sigma[i]];
      const auto& b = crossings[by_sigma[(i + 1) % count]];
      Rational lo = a.sigma + width[by_sigma[i]];
      Rational hi = b.sigma - width[by_sigma[(i + 1) % count]] + (i + 1 == count ? 1 : 0);
      if (hi - lo > best_gap) {
        best_gap = hi - lo;
        start_sigma = (lo + hi) / 2;
      }
    }
    if (best_gap <= 0) return std::nullopt;
  }
  const Rational gap_lo = start_sigma - best_gap / 2;
  for (Rational frac_pos : {Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(3, 7)}) {
    start_sigma = gap_lo + best_gap * frac_pos;
    Point s = line_origin + start_sigma * d;
    if (frac(s.y) != Rational(1, 2)) break;
  }
  start_sigma = frac(start_sigma);

  DiagramData data;
  data.offset = LatticeVector{q, p};
  data.w = w;
  data.beta.push_back(line_origin + start_sigma * d);

  // Crossings in path order after the start point.
  std::vector<std::size_t> order = by_sigma;
  std::rotate(order.begin(),
              std::find_if(order.begin(), order.end(),
                           [&](std::size_t i) { return crossings[i].sigma > start_sigma; }),
              order.end());
  for (std::size_t i : order) {
    const auto& x = crossings[i];
    const bool next_period = x.sigma < start_sigma;
    const Point shift = next_period ? d : Point{0, 0};
    const Point at = line_origin + x.sigma * d + shift;
    const Point tip = x.start + shift - width[i] * dir_gamma;
    const Point side = width[i] * d;
    data.beta.push_back(at - side);
    data.beta.push_back(tip - side);
    data.beta.push_back(tip + side);
    data.beta.push_back(at + side);
  }
  try {
    return Diagram::validate(std::move(data));
  } catch (const DiagramError&) {
    return std::nullopt;
  }
}

}  // namespace

Diagram inclusion_diagram_unreduced(const BridgeBraid& k, const ProjectiveSlope& filling) {
  if (filling.rise() == 0) throw BraidError(BraidErrorKind::SlopeZero, "filling slope 0 is excluded");
  const long p = to_long(filling.rise());
  const long q = to_long(filling.run());
  const auto g = geodesic(k);
  const Point dir_gamma{g.t, Rational(k.omega)};
  const Point w{frac(g.t), Rational(0)};

  // The curves p x - q y = c + Z are the lifts of beta0; z sits on level 0 and w on level f_w.
  const Rational f_w = frac(p * g.t);
  const Rational c = f_w == 0 ? Rational(1, 2) : f_w / 2;
  const Rational span = p * g.t - q * Rational(k.omega);  // change of level along gamma

  std::vector<Crossing> crossings;
  if (span != 0) {
    auto [bx, by] = bezout(p, q);  // p bx + q by = 1, so v = k (bx, -by) has level k
    Rational shifted = c - span;
    Rational lo = std::min(shifted, c);
    Rational hi = std::max(shifted, c);
    for (long level = to_long(ceil(lo)); Rational(level) <= hi; ++level) {
      if (Rational(level) == lo || Rational(level) == hi) continue;
      Rational lambda = (c - level) / span;
      if (lambda <= 0 || lambda >= 1) continue;
      Point v{Rational(level * bx), Rational(-level * by)};
      Point hit = v + lambda * dir_gamma;
      Rational sigma = hit.y / p;
      long j = to_long(floor(sigma));
      Point shift{Rational(j * q), Rational(j * p)};
      crossings.push_back({lambda, sigma - j, v - shift});
    }
  }

  const long total = static_cast<long>(crossings.size());
  Rational base(1, 8 * k.omega * k.omega * (std::labs(p) + q + 1) * (total + 1) * (total + 1));
  for (int attempt = 0; attempt < 60; ++attempt) {
    if (auto d = try_build(dir_gamma, w, p, q, c, crossings, base)) return *d;
    base *= Rational(7, 8);
  }
  throw InternalInconsistency("could not embed the finger moves for " + to_string(k) + " in filling " +
                              to_string(filling));
}

Diagram inclusion_diagram(const BridgeBraid& k, const ProjectiveSlope& filling) {
  return reduce(inclusion_diagram_unreduced(k, filling));
}

}  // namespace oneone
