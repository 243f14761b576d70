// Standard-form diagrams K(p, q, r, s).
//
// The square [0, 1] x [1/2, 3/2] has alpha along its bottom and top edges. Edge point i sits at
// x_i = (i + 1/2) / p. With u = 1 / (4(q + 2)):
//   * bottom points k and 2q-1-k (k < q) are joined by a cap rising to height 1/2 + (q - k) u,
//     so the innermost cap arches over w = (q/p, 1/2 + u/2);
//   * top points r+k and r+2q-1-k are joined by a cap falling to height 1 - (q - k) u, so the
//     innermost cap dips under z = ((r+q)/p, 1);
//   * the remaining bottom and top points are matched in order by strands that rise vertically
//     to 1/2 + (q+1) u, cross diagonally to 1/2 + (q+2) u and rise vertically to the top.
// The shear (x, y) -> (x + (y - 1/2) s / p, y) moves top point i onto bottom point (i + s) mod p
// of the next copy of the square, which realizes the twisted gluing inside R^2 / Z^2. Finally the
// picture is translated so that z is the origin.

#include "oneone/diagram.hpp"

#include <map>
#include <numeric>

namespace oneone {

namespace {

enum class Edge { Bottom, Top };

struct Piece {
  Edge from_edge;
  long from;
  Edge to_edge;
  long to;
  std::vector<Point> path;  // unsheared, from the first endpoint to the second
};

struct Key {
  Edge edge;
  long pos;
  auto operator<=>(const Key&) const = default;
};

}  // namespace

Diagram from_standard_form(long p, long q, long r, long s) {
  using K = DiagramErrorKind;
  if (p < 1 || q < 0 || r < 0 || s < 0 || s >= p || 2 * q + r > p) {
    throw DiagramError(K::NotRealizable, "standard form needs p >= 1, q >= 0, r >= 0, 2q + r <= p, 0 <= s < p");
  }
  const Rational half(1, 2);
  const Rational u(1, 4 * (q + 2));
  auto xpos = [&](long i) { return Rational(2 * i + 1, 2 * p); };
  const Rational bottom = half;
  const Rational top = half + 1;

  std::vector<Piece> pieces;
  for (long k = 0; k < q; ++k) {
    long i = k, j = 2 * q - 1 - k;
    Rational h = half + (q - k) * u;
    pieces.push_back({Edge::Bottom, i, Edge::Bottom, j,
                      {{xpos(i), bottom}, {xpos(i), h}, {xpos(j), h}, {xpos(j), bottom}}});
    i = r + k;
    j = r + 2 * q - 1 - k;
    h = Rational(1) - (q - k) * u;
    pieces.push_back({Edge::Top, i, Edge::Top, j,
                      {{xpos(i), top}, {xpos(i), h}, {xpos(j), h}, {xpos(j), top}}});
  }
  std::vector<long> bottom_free, top_free;
  for (long i = 2 * q; i < p; ++i) bottom_free.push_back(i);
  for (long i = 0; i < p; ++i) {
    if (i < r || i >= r + 2 * q) top_free.push_back(i);
  }
  const Rational band_lo = half + (q + 1) * u;
  const Rational band_hi = half + (q + 2) * u;
  for (std::size_t k = 0; k < bottom_free.size(); ++k) {
    long i = bottom_free[k], j = top_free[k];
    pieces.push_back({Edge::Bottom, i, Edge::Top, j,
                      {{xpos(i), bottom}, {xpos(i), band_lo}, {xpos(j), band_hi}, {xpos(j), top}}});
  }

  std::map<Key, std::size_t> attached;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    attached[{pieces[k].from_edge, pieces[k].from}] = k;
    attached[{pieces[k].to_edge, pieces[k].to}] = k;
  }

  auto shear = [&](const Point& pt, long tx, long ty) {
    return Point{pt.x + (pt.y - half) * Rational(s, p) + tx, pt.y + ty};
  };

  // Walk beta starting from bottom point 0 of the square at the origin copy.
  Key start{Edge::Bottom, 0};
  Key at = start;
  long tx = 0, ty = 0;
  std::vector<Point> path;
  std::size_t visited = 0;
  do {
    const Piece& piece = pieces[attached.at(at)];
    const bool forward = piece.from_edge == at.edge && piece.from == at.pos;
    std::vector<Point> pts = piece.path;
    if (!forward) std::reverse(pts.begin(), pts.end());
    // The endpoint itself is shared with the previous piece; keep it once.
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) path.push_back(shear(pts[k], tx, ty));
    ++visited;
    Key exit = forward ? Key{piece.to_edge, piece.to} : Key{piece.from_edge, piece.from};
    // Cross alpha into the neighbouring copy of the square.
    if (exit.edge == Edge::Top) {
      long sum = exit.pos + s;
      tx += sum / p;
      ty += 1;
      at = {Edge::Bottom, sum % p};
    } else {
      // Bottom point j of this copy is top point k of the copy below, with (k + s) mod p = j.
      long k = ((exit.pos - s) % p + p) % p;
      tx -= (k + s) / p;
      ty -= 1;
      at = {Edge::Top, k};
    }
  } while (!(at == start) && visited <= pieces.size());

  if (visited != pieces.size()) {
    throw DiagramError(K::NotRealizable, "beta has more than one component");
  }
  if (ty == 0) throw DiagramError(K::NotRealizable, "beta is null-homologous in the alpha direction");

  const Point z = shear(Point{xpos(r + q) - Rational(1, 2 * p), Rational(1)}, 0, 0);
  Point w = shear(Point{Rational(q, p), half + u / 2}, 0, 0);
  const Point shift{-z.x, Rational(0)};
  for (auto& pt : path) pt = pt + shift;
  w = w + shift;
  return Diagram::validate(DiagramData{std::move(path), LatticeVector{tx, ty}, w});
}

}  // namespace oneone
