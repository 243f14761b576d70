#pragma once

// Doubly-pointed genus-1 Heegaard diagrams on the torus R^2 / Z^2.
//
// Gauge: alpha is the projection of the horizontal line y = 1/2, the z basepoint is the
// projection of Z^2, and beta is stored as one fundamental PL path from P to P + offset.
// The infinite lift of beta through that path is "the lift"; its global parameter G runs over
// segment indices, so G = n * N + k + tau sits on segment k of period n (N = path vertex count).

#include "oneone/lattice.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace oneone {

enum class DiagramErrorKind {
  NonPrimitiveOffset,
  DegenerateOffset,
  SelfIntersecting,
  BasepointOnCurve,
  NotTransverse,
  Malformed,
  NotRealizable,
};

std::string to_string(DiagramErrorKind kind);

class DiagramError : public std::invalid_argument {
 public:
  DiagramError(DiagramErrorKind kind, const std::string& what)
      : std::invalid_argument(to_string(kind) + ": " + what), kind_(kind) {}
  DiagramErrorKind kind() const { return kind_; }

 private:
  DiagramErrorKind kind_;
};

/// An internal invariant failed. Never caused by valid input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DiagramData {
  std::vector<Point> beta;
  LatticeVector offset;
  Point w;

  friend bool operator==(const DiagramData&, const DiagramData&) = default;
};

class Diagram {
 public:
  /// Checks every diagram invariant and removes collinear path vertices.
  /// Throws DiagramError naming the violated invariant.
  static Diagram validate(DiagramData raw);

  const std::vector<Point>& beta() const { return data_.beta; }
  const LatticeVector& offset() const { return data_.offset; }
  const Point& w() const { return data_.w; }
  const DiagramData& data() const { return data_; }
  long num_vertices() const { return static_cast<long>(data_.beta.size()); }
  /// |offset.y|, the order of H_1 of the presented manifold.
  long num_classes() const;

  /// Vertex K of the infinite lift.
  Point vertex(long k) const;
  /// Point of the infinite lift at global parameter g.
  Point point_at(const Rational& g) const;
  /// Polyline of the lift from g1 to g2 (g1 < g2), including both end points.
  std::vector<Point> arc(const Rational& g1, const Rational& g2) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  explicit Diagram(DiagramData data) : data_(std::move(data)) {}
  friend Diagram unchecked_diagram(DiagramData data);
  DiagramData data_;
};

/// Builds a Diagram without the embeddedness scan. Only for constructions whose output is
/// embedded by construction; collinear vertices are still removed.
Diagram unchecked_diagram(DiagramData data);

struct IntersectionPoint {
  Rational alpha_position;  ///< x-coordinate on alpha, reduced mod 1
  Rational beta_parameter;  ///< position along the fundamental path, in [0, N)
  int sign = 0;             ///< +1 where beta crosses alpha upward
  long class_id = 0;
  /// Lift onto the class line y = class_id + 1/2 and the global parameter of that lift.
  Rational lift_x;
  Rational lift_parameter;
};

/// All intersections of alpha and beta, grouped by class and ordered along alpha within a class.
std::vector<IntersectionPoint> intersections(const Diagram& d);
/// The intersections of one class, ordered along alpha.
std::vector<IntersectionPoint> class_intersections(const Diagram& d, long class_id);

enum class HalfPlane { Upper, Lower };

struct Bigon {
  IntersectionPoint source;
  IntersectionPoint target;
  HalfPlane half_plane = HalfPlane::Upper;
  long n_z = 0;
  long n_w = 0;
  Rational area;

  /// The corner met first along the lift of beta lies to the right of the other corner.
  bool runs_leftward() const;
};

/// The bigons cobounded by the class line and the arcs of the lifted beta between consecutive
/// crossings. Upper bigons run from their left corner to their right corner, lower bigons the
/// other way.
std::vector<Bigon> bigons(const Diagram& d, long class_id);

/// Boundary of a bigon oriented from source along alpha, then back along beta.
std::vector<Point> bigon_boundary(const Diagram& d, const Bigon& b);

/// Number of lattice points (resp. w lifts) enclosed by a closed loop, counted with winding number.
long z_multiplicity(std::span<const Point> loop);
long w_multiplicity(std::span<const Point> loop, const Point& w);

enum class GraphicSign { Positive, Negative, Either, None };
std::string to_string(GraphicSign s);

/// Compares the order of a class's points along alpha (left to right) and along beta (oriented
/// so that alpha . beta > 0): opposite orders are positive, equal orders negative.
GraphicSign graphic_sign(const Diagram& d, long class_id);

enum class CoherenceVerdict { Positive, Negative, Both, Incoherent };
std::string to_string(CoherenceVerdict v);

/// Tries every orientation pair of (alpha, beta) against the boundary orientation of every
/// bigon. Both means there are no bigons at all.
CoherenceVerdict coherence(const Diagram& d);

/// The same verdict assembled from the per-class graphic signs.
CoherenceVerdict coherence_from_graphic(const Diagram& d);

/// Every bigon holds a basepoint.
bool is_reduced(const Diagram& d);

/// Removes bigons without basepoints one at a time, always an innermost one, until none remain.
Diagram reduce(const Diagram& d);

/// Result of one elimination step, exposed for tests.
struct ReductionStep {
  Diagram diagram;
  bool changed = false;
};
ReductionStep reduce_once(const Diagram& d);

/// Builds the standard-form reduced diagram K(p, q, r, s).
///
/// Picture: a square whose bottom and top edges are alpha, each carrying p intersection points
/// numbered 0..p-1 from the left. The 2q bottom points 0..2q-1 carry q nested rainbows arching
/// over w; the top points r..r+2q-1 carry q nested rainbows dipping under z; the remaining
/// p - 2q points on each edge are joined by non-crossing strands in order, so the first r
/// strands run between the two rainbows. The left and right sides are glued directly and top
/// point i is glued to bottom point (i + s) mod p.
///
/// Requires p >= 1, q >= 0, r >= 0, 2q + r <= p, 0 <= s < p. Throws DiagramError
/// (NotRealizable) if beta is not connected or bounds no rational homology sphere.
Diagram from_standard_form(long p, long q, long r, long s);

}  // namespace oneone
