#pragma once

// Exact rational and projective-line arithmetic on the plane lattice.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oneone {

using Integer = mpz_class;
using Rational = mpq_class;  // GMP keeps every result canonical (gcd = 1, den > 0)

/// Parses "num/den" or "num"; the result is canonicalized. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Always "num/den", even for integers ("3/1").
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
/// r - floor(r), in [0, 1).
Rational frac(const Rational& r);
int sign(const Rational& r);
int sign(const Integer& r);
long to_long(const Integer& n);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

/// Twice the signed area of (a, b, c); positive for a counterclockwise turn.
Rational orient(const Point& a, const Point& b, const Point& c);
Rational cross(const Point& u, const Point& v);

struct LatticeVector {
  long x = 0;
  long y = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  Point as_point() const { return {Rational(x), Rational(y)}; }
};

/// A rational point of P^1 stored as rise/run with run >= 0; infinity is 1/0.
class ProjectiveSlope {
 public:
  ProjectiveSlope(Integer rise, Integer run);
  explicit ProjectiveSlope(const Rational& value);
  static ProjectiveSlope infinity() { return {Integer(1), Integer(0)}; }
  /// "inf", "1/0", "p/q" or "n".
  static ProjectiveSlope parse(std::string_view text);

  const Integer& rise() const { return rise_; }
  const Integer& run() const { return run_; }
  bool is_infinite() const { return run_ == 0; }
  /// Throws std::domain_error for infinity.
  Rational value() const;

  friend bool operator==(const ProjectiveSlope&, const ProjectiveSlope&) = default;
  /// Linear order: increasing real value with infinity last.
  friend std::strong_ordering operator<=>(const ProjectiveSlope& a, const ProjectiveSlope& b);

 private:
  Integer rise_;
  Integer run_;
};

std::string to_string(const ProjectiveSlope& s);

/// Counterclockwise arc [start, end] of P^1(Q), or the whole circle minus one point.
class CyclicInterval {
 public:
  CyclicInterval(ProjectiveSlope start, ProjectiveSlope end);
  static CyclicInterval full_circle_minus(ProjectiveSlope point);

  bool is_full_circle_minus() const { return full_minus_; }
  const ProjectiveSlope& start() const { return start_; }
  const ProjectiveSlope& end() const { return end_; }
  /// The complementary closed arc [end, start]. Undefined for full_circle_minus.
  CyclicInterval reversed() const;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;

 private:
  CyclicInterval(ProjectiveSlope start, ProjectiveSlope end, bool full_minus);
  ProjectiveSlope start_;
  ProjectiveSlope end_;
  bool full_minus_ = false;
};

/// True iff s lies on the counterclockwise arc of I (endpoints inclusive). Counterclockwise is
/// the direction of increasing slope, wrapping through infinity back to -infinity.
bool interval_contains(const CyclicInterval& interval, const ProjectiveSlope& s);

/// Consecutive members (s_minus, s_plus) of {lo, hi} together with every fraction strictly
/// between them whose reduced denominator is at most max_den, chosen so s_minus <= s <= s_plus.
/// Throws std::invalid_argument if lo >= hi, s is outside (lo, hi), or s is itself an interior
/// member (the gap is then not unique).
std::pair<Rational, Rational> farey_gap(const Rational& lo, const Rational& hi, const Rational& s,
                                        long max_den);

/// The triangle with vertices 0, v, w holds no lattice point other than its vertices.
/// Throws std::invalid_argument when v and w are parallel.
bool triangle_empty(const LatticeVector& v, const LatticeVector& w);

class PointOnCurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Winding number of the closed polygon through `loop` (last vertex joins the first) around p.
/// Throws PointOnCurveError if p lies on the polygon.
long winding_number(std::span<const Point> loop, const Point& p);

/// Signed shoelace area of the closed polygon.
Rational signed_area(std::span<const Point> loop);

}  // namespace oneone
