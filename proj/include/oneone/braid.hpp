#pragma once

// 1-bridge braids K(omega, b, m) in the solid torus: the closure of
// (s_b ... s_1)(s_{omega-1} ... s_1)^m on omega strands.
//
// Geometry lives in the plane lattice. The braid arc is the straight segment from (0, 0) to
// (t, omega) with t = m + b / omega, whose slope is s = omega / t.

#include "oneone/diagram.hpp"
#include "oneone/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oneone {

enum class BraidErrorKind { OutOfRange, NotAKnot, DegenerateGeodesic, NotStrict, SlopeZero };
std::string to_string(BraidErrorKind kind);

class BraidError : public std::invalid_argument {
 public:
  BraidError(BraidErrorKind kind, const std::string& what)
      : std::invalid_argument(to_string(kind) + ": " + what), kind_(kind) {}
  BraidErrorKind kind() const { return kind_; }

 private:
  BraidErrorKind kind_;
};

struct BridgeBraid {
  long omega = 0;
  long b = 0;
  long m = 0;

  friend bool operator==(const BridgeBraid&, const BridgeBraid&) = default;
  friend auto operator<=>(const BridgeBraid&, const BridgeBraid&) = default;
};

std::string to_string(const BridgeBraid& k);

/// Number of cycles of the permutation induced by the braid word (no range checks beyond
/// 1 <= b < omega).
long permutation_cycles(long omega, long b, long m);

/// Checks 2 <= omega, 1 <= b < omega, reduces m modulo omega, and requires the closure to be a
/// knot realized by some straight arc (see geodesic_window).
/// Throws BraidError (OutOfRange, NotAKnot, DegenerateGeodesic).
BridgeBraid braid_validate(long omega, long b, long m);

struct GeodesicData {
  Rational t;
  Rational slope;
};

/// How many of the omega - 1 strands the straight arc from (0,0) to (t, omega) passes over,
/// for t off the lattice breakpoints omega k / j.
long bridge_crossings(long omega, const Rational& t);

/// The open range (t_lo, t_hi) inside (m, m+1) of endpoints t whose straight arc gives the word
/// K(omega, b, m): the cell between consecutive breakpoints omega k / j (1 <= j <= omega) on which
/// bridge_crossings equals b. Empty when no arc realizes the word.
std::optional<std::pair<Rational, Rational>> geodesic_window(long omega, long b, long m);

/// t is m + b/omega when that lies inside the window, and the window's midpoint otherwise.
GeodesicData geodesic(const BridgeBraid& k);

/// [s_-, s_+]: the neighbours of s among omega/(m+1), omega/m and the fractions between them
/// with denominator at most m. Confirmed by a direct scan of the lattice triangle swept between
/// the two extreme segments; disagreement throws InternalInconsistency.
CyclicInterval slope_interval(const BridgeBraid& k);

struct BraidClass {
  enum class Kind { Strict, TorusKnot, ExceptionalCable };
  Kind kind = Kind::Strict;
  long q = 0;      ///< lattice endpoint (q, omega) of the extreme segment
  long omega = 0;
  long d = 1;      ///< gcd(q, omega) for cables
  int sign = 0;    ///< +1 when the endpoint comes from s_+, -1 from s_-

  friend bool operator==(const BraidClass&, const BraidClass&) = default;
};

std::string to_string(const BraidClass& c);

BraidClass classify_type(const BridgeBraid& k);

struct InclusionVerdict {
  bool positive = false;
  bool negative = false;
  bool simple = false;

  friend bool operator==(const InclusionVerdict&, const InclusionVerdict&) = default;
};

/// Positive iff s_- lies in [0, p/q], negative iff s_+ lies in [p/q, 0], simple iff p/q lies in
/// the slope interval. Requires a strict braid and a nonzero filling slope.
InclusionVerdict classify_inclusion(const BridgeBraid& k, const ProjectiveSlope& filling);

/// The diagram of the braid included in the filled manifold, before bigon elimination.
Diagram inclusion_diagram_unreduced(const BridgeBraid& k, const ProjectiveSlope& filling);
/// Reduced inclusion diagram.
Diagram inclusion_diagram(const BridgeBraid& k, const ProjectiveSlope& filling);

/// Slopes p/q in the closed slope interval with p <= omega + 1 satisfying
/// omega = +-1 (mod p) or omega q = +-1 (mod p), sorted increasingly.
std::vector<ProjectiveSlope> solid_torus_fillings(const BridgeBraid& k);

/// The image under (x, y) -> (y - x, y): the braid whose geodesic window is the reflection
/// t -> omega - t of the window of k. An involution. It maps slope intervals by mirror_interval
/// except on torus words, whose interval is one-sided and sends T(q, omega) to T(omega - q, omega).
BridgeBraid mirror(const BridgeBraid& k);

/// Image of a slope interval under the mirror map, s -> s / (s - 1).
CyclicInterval mirror_interval(const CyclicInterval& i);

/// Same winding number and slope interval. Both braids must be strict.
bool braid_equivalent(const BridgeBraid& a, const BridgeBraid& b);

struct SearchEntry {
  BridgeBraid braid;
  CyclicInterval interval;
  std::vector<ProjectiveSlope> fillings;
};

struct SearchReport {
  std::vector<SearchEntry> three_or_more;  ///< sorted by (omega, b, m)
  std::vector<SearchEntry> two_or_more;
  long triples_examined = 0;
  long rejected_not_knot = 0;
  long rejected_degenerate = 0;
  long non_strict = 0;
  long duplicates = 0;  ///< strict braids sharing (omega, interval) with a smaller representative
};

/// Every strict braid with 2 <= omega <= omega_max, one per isotopy class, keeping those with at
/// least two solid torus fillings. threads = 0 uses ONEONE_THREADS or the hardware concurrency.
SearchReport berge_search(long omega_max, unsigned threads = 0);

/// Worker count from ONEONE_THREADS, else the hardware concurrency (at least 1).
unsigned default_threads();

}  // namespace oneone
