#include "oneone/braid.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace oneone {

std::string to_string(BraidErrorKind kind) {
  switch (kind) {
    case BraidErrorKind::OutOfRange: return "OutOfRange";
    case BraidErrorKind::NotAKnot: return "NotAKnot";
    case BraidErrorKind::DegenerateGeodesic: return "DegenerateGeodesic";
    case BraidErrorKind::NotStrict: return "NotStrict";
    case BraidErrorKind::SlopeZero: return "SlopeZero";
  }
  return "Unknown";
}

std::string to_string(const BridgeBraid& k) {
  return "K(" + std::to_string(k.omega) + "," + std::to_string(k.b) + "," + std::to_string(k.m) + ")";
}

std::string to_string(const BraidClass& c) {
  switch (c.kind) {
    case BraidClass::Kind::Strict: return "Strict";
    case BraidClass::Kind::TorusKnot:
      return "TorusKnot(" + std::to_string(c.q) + "," + std::to_string(c.omega) + ")";
    case BraidClass::Kind::ExceptionalCable:
      return "ExceptionalCable(" + std::to_string(c.q / c.d) + "," + std::to_string(c.omega / c.d) + "," +
             std::to_string(c.d) + "," + (c.sign > 0 ? "+" : "-") + ")";
  }
  return "Strict";
}

long permutation_cycles(long omega, long b, long m) {
  std::vector<long> strand(static_cast<std::size_t>(omega));
  std::iota(strand.begin(), strand.end(), 0);
  auto apply = [&](long i) { std::swap(strand[static_cast<std::size_t>(i - 1)], strand[static_cast<std::size_t>(i)]); };
  for (long i = b; i >= 1; --i) apply(i);
  for (long rep = 0; rep < m; ++rep) {
    for (long i = omega - 1; i >= 1; --i) apply(i);
  }
  std::vector<bool> seen(static_cast<std::size_t>(omega), false);
  long cycles = 0;
  for (long i = 0; i < omega; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (long j = i; !seen[static_cast<std::size_t>(j)]; j = strand[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  return cycles;
}

BridgeBraid braid_validate(long omega, long b, long m) {
  if (omega < 2) throw BraidError(BraidErrorKind::OutOfRange, "omega must be at least 2");
  if (b < 1 || b >= omega) throw BraidError(BraidErrorKind::OutOfRange, "b must satisfy 1 <= b < omega");
  m = ((m % omega) + omega) % omega;
  BridgeBraid k{omega, b, m};
  if (permutation_cycles(omega, b, m) != 1) {
    throw BraidError(BraidErrorKind::NotAKnot, to_string(k) + " closes to a link");
  }
  if (!geodesic_window(omega, b, m)) {
    throw BraidError(BraidErrorKind::DegenerateGeodesic, to_string(k) + ": no straight arc closes up to this braid");
  }
  return k;
}

long bridge_crossings(long omega, const Rational& t) {
  // The arc from (0,0) to (t, omega) meets the strand through (j t / omega, j) for each interior
  // height j. The bridge passes over that strand exactly when the strand lies between the arc's
  // start and its endpoint modulo 1.
  const Rational ft = frac(t);
  long count = 0;
  for (long j = 1; j < omega; ++j) {
    const Rational x = frac(Rational(j) * t / omega);
    if (x > 0 && x < ft) ++count;
  }
  return count;
}

std::optional<std::pair<Rational, Rational>> geodesic_window(long omega, long b, long m) {
  // The braid word changes only when the arc hits a lattice point, i.e. at t = omega k / j with
  // 1 <= j <= omega. Between consecutive such values the bridge count is constant.
  std::vector<Rational> cuts{Rational(m), Rational(m + 1)};
  for (long j = 1; j <= omega; ++j) {
    for (long kk = (m * j) / omega; kk <= ((m + 1) * j) / omega + 1; ++kk) {
      Rational t(omega * kk, j);
      t.canonicalize();
      if (t > m && t < m + 1) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (bridge_crossings(omega, mid) == b) return std::make_pair(cuts[i], cuts[i + 1]);
  }
  return std::nullopt;
}

GeodesicData geodesic(const BridgeBraid& k) {
  Rational t(k.m * k.omega + k.b, k.omega);
  t.canonicalize();
  // Prefer m + b/omega when it realizes the braid; otherwise take the middle of the window.
  if (auto w = geodesic_window(k.omega, k.b, k.m); w && !(w->first < t && t < w->second)) {
    t = (w->first + w->second) / 2;
  }
  return {t, Rational(k.omega) / t};
}

namespace {

// Lattice points (x, y) with 0 < y <= omega and x strictly between y / s_hi and y / s_lo, where
// the slopes are positive and s_hi may be infinite.
bool triangle_has_lattice_point(long omega, const ProjectiveSlope& s_lo, const ProjectiveSlope& s_hi) {
  for (long y = 1; y <= omega; ++y) {
    Rational right = Rational(y) / s_lo.value();
    Rational left = s_hi.is_infinite() ? Rational(0) : Rational(y) / s_hi.value();
    Integer first = floor(left) + 1;
    if (first < right) return true;
  }
  return false;
}

// The segment from the origin with this slope meets a lattice point at height 1..omega.
bool segment_blocked(long omega, const ProjectiveSlope& s) {
  if (s.is_infinite()) return true;
  // Direction (run, rise) is primitive, so lattice points on it are multiples of it.
  return s.rise() <= omega;
}

}  // namespace

CyclicInterval slope_interval(const BridgeBraid& k) {
  const auto g = geodesic(k);
  const Rational lo(k.omega, k.m + 1);
  ProjectiveSlope s_minus(lo);
  ProjectiveSlope s_plus = ProjectiveSlope::infinity();
  if (k.m == 0) {
    s_minus = ProjectiveSlope(Rational(k.omega));
  } else {
    Rational hi(k.omega, k.m);
    Rational l = lo, h = hi;
    l.canonicalize();
    h.canonicalize();
    auto [a, b] = farey_gap(l, h, g.slope, k.m);
    s_minus = ProjectiveSlope(a);
    s_plus = ProjectiveSlope(b);
  }
  if (triangle_has_lattice_point(k.omega, s_minus, s_plus) || !segment_blocked(k.omega, s_minus) ||
      !segment_blocked(k.omega, s_plus)) {
    throw InternalInconsistency("slope interval of " + to_string(k) + " disagrees with the lattice scan");
  }
  return CyclicInterval(s_minus, s_plus);
}

BraidClass classify_type(const BridgeBraid& k) {
  const auto interval = slope_interval(k);
  auto endpoint = [&](const ProjectiveSlope& s, int sign) -> std::optional<BraidClass> {
    // The segment of slope rise/run reaching height omega ends at (omega run / rise, omega).
    if (s.is_infinite()) {
      BraidClass c;
      c.q = 0;
      c.omega = k.omega;
      c.d = k.omega;
      c.sign = sign;
      c.kind = BraidClass::Kind::ExceptionalCable;
      return c;
    }
    Integer num = Integer(k.omega) * s.run();
    if (num % s.rise() != 0) return std::nullopt;
    BraidClass c;
    c.q = to_long(Integer(num / s.rise()));
    c.omega = k.omega;
    c.d = std::gcd(c.q, k.omega);
    c.sign = sign;
    c.kind = c.d == 1 ? BraidClass::Kind::TorusKnot : BraidClass::Kind::ExceptionalCable;
    return c;
  };
  auto lower = endpoint(interval.start(), -1);
  auto upper = endpoint(interval.end(), +1);
  for (const auto& c : {lower, upper}) {
    if (c && c->kind == BraidClass::Kind::TorusKnot) return *c;
  }
  if (lower) return *lower;
  if (upper) return *upper;
  return BraidClass{};
}

InclusionVerdict classify_inclusion(const BridgeBraid& k, const ProjectiveSlope& filling) {
  if (classify_type(k).kind != BraidClass::Kind::Strict) {
    throw BraidError(BraidErrorKind::NotStrict, to_string(k) + " is not a strict braid");
  }
  const ProjectiveSlope zero(Integer(0), Integer(1));
  if (filling == zero) throw BraidError(BraidErrorKind::SlopeZero, "filling slope 0 is excluded");
  const auto interval = slope_interval(k);
  InclusionVerdict v;
  v.positive = interval_contains(CyclicInterval(zero, filling), interval.start());
  v.negative = interval_contains(CyclicInterval(filling, zero), interval.end());
  v.simple = interval_contains(interval, filling);
  return v;
}

std::vector<ProjectiveSlope> solid_torus_fillings(const BridgeBraid& k) {
  if (classify_type(k).kind != BraidClass::Kind::Strict) {
    throw BraidError(BraidErrorKind::NotStrict, to_string(k) + " is not a strict braid");
  }
  const auto interval = slope_interval(k);
  const long w = k.omega;
  auto unit_mod = [](long x, long p) {
    long r = ((x % p) + p) % p;
    return r == 1 % p || r == (p - 1) % p;
  };
  std::vector<ProjectiveSlope> out;
  for (long p = 1; p <= w + 1; ++p) {
    // The interval lies inside (omega/(m+1), omega/m), so q < p (m+1) / omega + 1.
    for (long q = 1; q * w <= p * (k.m + 1); ++q) {
      if (std::gcd(p, q) != 1) continue;
      ProjectiveSlope s{Integer(p), Integer(q)};
      if (!interval_contains(interval, s)) continue;
      if (unit_mod(w, p) || unit_mod(w * q, p)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicInterval mirror_interval(const CyclicInterval& i) {
  // (run, rise) -> (rise - run, rise) reverses the cyclic order.
  auto image = [](const ProjectiveSlope& s) { return ProjectiveSlope(s.rise(), s.rise() - s.run()); };
  if (i.is_full_circle_minus()) return CyclicInterval::full_circle_minus(image(i.start()));
  return CyclicInterval(image(i.end()), image(i.start()));
}

BridgeBraid mirror(const BridgeBraid& k) {
  // Reflecting the arc across x = omega / 2 sends its endpoint t to omega - t, and so sends the
  // window of k onto a cell of the same winding number. For the torus word K(omega, omega-1, m)
  // the window lies below t = m + 1 and its reflection lands on the cell just above an integer.
  const auto w = geodesic_window(k.omega, k.b, k.m);
  if (!w) throw InternalInconsistency(to_string(k) + " has no geodesic window");
  const Rational t = k.omega - (w->first + w->second) / 2;
  const long m = floor(t).get_si();
  BridgeBraid image{k.omega, bridge_crossings(k.omega, t), m};
  if (image.b == 0) {
    // Just above an integer the arc passes no strand: the word is the torus word one twist down.
    image.b = k.omega - 1;
    image.m = m - 1;
  }
  if (image.b < 1 || !geodesic_window(image.omega, image.b, image.m)) {
    throw InternalInconsistency("reflected arc of " + to_string(k) + " does not give a braid");
  }
  return image;
}

bool braid_equivalent(const BridgeBraid& a, const BridgeBraid& b) {
  for (const auto* k : {&a, &b}) {
    if (classify_type(*k).kind != BraidClass::Kind::Strict) {
      throw BraidError(BraidErrorKind::NotStrict, to_string(*k) + " is not a strict braid");
    }
  }
  return a.omega == b.omega && slope_interval(a) == slope_interval(b);
}

unsigned default_threads() {
  if (const char* env = std::getenv("ONEONE_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchReport berge_search(long omega_max, unsigned threads) {
  if (omega_max < 2) throw BraidError(BraidErrorKind::OutOfRange, "omega_max must be at least 2");
  if (threads == 0) threads = default_threads();

  struct Outcome {
    BridgeBraid braid;
    enum { NotKnot, Degenerate, NonStrict, Strict } status;
    std::optional<CyclicInterval> interval;
    std::vector<ProjectiveSlope> fillings;
  };
  std::vector<BridgeBraid> triples;
  for (long w = 2; w <= omega_max; ++w)
    for (long b = 1; b < w; ++b)
      for (long m = 0; m < w; ++m) triples.push_back({w, b, m});

  std::vector<Outcome> outcomes(triples.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) {
      const auto& t = triples[i];
      Outcome o{t, Outcome::Strict, std::nullopt, {}};
      try {
        auto k = braid_validate(t.omega, t.b, t.m);
        if (classify_type(k).kind != BraidClass::Kind::Strict) {
          o.status = Outcome::NonStrict;
        } else {
          o.interval = slope_interval(k);
          o.fillings = solid_torus_fillings(k);
        }
      } catch (const BraidError& e) {
        o.status = e.kind() == BraidErrorKind::NotAKnot ? Outcome::NotKnot : Outcome::Degenerate;
      }
      outcomes[i] = std::move(o);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  SearchReport report;
  report.triples_examined = static_cast<long>(triples.size());
  std::vector<std::pair<long, CyclicInterval>> seen;
  for (auto& o : outcomes) {  // already in (omega, b, m) order
    switch (o.status) {
      case Outcome::NotKnot: ++report.rejected_not_knot; continue;
      case Outcome::Degenerate: ++report.rejected_degenerate; continue;
      case Outcome::NonStrict: ++report.non_strict; continue;
      case Outcome::Strict: break;
    }
    auto key = std::make_pair(o.braid.omega, *o.interval);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      ++report.duplicates;
      continue;
    }
    seen.push_back(key);
    SearchEntry entry{o.braid, *o.interval, o.fillings};
    if (entry.fillings.size() >= 2) report.two_or_more.push_back(entry);
    if (entry.fillings.size() >= 3) report.three_or_more.push_back(std::move(entry));
  }
  return report;
}

}  // namespace oneone
