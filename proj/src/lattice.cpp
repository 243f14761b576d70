#include "oneone/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace oneone {

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

int sign(const Rational& r) { return sgn(r); }
int sign(const Integer& r) { return sgn(r); }

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer out of range: " + n.get_str());
  return n.get_si();
}

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Rational orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }

// --- ProjectiveSlope -------------------------------------------------------

ProjectiveSlope::ProjectiveSlope(Integer rise, Integer run) : rise_(std::move(rise)), run_(std::move(run)) {
  if (rise_ == 0 && run_ == 0) throw std::invalid_argument("slope 0/0 is undefined");
  if (run_ < 0) {
    run_ = -run_;
    rise_ = -rise_;
  }
  Integer g = gcd(rise_, run_);
  rise_ /= g;
  run_ /= g;
  if (run_ == 0) rise_ = 1;
}

ProjectiveSlope::ProjectiveSlope(const Rational& value)
    : rise_(value.get_num()), run_(value.get_den()) {}

ProjectiveSlope ProjectiveSlope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  auto slash = text.find('/');
  if (slash != std::string_view::npos && text.substr(slash + 1) == "0") {
    Rational num = parse_rational(text.substr(0, slash));
    if (num == 0 || num.get_den() != 1) throw std::invalid_argument("malformed slope");
    return infinity();
  }
  return ProjectiveSlope(parse_rational(text));
}

Rational ProjectiveSlope::value() const {
  if (is_infinite()) throw std::domain_error("infinite slope has no rational value");
  return Rational(rise_, run_);
}

std::strong_ordering operator<=>(const ProjectiveSlope& a, const ProjectiveSlope& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value(), b.value());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ProjectiveSlope& s) {
  return s.rise().get_str() + "/" + s.run().get_str();
}

// --- CyclicInterval --------------------------------------------------------

CyclicInterval::CyclicInterval(ProjectiveSlope start, ProjectiveSlope end)
    : CyclicInterval(std::move(start), std::move(end), false) {
  if (start_ == end_) throw std::invalid_argument("cyclic interval needs distinct endpoints");
}

CyclicInterval::CyclicInterval(ProjectiveSlope start, ProjectiveSlope end, bool full_minus)
    : start_(std::move(start)), end_(std::move(end)), full_minus_(full_minus) {}

CyclicInterval CyclicInterval::full_circle_minus(ProjectiveSlope point) {
  return CyclicInterval(point, point, true);
}

CyclicInterval CyclicInterval::reversed() const {
  if (full_minus_) throw std::logic_error("full_circle_minus has no reversed arc");
  return CyclicInterval(end_, start_);
}

bool interval_contains(const CyclicInterval& interval, const ProjectiveSlope& s) {
  if (interval.is_full_circle_minus()) return s != interval.start();
  const auto& a = interval.start();
  const auto& b = interval.end();
  if (a < b) return a <= s && s <= b;
  return s >= a || s <= b;
}

// --- Farey gaps --------------------------------------------------------------

std::pair<Rational, Rational> farey_gap(const Rational& lo, const Rational& hi, const Rational& s,
                                        long max_den) {
  if (lo >= hi) throw std::invalid_argument("farey_gap: lo must be below hi");
  if (s <= lo || s >= hi) throw std::invalid_argument("farey_gap: s must lie strictly inside (lo, hi)");
  if (s.get_den() <= max_den) throw std::invalid_argument("farey_gap: s is itself a sequence member");
  Rational below = lo;
  Rational above = hi;
  for (long d = 1; d <= max_den; ++d) {
    Rational down(floor(s * d), d);
    Rational up(ceil(s * d), d);
    down.canonicalize();
    up.canonicalize();
    if (down > below) below = down;
    if (up < above) above = up;
  }
  return {below, above};
}

bool triangle_empty(const LatticeVector& v, const LatticeVector& w) {
  Integer det = Integer(v.x) * w.y - Integer(v.y) * w.x;
  if (det == 0) throw std::invalid_argument("triangle_empty: vectors are parallel");
  return abs(det) == 1;
}

// --- Winding numbers ---------------------------------------------------------

long winding_number(std::span<const Point> loop, const Point& p) {
  long wn = 0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    Rational o = orient(a, b, p);
    if (o == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
      throw PointOnCurveError("winding_number: point lies on the loop");
    }
    if (a.y <= p.y) {
      if (b.y > p.y && o > 0) ++wn;
    } else if (b.y <= p.y && o < 0) {
      --wn;
    }
  }
  return wn;
}

Rational signed_area(std::span<const Point> loop) {
  Rational twice = 0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(loop[i], loop[(i + 1) % n]);
  return twice / 2;
}

}  // namespace oneone
