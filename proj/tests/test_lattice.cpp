#include "oneone/lattice.hpp"

#include "oracles/brute.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace oneone;

TEST_CASE("rationals are canonical and print as num/den") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);  // denominators must be written positive
  CHECK(to_string(q("3")) == "3/1");
  CHECK(to_string(q("0/5")) == "0/1");
  CHECK(frac(q("-1/3")) == q("2/3"));
  CHECK(floor(q("-1/3")) == -1);
  CHECK(ceil(q("7/2")) == 4);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("projective slopes have a unique representation") {
  CHECK(slope("inf") == ProjectiveSlope::infinity());
  CHECK(slope("1/0") == ProjectiveSlope::infinity());
  CHECK(slope("-1/0") == ProjectiveSlope::infinity());
  CHECK(slope("6/4") == slope("3/2"));
  CHECK(slope("-3/2") == ProjectiveSlope(Integer(3), Integer(-2)));
  CHECK(to_string(slope("3")) == "3/1");
  CHECK(to_string(ProjectiveSlope::infinity()) == "1/0");
  CHECK_THROWS(slope("0/0"));
  CHECK(slope("-7/2") < slope("0") );
  CHECK(slope("100") < ProjectiveSlope::infinity());
}

TEST_CASE("interval containment") {
  const CyclicInterval pos(slope("0"), ProjectiveSlope::infinity());
  const CyclicInterval neg(ProjectiveSlope::infinity(), slope("0"));
  CHECK(interval_contains(pos, slope("5/2")));
  CHECK(interval_contains(neg, slope("-7/2")));
  CHECK(interval_contains(CyclicInterval(slope("5/2"), slope("3")), slope("8/3")));
  CHECK_FALSE(interval_contains(pos, slope("-7/2")));
  CHECK(interval_contains(pos, slope("0")));
  CHECK(interval_contains(pos, ProjectiveSlope::infinity()));
  // An arc wrapping through infinity.
  const CyclicInterval wrap(slope("3"), slope("-2"));
  CHECK(interval_contains(wrap, slope("10")));
  CHECK(interval_contains(wrap, ProjectiveSlope::infinity()));
  CHECK(interval_contains(wrap, slope("-5")));
  CHECK_FALSE(interval_contains(wrap, slope("0")));
  const auto all_but_zero = CyclicInterval::full_circle_minus(slope("0"));
  CHECK_FALSE(interval_contains(all_but_zero, slope("0")));
  CHECK(interval_contains(all_but_zero, slope("-1/1000")));
  CHECK(interval_contains(all_but_zero, ProjectiveSlope::infinity()));
}

TEST_CASE("an interval and its reverse split the circle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(0, 12);
  auto random_slope = [&] {
    while (true) {
      long a = num(rng), b = den(rng);
      if (a == 0 && b == 0) continue;
      return ProjectiveSlope(Integer(b == 0 ? 1 : a), Integer(b));
    }
  };
  for (int trial = 0; trial < 2000; ++trial) {
    auto s1 = random_slope(), s2 = random_slope(), s = random_slope();
    if (s1 == s2) continue;
    CyclicInterval i(s1, s2);
    if (s == s1 || s == s2) {
      CHECK(interval_contains(i, s));
      CHECK(interval_contains(i.reversed(), s));
    } else {
      CHECK(interval_contains(i, s) != interval_contains(i.reversed(), s));
    }
  }
}

TEST_CASE("farey gap examples") {
  CHECK(farey_gap(q("7/3"), q("7/2"), q("49/18"), 2) == std::pair{q("5/2"), q("3")});
  CHECK(farey_gap(q("1"), q("2"), q("3/2"), 1) == std::pair{q("1"), q("2")});
  CHECK(farey_gap(q("3/2"), q("2"), q("36/19"), 3) == std::pair{q("5/3"), q("2")});
  CHECK_THROWS_AS(farey_gap(q("2"), q("1"), q("3/2"), 3), std::invalid_argument);
  CHECK_THROWS_AS(farey_gap(q("1"), q("2"), q("3"), 3), std::invalid_argument);
}

TEST_CASE("farey gap agrees with brute-force enumeration and yields Farey neighbours") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> small(1, 25);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Rational lo(small(rng), small(rng)), hi(small(rng), small(rng));
    lo.canonicalize();
    hi.canonicalize();
    if (!(lo < hi)) continue;
    Rational s = lo + (hi - lo) * Rational(small(rng), 26);
    s.canonicalize();
    const long max_den = small(rng) % 9 + 1;
    // s must lie strictly inside and must not itself be a member of the sequence.
    if (s == lo || s == hi || s.get_den() <= max_den) continue;
    auto brute = oracle::farey_gap(lo, hi, s, max_den);
    auto got = farey_gap(lo, hi, s, max_den);
    CHECK(got == brute);
    const bool interior = got.first != lo && got.second != hi;
    if (interior) {
      Integer det = got.first.get_num() * got.second.get_den() - got.second.get_num() * got.first.get_den();
      CHECK(abs(det) == 1);
    }
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("triangle emptiness") {
  CHECK(triangle_empty({1, 0}, {0, 1}));
  CHECK_FALSE(triangle_empty({2, 0}, {0, 1}));
  CHECK(triangle_empty({1, 3}, {2, 5}));
  CHECK(oracle::triangle_lattice_points(1, 3, 2, 5) == 3);
  CHECK_THROWS_AS(triangle_empty({2, 4}, {1, 2}), std::invalid_argument);
}

TEST_CASE("triangle emptiness agrees with a lattice scan") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coord(-50, 50);
  for (int trial = 0; trial < 1500; ++trial) {
    long vx = coord(rng), vy = coord(rng), wx = coord(rng), wy = coord(rng);
    if (vx * wy - vy * wx == 0) continue;
    CHECK(triangle_empty({vx, vy}, {wx, wy}) == (oracle::triangle_lattice_points(vx, vy, wx, wy) == 3));
  }
  // Small vectors hit the empty case often.
  for (long vx = -4; vx <= 4; ++vx)
    for (long vy = -4; vy <= 4; ++vy)
      for (long wx = -4; wx <= 4; ++wx)
        for (long wy = -4; wy <= 4; ++wy) {
          if (vx * wy - vy * wx == 0) continue;
          CHECK(triangle_empty({vx, vy}, {wx, wy}) == (oracle::triangle_lattice_points(vx, vy, wx, wy) == 3));
        }
}

TEST_CASE("winding numbers") {
  std::vector<Point> square{{q("0"), q("0")}, {q("1"), q("0")}, {q("1"), q("1")}, {q("0"), q("1")}};
  CHECK(winding_number(square, {q("1/2"), q("1/2")}) == 1);
  CHECK(winding_number(square, {q("2"), q("2")}) == 0);
  std::vector<Point> reversed(square.rbegin(), square.rend());
  CHECK(winding_number(reversed, {q("1/2"), q("1/2")}) == -1);
  CHECK_THROWS_AS(winding_number(square, {q("1"), q("1/2")}), PointOnCurveError);
  CHECK_THROWS_AS(winding_number(square, {q("0"), q("0")}), PointOnCurveError);
  CHECK(signed_area(square) == 1);
  CHECK(signed_area(reversed) == -1);
}

TEST_CASE("winding numbers add under concatenation at a shared vertex") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coord(-6, 6);
  auto random_loop = [&](const Point& base) {
    std::vector<Point> loop{base};
    for (int i = 0; i < 5; ++i) loop.push_back({Rational(coord(rng), 1), Rational(coord(rng), 1)});
    return loop;
  };
  const Point base{q("1/7"), q("2/9")};
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_loop(base), b = random_loop(base);
    std::vector<Point> both = a;
    both.push_back(base);
    both.insert(both.end(), b.begin() + 1, b.end());
    const Point p{Rational(coord(rng) * 2 + 1, 2), Rational(coord(rng) * 2 + 1, 3)};
    try {
      const long wa = winding_number(a, p), wb = winding_number(b, p);
      CHECK(winding_number(both, p) == wa + wb);
      std::vector<Point> ra(a.rbegin(), a.rend());
      CHECK(winding_number(ra, p) == -wa);
    } catch (const PointOnCurveError&) {
    }
  }
}
