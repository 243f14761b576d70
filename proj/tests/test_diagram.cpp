#include "oneone/diagram.hpp"

#include "oracles/brute.hpp"
#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace oneone;

namespace {

DiagramData raw(std::vector<std::pair<const char*, const char*>> pts, LatticeVector offset,
                std::pair<const char*, const char*> w) {
  DiagramData d;
  for (auto [x, y] : pts) d.beta.push_back({q(x), q(y)});
  d.offset = offset;
  d.w = {q(w.first), q(w.second)};
  return d;
}

DiagramErrorKind error_kind(DiagramData data) {
  try {
    Diagram::validate(std::move(data));
  } catch (const DiagramError& e) {
    return e.kind();
  }
  FAIL("validation unexpectedly succeeded");
  return DiagramErrorKind::Malformed;
}

// The mirror image under (x, y) -> (x, -y); alpha, z and the lattice are preserved.
Diagram reflect(const Diagram& d) {
  DiagramData r;
  for (const auto& p : d.beta()) r.beta.push_back({p.x, -p.y});
  r.offset = {d.offset().x, -d.offset().y};
  r.w = {d.w().x, -d.w().y};
  return Diagram::validate(std::move(r));
}

Diagram translate(const Diagram& d, long dx, long dy) {
  DiagramData r = d.data();
  for (auto& p : r.beta) p = {p.x + dx, p.y + dy};
  return Diagram::validate(std::move(r));
}

// Every realizable standard form with p <= max_p.
void for_each_standard_form(long max_p, const std::function<void(long, long, long, long, const Diagram&)>& f) {
  for (long p = 1; p <= max_p; ++p)
    for (long qq = 0; 2 * qq <= p; ++qq)
      for (long r = 0; 2 * qq + r <= p; ++r)
        for (long s = 0; s < p; ++s) {
          try {
            f(p, qq, r, s, from_standard_form(p, qq, r, s));
          } catch (const DiagramError& e) {
            CHECK(e.kind() == DiagramErrorKind::NotRealizable);
          }
        }
}

CoherenceVerdict flipped(CoherenceVerdict v) {
  if (v == CoherenceVerdict::Positive) return CoherenceVerdict::Negative;
  if (v == CoherenceVerdict::Negative) return CoherenceVerdict::Positive;
  return v;
}

}  // namespace

TEST_CASE("validation accepts the fixtures") {
  for (const char* name : {"t27.json", "t27_alt.json", "five2.json", "five2_alt.json", "unknot.json",
                           "lens_simple.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load(name));
  }
}

TEST_CASE("validation names the violated invariant") {
  CHECK(error_kind(raw({{"1/2", "3/4"}}, {2, 4}, {"0", "9/16"})) == DiagramErrorKind::NonPrimitiveOffset);
  CHECK(error_kind(raw({{"1/2", "3/4"}}, {1, 0}, {"0", "9/16"})) == DiagramErrorKind::DegenerateOffset);
  CHECK(error_kind(raw({{"1/10", "1/10"}, {"9/10", "3/10"}, {"1/2", "1/20"}}, {0, 1}, {"1/4", "3/4"})) ==
        DiagramErrorKind::SelfIntersecting);
  CHECK(error_kind(raw({{"1/2", "3/4"}}, {0, 1}, {"0", "1/2"})) == DiagramErrorKind::BasepointOnCurve);
  CHECK(error_kind(raw({{"1/2", "3/4"}}, {0, 1}, {"1/2", "1/5"})) == DiagramErrorKind::BasepointOnCurve);
  CHECK(error_kind(raw({{"0", "3/4"}}, {0, 1}, {"1/2", "1/5"})) == DiagramErrorKind::BasepointOnCurve);
  CHECK(error_kind(raw({{"1/2", "1/4"}, {"1/3", "1/2"}, {"1/4", "1/2"}, {"1/5", "3/4"}}, {0, 1}, {"0", "9/16"})) ==
        DiagramErrorKind::NotTransverse);
  CHECK(error_kind(raw({}, {0, 1}, {"0", "9/16"})) == DiagramErrorKind::Malformed);
}

TEST_CASE("validation removes collinear vertices") {
  auto d = Diagram::validate(raw({{"1/2", "1/4"}, {"1/2", "1/3"}, {"1/2", "2/3"}}, {0, 1}, {"0", "9/16"}));
  CHECK(d.num_vertices() == 1);
}

TEST_CASE("intersections of the fixtures") {
  SUBCASE("T(2,7)") {
    auto d = load("t27.json");
    auto pts = intersections(d);
    CHECK(pts.size() == 7);
    CHECK(d.num_classes() == 1);
    int signed_count = 0;
    for (const auto& p : pts) signed_count += p.sign;
    CHECK(std::abs(signed_count) == 1);
    auto brute = oracle::crossings(d);
    CHECK(brute.size() == 7);
    int brute_signed = 0;
    for (const auto& c : brute) brute_signed += c.upward ? 1 : -1;
    CHECK(brute_signed == signed_count);
  }
  SUBCASE("simple knot in L(5,2)") {
    auto d = load("lens_simple.json");
    auto pts = intersections(d);
    CHECK(pts.size() == 5);
    CHECK(d.num_classes() == 5);
    for (const auto& p : pts) CHECK(p.sign == pts.front().sign);
    std::set<long> classes;
    for (const auto& p : pts) classes.insert(p.class_id);
    CHECK(classes.size() == 5);
  }
  SUBCASE("unknot") {
    auto d = load("unknot.json");
    CHECK(intersections(d).size() == 1);
    CHECK(d.num_classes() == 1);
  }
}

TEST_CASE("bigons of T(2,7)") {
  auto d = load("t27.json");
  auto bgs = bigons(d, 0);
  int upper = 0, lower = 0;
  for (const auto& b : bgs) {
    auto loop = bigon_boundary(d, b);
    CHECK(b.n_z == oracle::enclosed_lifts(loop, Point{0, 0}));
    CHECK(b.n_w == oracle::enclosed_lifts(loop, d.w()));
    if (b.half_plane == HalfPlane::Upper) {
      ++upper;
      CHECK(b.n_w == 1);
      CHECK(b.n_z == 0);
      CHECK(b.source.lift_x < b.target.lift_x);
    } else {
      ++lower;
      CHECK(b.n_z == 1);
      CHECK(b.n_w == 0);
      CHECK(b.source.lift_x > b.target.lift_x);
    }
  }
  CHECK(upper == 3);
  CHECK(lower == 3);
}

TEST_CASE("simple-knot diagrams have no bigons") {
  auto d = load("lens_simple.json");
  for (long c = 0; c < d.num_classes(); ++c) CHECK(bigons(d, c).empty());
  CHECK(bigons(load("unknot.json"), 0).empty());
}

TEST_CASE("the 5_2 rainbows over w are not all oriented the same way") {
  for (const char* name : {"five2.json", "five2_alt.json"}) {
    CAPTURE(name);
    auto d = load(name);
    bool leftward = false, rightward = false;
    for (const auto& b : bigons(d, 0)) {
      if (b.half_plane != HalfPlane::Upper) continue;
      (b.runs_leftward() ? leftward : rightward) = true;
    }
    CHECK(leftward);
    CHECK(rightward);
  }
}

TEST_CASE("graphic signs and coherence of the fixtures") {
  for (const char* name : {"t27.json", "t27_alt.json"}) {
    CAPTURE(name);
    auto d = load(name);
    CHECK(graphic_sign(d, 0) == GraphicSign::Positive);
    CHECK(coherence(d) == CoherenceVerdict::Positive);
  }
  for (const char* name : {"five2.json", "five2_alt.json"}) {
    CAPTURE(name);
    auto d = load(name);
    CHECK(graphic_sign(d, 0) == GraphicSign::None);
    CHECK(coherence(d) == CoherenceVerdict::Incoherent);
  }
  CHECK(graphic_sign(load("unknot.json"), 0) == GraphicSign::Either);
  CHECK(coherence(load("unknot.json")) == CoherenceVerdict::Both);
  CHECK(coherence(load("lens_simple.json")) == CoherenceVerdict::Both);
}

TEST_CASE("standard forms") {
  SUBCASE("the fixtures are standard forms") {
    CHECK(diagram_to_string(from_standard_form(7, 3, 0, 4)) == diagram_to_string(load("t27.json")));
    CHECK(diagram_to_string(from_standard_form(7, 3, 1, 3)) == diagram_to_string(load("t27_alt.json")));
    CHECK(diagram_to_string(from_standard_form(7, 2, 0, 4)) == diagram_to_string(load("five2.json")));
    CHECK(diagram_to_string(from_standard_form(7, 3, 0, 2)) == diagram_to_string(load("five2_alt.json")));
  }
  SUBCASE("K(21,4,4,11) is coherent") {
    auto d = from_standard_form(21, 4, 4, 11);
    CHECK(is_reduced(d));
    CHECK(intersections(d).size() == 21);
    CHECK(coherence(d) == CoherenceVerdict::Positive);
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(from_standard_form(0, 0, 0, 0), DiagramError);
    CHECK_THROWS_AS(from_standard_form(5, 3, 0, 0), DiagramError);
    CHECK_THROWS_AS(from_standard_form(5, 1, 0, 5), DiagramError);
    CHECK_THROWS_AS(from_standard_form(5, 1, 4, 0), DiagramError);
  }
}

TEST_CASE("invariants over every standard form with p <= 9") {
  long count = 0;
  for_each_standard_form(9, [&](long p, long qq, long r, long s, const Diagram& d) {
    CAPTURE(p);
    CAPTURE(qq);
    CAPTURE(r);
    CAPTURE(s);
    ++count;
    CHECK(is_reduced(d));
    CHECK(d.num_classes() == std::labs(d.offset().y));
    std::size_t total = 0;
    bool all_same_sign = true;
    const auto pts = intersections(d);
    CHECK(static_cast<long>(pts.size()) == p);
    for (const auto& pt : pts) all_same_sign = all_same_sign && pt.sign == pts.front().sign;
    bool single_points = true;
    for (long c = 0; c < d.num_classes(); ++c) {
      auto cls = class_intersections(d, c);
      total += cls.size();
      CHECK(cls.size() % 2 == 1);
      single_points = single_points && cls.size() == 1;
      int signed_count = 0;
      for (const auto& pt : cls) signed_count += pt.sign;
      CHECK(std::abs(signed_count) == 1);
    }
    CHECK(total == pts.size());
    const auto verdict = coherence(d);
    CHECK(verdict == coherence_from_graphic(d));
    CHECK((verdict == CoherenceVerdict::Both) == single_points);
    CHECK(single_points == all_same_sign);
    for (long c = 0; c < d.num_classes(); ++c) {
      for (const auto& b : bigons(d, c)) {
        CHECK(b.n_z + b.n_w >= 1);
        if (verdict != CoherenceVerdict::Incoherent) CHECK((b.n_z == 0 || b.n_w == 0));
      }
    }
    CHECK(coherence(reflect(d)) == flipped(verdict));
    CHECK(coherence(translate(d, 3, -2)) == verdict);
  });
  CHECK(count > 200);
}

TEST_CASE("graphic sign matches coherence on the fixtures' reflections") {
  auto d = reflect(load("t27.json"));
  CHECK(graphic_sign(d, 0) == GraphicSign::Negative);
  CHECK(coherence(d) == CoherenceVerdict::Negative);
  CHECK(coherence(reflect(load("five2.json"))) == CoherenceVerdict::Incoherent);
}
