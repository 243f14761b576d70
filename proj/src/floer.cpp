#include "oneone/floer.hpp"

#include "geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace oneone {

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

std::size_t index_of(const std::vector<IntersectionPoint>& gens, const IntersectionPoint& p) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].lift_parameter == p.lift_parameter) return i;
  }
  throw InternalInconsistency("bigon corner is not a generator of its class");
}

// a(x) - a(y) for the loop from x along alpha to y and back along beta.
long grading_difference(const Diagram& d, const IntersectionPoint& x, const IntersectionPoint& y) {
  const bool x_first = x.lift_parameter < y.lift_parameter;
  auto pts = x_first ? d.arc(x.lift_parameter, y.lift_parameter) : d.arc(y.lift_parameter, x.lift_parameter);
  if (x_first) std::reverse(pts.begin(), pts.end());
  return geom::enclosed_translates(pts, Point{0, 0}) - geom::enclosed_translates(pts, d.w());
}

// Walks a path graph from a chosen end and checks the zig-zag pattern.
bool is_positive_chain(std::size_t n, const Edges& v, const Edges& h) {
  if (n == 0) return false;
  if (v.size() + h.size() + 1 != n) return false;
  if (n == 1) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : v) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (const auto& e : h) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2 || adj[i].empty()) return false;
    if (adj[i].size() == 1) ends.push_back(i);
  }
  if (ends.size() != 2) return false;

  auto has = [](const Edges& es, std::size_t s, std::size_t t) {
    return std::find(es.begin(), es.end(), std::make_pair(s, t)) != es.end();
  };
  for (std::size_t start : ends) {
    std::vector<std::size_t> order{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    while (order.size() < n) {
      std::size_t cur = order.back();
      std::size_t next = n;
      for (std::size_t nb : adj[cur]) {
        if (!seen[nb]) next = nb;
      }
      if (next == n) break;
      seen[next] = true;
      order.push_back(next);
    }
    if (order.size() != n) return false;  // a cycle plus stray vertices
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) {
      // order[i] is x_{i+1}; an even label sends an h-edge forward, an odd one receives a v-edge.
      if ((i + 1) % 2 == 0) ok = has(h, order[i], order[i + 1]);
      else ok = has(v, order[i + 1], order[i]);
    }
    if (ok) return true;
  }
  return false;
}

Edges reversed(const Edges& es) {
  Edges out;
  for (const auto& e : es) out.emplace_back(e.second, e.first);
  return out;
}

}  // namespace

std::string to_string(ChainShape s) {
  switch (s) {
    case ChainShape::Positive: return "positive";
    case ChainShape::Negative: return "negative";
    case ChainShape::Neither: return "neither";
  }
  return "neither";
}

std::string to_string(LSpaceVerdict v) {
  switch (v) {
    case LSpaceVerdict::PositiveLSpaceKnot: return "PositiveLSpaceKnot";
    case LSpaceVerdict::NegativeLSpaceKnot: return "NegativeLSpaceKnot";
    case LSpaceVerdict::Both: return "Both";
    case LSpaceVerdict::NotByThisDiagram: return "NotByThisDiagram";
  }
  return "NotByThisDiagram";
}

ChainSummand chain_summand(const Diagram& d, long class_id) {
  ChainSummand c;
  c.class_id = class_id;
  c.generators = class_intersections(d, class_id);
  const std::size_t n = c.generators.size();
  if (n == 0) throw InternalInconsistency("class without generators");

  // Path order along the lifted beta line; consecutive generators are bigon corners.
  std::vector<std::size_t> along(n);
  std::iota(along.begin(), along.end(), 0);
  std::sort(along.begin(), along.end(), [&](std::size_t l, std::size_t r) {
    return c.generators[l].lift_parameter < c.generators[r].lift_parameter;
  });

  std::vector<long> grading(n, 0);
  std::vector<bool> known(n, false);
  known[along[0]] = true;
  for (const auto& bg : bigons(d, class_id)) {
    std::size_t s = index_of(c.generators, bg.source);
    std::size_t t = index_of(c.generators, bg.target);
    if (bg.n_w == 0 && bg.n_z >= 1) c.v_edges.emplace_back(s, t);
    if (bg.n_z == 0 && bg.n_w >= 1) c.h_edges.emplace_back(s, t);
    // Bigons come in path order, so one corner is always graded already.
    const long drop = bg.n_z - bg.n_w;
    if (known[s] && !known[t]) {
      grading[t] = grading[s] - drop;
      known[t] = true;
    } else if (known[t] && !known[s]) {
      grading[s] = grading[t] + drop;
      known[s] = true;
    } else if (!known[s] && !known[t]) {
      throw InternalInconsistency("bigons are not consecutive along beta");
    } else if (grading[s] - grading[t] != drop) {
      throw InternalInconsistency("bigon gradings are not consistent");
    }
  }
  if (std::find(known.begin(), known.end(), false) != known.end()) {
    throw InternalInconsistency("bigons do not connect every generator");
  }

  // Independent route: winding numbers of the loop joining each generator to the reference.
  const auto& ref = c.generators[along[0]];
  for (std::size_t i = 0; i < n; ++i) {
    if (i == along[0]) continue;
    long diff = grading_difference(d, ref, c.generators[i]);
    if (grading[along[0]] - grading[i] != diff) {
      throw InternalInconsistency("Alexander gradings disagree between bigon and winding computations");
    }
  }
  long lowest = *std::min_element(grading.begin(), grading.end());
  for (auto& g : grading) g -= lowest;
  c.rel_alexander = std::move(grading);
  return c;
}

long homology_rank(std::size_t n, const Edges& edges) {
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  for (const auto& [s, t] : edges) rows[t][s / 64] ^= std::uint64_t{1} << (s % 64);
  long rank = 0;
  for (std::size_t col = 0; col < n && static_cast<std::size_t>(rank) < n; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < n && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != static_cast<std::size_t>(rank) && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
      }
    }
    ++rank;
  }
  return static_cast<long>(n) - 2 * rank;
}

ChainShape chain_shape_check(const ChainSummand& c) {
  const std::size_t n = c.generators.size();
  ChainShape shape = ChainShape::Neither;
  if (is_positive_chain(n, c.v_edges, c.h_edges)) shape = ChainShape::Positive;
  else if (is_positive_chain(n, reversed(c.v_edges), reversed(c.h_edges))) shape = ChainShape::Negative;
  if (shape != ChainShape::Neither &&
      (homology_rank(n, c.v_edges) != 1 || homology_rank(n, c.h_edges) != 1)) {
    throw InternalInconsistency("chain-shaped class does not have rank-one homology");
  }
  return shape;
}

LSpaceVerdict lspace_verdict(const Diagram& d) {
  LSpaceVerdict verdict = LSpaceVerdict::NotByThisDiagram;
  switch (coherence(d)) {
    case CoherenceVerdict::Positive: verdict = LSpaceVerdict::PositiveLSpaceKnot; break;
    case CoherenceVerdict::Negative: verdict = LSpaceVerdict::NegativeLSpaceKnot; break;
    case CoherenceVerdict::Both: verdict = LSpaceVerdict::Both; break;
    case CoherenceVerdict::Incoherent: verdict = LSpaceVerdict::NotByThisDiagram; break;
  }

  bool all_positive = true;
  bool all_negative = true;
  for (long cls = 0; cls < d.num_classes(); ++cls) {
    auto summand = chain_summand(d, cls);
    if (summand.generators.size() == 1) continue;  // degenerate chain of either sign
    auto shape = chain_shape_check(summand);
    if (shape != ChainShape::Positive) all_positive = false;
    if (shape != ChainShape::Negative) all_negative = false;
  }
  LSpaceVerdict from_chains = LSpaceVerdict::NotByThisDiagram;
  if (all_positive && all_negative) from_chains = LSpaceVerdict::Both;
  else if (all_positive) from_chains = LSpaceVerdict::PositiveLSpaceKnot;
  else if (all_negative) from_chains = LSpaceVerdict::NegativeLSpaceKnot;

  if (from_chains != verdict) {
    throw InternalInconsistency("coherence says " + to_string(verdict) + " but the chain shapes say " +
                                to_string(from_chains));
  }
  return verdict;
}

// --- Laurent polynomials --------------------------------------------------------

LaurentPolynomial::LaurentPolynomial(std::map<long, Integer> terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

Integer LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    std::string var = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    if (mag != 1 || e == 0) out += mag.get_str();
    out += var;
  }
  return out;
}

LaurentPolynomial alexander_polynomial(const Diagram& d) {
  if (d.num_classes() != 1) {
    throw NotAnS3Diagram("Alexander polynomial needs a diagram of a knot in S^3 (offset.y = +-1)");
  }
  auto summand = chain_summand(d, 0);
  std::map<long, Integer> terms;
  for (std::size_t i = 0; i < summand.generators.size(); ++i) {
    terms[summand.rel_alexander[i]] += summand.generators[i].sign;
  }
  LaurentPolynomial raw(std::move(terms));
  if (raw.terms().empty()) throw InternalInconsistency("Alexander polynomial vanished");
  long lo = raw.terms().begin()->first;
  long hi = raw.terms().rbegin()->first;
  if ((lo + hi) % 2 != 0) throw InternalInconsistency("Alexander polynomial cannot be centred");
  const long shift = -(lo + hi) / 2;
  const Integer at_one = raw.evaluate_at_one();
  if (abs(at_one) != 1) throw InternalInconsistency("Alexander polynomial has |value at 1| != 1");
  std::map<long, Integer> centred;
  for (const auto& [e, c] : raw.terms()) centred[e + shift] = c * at_one;
  LaurentPolynomial result(std::move(centred));
  if (!result.is_symmetric()) throw InternalInconsistency("Alexander polynomial is not symmetric");
  return result;
}

}  // namespace oneone
