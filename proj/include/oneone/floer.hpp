#pragma once

#include "oneone/diagram.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oneone {

struct ChainSummand {
  long class_id = 0;
  std::vector<IntersectionPoint> generators;  ///< ordered along alpha
  std::vector<std::pair<std::size_t, std::size_t>> v_edges;
  std::vector<std::pair<std::size_t, std::size_t>> h_edges;
  std::vector<long> rel_alexander;  ///< one entry per generator; minimum shifted to 0
};

/// Generators, differential edges and relative Alexander gradings of one class.
/// Bigons with n_w = 0 give v-edges, bigons with n_z = 0 give h-edges, and bigons holding both
/// basepoints give none. Gradings are computed twice (along consecutive bigons and by direct
/// winding numbers) and must agree; otherwise InternalInconsistency is thrown.
ChainSummand chain_summand(const Diagram& d, long class_id);

enum class ChainShape { Positive, Negative, Neither };
std::string to_string(ChainShape s);

/// Positive when the generators can be ordered x_1 .. x_{2n+1} so that the v-edges are exactly
/// x_{2k} -> x_{2k-1} and the h-edges exactly x_{2k} -> x_{2k+1}; negative when the reversed
/// complex is positive.
ChainShape chain_shape_check(const ChainSummand& c);

/// Rank over F_2 of the homology of (generators, edges).
long homology_rank(std::size_t generators, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

enum class LSpaceVerdict { PositiveLSpaceKnot, NegativeLSpaceKnot, Both, NotByThisDiagram };
std::string to_string(LSpaceVerdict v);

/// Verdict from coherence, cross-checked class by class against the chain shapes.
LSpaceVerdict lspace_verdict(const Diagram& d);

class NotAnS3Diagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely supported map exponent -> nonzero coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<long, Integer> terms);

  const std::map<long, Integer>& terms() const { return terms_; }
  Integer coefficient(long exponent) const;
  Integer evaluate_at_one() const;
  bool is_symmetric() const;

  /// "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"; the zero polynomial prints as "0".
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<long, Integer> terms_;
};

/// Symmetrized Alexander polynomial with value 1 at t = 1. Throws NotAnS3Diagram unless
/// |offset.y| = 1.
LaurentPolynomial alexander_polynomial(const Diagram& d);

}  // namespace oneone
