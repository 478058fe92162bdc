#pragma once

// Rational points on S^2 = T^3 + alpha T + beta, the map from points to
// common translates of three squares, and matchings built from translate
// families.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumprod/arith.hpp"
#include "sumprod/graphs.hpp"
#include "sumprod/interval.hpp"
#include "sumprod/translates.hpp"

namespace sumprod {

class CurvePoint {
 public:
  /// The point at infinity.
  CurvePoint() = default;
  CurvePoint(Rational t, Rational s);
  static CurvePoint infinity() { return {}; }

  bool is_infinity() const { return infinity_; }
  /// Throws DomainError on the point at infinity.
  const Rational& t() const;
  const Rational& s() const;

  std::string to_string() const;
  friend bool operator==(const CurvePoint& a, const CurvePoint& b);

 private:
  bool infinity_ = true;
  Rational t_;
  Rational s_;
};

struct EllipticCurve {
  Rational alpha;
  Rational beta;

  /// Throws DegeneracyError when 4 alpha^3 + 27 beta^2 = 0.
  EllipticCurve(Rational alpha, Rational beta);

  /// -16 (4 alpha^3 + 27 beta^2).
  Rational discriminant() const;
  bool contains(const CurvePoint& p) const;
  /// T^3 + alpha T + beta.
  Rational rhs(const Rational& t) const;
};

/// Three distinct rational squares with their nonnegative roots.
class SquareTriple {
 public:
  /// Throws DomainError on duplicates, a3 == 0 or a non-square entry.
  SquareTriple(Rational a1, Rational a2, Rational a3);

  const Rational& a(int i) const { return a_[i - 1]; }
  const Rational& root(int i) const { return r_[i - 1]; }

 private:
  Rational a_[3];
  Rational r_[3];
};

/// alpha = (-sum a_i^2 + sum_{i<j} a_i a_j) / (3 a3^2),
/// beta = (2 sum a_i^3 - 3 sum_{i!=j} a_i^2 a_j + 12 a1 a2 a3) / (27 a3^3).
/// The a_i need not be squares. Throws DomainError for a3 == 0 or repeated
/// entries and DegeneracyError for a singular curve.
EllipticCurve curve_from_triple(const Rational& a1, const Rational& a2, const Rational& a3);
EllipticCurve curve_from_triple(const SquareTriple& triple);

/// Coefficients of the change of variables for one triple. With
/// Y1 = r1 + u, Y2 = r2 + t u and u = 2 (r1 - t r2) / (t^2 - 1),
///   Y3^2 (t^2 - 1)^2 / a3 = Q(t) = t^4 - 4c t^3 + e t^2 - 4c t + 1,
/// c = r1 r2 / a3, e = (4 a1 + 4 a2 - 2 a3) / a3. Completing the square,
/// Q = G^2 + H with G = t^2 + g1 t + g0 and H = h1 t + h0, where
///   g1 = -2c, g0 = (e - 4c^2) / 2, h1 = 4c (g0 - 1), h0 = 1 - g0^2.
/// T0 = G(t) + sqrt(Q(t)) and S0 = t T0 then satisfy
///   2 S0^2 + 2 g1 S0 T0 + h1 S0 = T0^3 - 2 g0 T0^2 - h0 T0,
/// and X = T0/2, Y = S0/2 + g1 T0/4 + h1/8 turn this into
///   Y^2 = X^3 + b2 X^2 + b1 X + b0,
///   b2 = g1^2/4 - g0, b1 = g1 h1/8 - h0/4, b0 = h1^2/64.
/// Finally T = X + b2/3 and S = Y reach the short form.
struct CurveMap {
  Rational c, e, g1, g0, h1, h0, b2, b1, b0;

  explicit CurveMap(const SquareTriple& triple);
  EllipticCurve curve() const;
  /// (T0, S0) -> (T, S).
  CurvePoint forward(const Rational& t0, const Rational& s0) const;
  /// (T, S) -> (T0, S0) for an affine point.
  std::pair<Rational, Rational> inverse(const CurvePoint& p) const;
  /// Q(t).
  Rational quartic(const Rational& t) const;
};

/// The point reached from parameter t when Q(t) is a rational square;
/// branch selects the sign of sqrt(Q(t)). nullopt when Q(t) is not a square
/// or T0 = 0.
std::optional<CurvePoint> point_from_parameter(const SquareTriple& triple, const Rational& t,
                                               int branch);

CurvePoint group_neg(const EllipticCurve& c, const CurvePoint& p);

/// Chord-tangent addition. Throws ValidationError for points off the curve.
CurvePoint group_add(const EllipticCurve& c, const CurvePoint& p, const CurvePoint& q);

/// k p by double-and-add; negative k uses -p.
CurvePoint group_mul(const EllipticCurve& c, const CurvePoint& p, std::int64_t k);

/// Smallest k <= limit with k p = infinity, or nullopt.
std::optional<unsigned> small_order(const EllipticCurve& c, const CurvePoint& p,
                                    unsigned limit = 16);

/// Affine points with T = p/q, gcd(p, q) = 1, 1 <= q <= denominator_cap and
/// |p| <= bound q. Both signs of S are listed. bound <= 10^4.
std::vector<CurvePoint> scan_rational_points(const EllipticCurve& c, std::int64_t bound,
                                             std::int64_t denominator_cap = 4);

struct TranslatePoint {
  Rational x;     // the common translate X
  Rational t;     // slope parameter
  Rational u;
  Rational y[3];  // Y_i >= 0 with Y_i^2 = X + a_i
};

/// Back-substitution of a curve point into a translate X with X + a_i all
/// squares. Throws DegeneracyError for infinity, T0 = 0, t = +-1, u = 0 and
/// the trivial translate X = 0 (every 2-torsion point lands on one of these);
/// InternalError if the squares do not check out.
TranslatePoint point_to_translate(const SquareTriple& triple, const CurvePoint& p);

struct CurveFamily {
  /// {a1, a2, a3} with the translates, denominators cleared.
  TranslateFamily family;
  /// The translates before scaling, in order of discovery.
  std::vector<Rational> translates;
  /// Multiples k of the generator that produced them.
  std::vector<unsigned> multiples;
  /// Fewer than the requested count were found.
  bool partial = false;
};

/// Maps k G, k = 1, 2, ... through point_to_translate, skipping degenerate
/// multiples and repeats, until `count` translates are found or k passes
/// count + 16. Throws DomainError when G has order <= 16.
CurveFamily translate_family_from_curve(const SquareTriple& triple, const CurvePoint& generator,
                                        std::size_t count);

struct FamilyMatching {
  Graph graph;
  Labeling labels;
  std::vector<Integer> sums;
  std::vector<Integer> products;
};

/// Matching with num_sums * num_products edges, num_sums sums and
/// num_products products from an integral family. One side is shifted to
/// contain 0 if needed (so the other side is all squares) and both sides are
/// scaled by 4 unless 4 already divides every entry. Sums are square roots
/// from the square side, products -y/4 for nonzero y on the other side;
/// edge (s, p) carries the two roots of z^2 - s z + p. Sums are kept
/// greedily when their solution sets avoid all earlier ones. Product sets
/// are tried in lexicographic order until one admits num_sums sums. Throws
/// SizeError when no choice reaches num_sums.
FamilyMatching matching_from_family(const TranslateFamily& family, std::size_t num_sums,
                                    std::size_t num_products);

/// max(log |num T|, log |den T|), natural log. Throws DomainError at infinity.
Interval naive_height(const CurvePoint& p);

/// 1 + (k - 3) 2^(k - 2), for k >= 3.
Integer genus_of_system(unsigned k);

}  // namespace sumprod
