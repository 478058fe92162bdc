#pragma once

// Square translates: values x with a + x a rational square for every a in a
// base set.

#include <cstdint>
#include <vector>

#include "sumprod/arith.hpp"

namespace sumprod {

struct TranslateFamily {
  std::vector<Rational> base;
  std::vector<Rational> translates;
  /// Denominator-clearing factor: entries were multiplied by scale^2.
  Integer scale = 1;
};

struct FamilyCheck {
  bool ok = false;
  /// roots[i][j] = sqrt(base[j] + xs[i]); filled only when ok.
  std::vector<std::vector<Rational>> roots;
};

/// Whether base + x consists of rational squares for every x in xs.
/// Throws ValidationError on duplicate entries in either list.
FamilyCheck verify_family(const std::vector<Rational>& base, const std::vector<Rational>& xs);

/// Every integer x with a + x and b + x both perfect squares, ascending.
/// Each solution comes from a factorization a - b = d e with d = e (mod 2):
/// y1 = (d + e) / 2, y2 = (e - d) / 2, x = y1^2 - a.
std::vector<Integer> pair_translates(const Integer& a, const Integer& b);

/// Every integer x in [-bound, bound] with base + x inside the squares, by
/// walking the squares y^2 above base[0] - bound. bound <= 10^8.
std::vector<Integer> brute_force_translates(const std::vector<Integer>& base,
                                            const Integer& bound);

/// x_0 = 1/2 and x_{i+1} = (x_i^4 - 12) / (2 x_i y_i z_i) with
/// y_i = sqrt(x_i^2 + 2), z_i = sqrt(x_i^2 + 6). Returns |x_0|, ..., |x_depth|,
/// each checked so that {0, 2, 6} + x_i^2 are squares. depth <= 6.
std::vector<Rational> euler_chain(unsigned depth);

/// Multiply every entry by L^2 for the least L making them all integral
/// (L^2 is divisible by every denominator). Squares stay squares.
TranslateFamily clear_denominators(const TranslateFamily& family);

bool is_integral(const TranslateFamily& family);

}  // namespace sumprod
