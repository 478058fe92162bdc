#include "sumprod/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sumprod/errors.hpp"

namespace sumprod {

CurvePoint::CurvePoint(Rational t, Rational s) : infinity_(false), t_(std::move(t)), s_(std::move(s)) {
  t_.canonicalize();
  s_.canonicalize();
}

const Rational& CurvePoint::t() const {
  if (infinity_) throw DomainError("the point at infinity has no coordinates");
  return t_;
}

const Rational& CurvePoint::s() const {
  if (infinity_) throw DomainError("the point at infinity has no coordinates");
  return s_;
}

std::string CurvePoint::to_string() const {
  if (infinity_) return "infinity";
  return "(" + sumprod::to_string(t_) + ", " + sumprod::to_string(s_) + ")";
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
  return a.t_ == b.t_ && a.s_ == b.s_;
}

EllipticCurve::EllipticCurve(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
  alpha.canonicalize();
  beta.canonicalize();
  if (discriminant() == 0) {
    throw DegeneracyError("singular curve: 4 alpha^3 + 27 beta^2 = 0");
  }
}

Rational EllipticCurve::discriminant() const {
  return -16 * (4 * alpha * alpha * alpha + 27 * beta * beta);
}

Rational EllipticCurve::rhs(const Rational& t) const { return t * t * t + alpha * t + beta; }

bool EllipticCurve::contains(const CurvePoint& p) const {
  return p.is_infinity() || p.s() * p.s() == rhs(p.t());
}

SquareTriple::SquareTriple(Rational a1, Rational a2, Rational a3)
    : a_{std::move(a1), std::move(a2), std::move(a3)} {
  for (auto& a : a_) a.canonicalize();
  if (a_[0] == a_[1] || a_[0] == a_[2] || a_[1] == a_[2]) {
    throw DomainError("square triple entries must be distinct");
  }
  if (a_[2] == 0) throw DomainError("a3 must be nonzero");
  for (int i = 0; i < 3; ++i) {
    auto r = rational_square_root(a_[i]);
    if (!r) throw DomainError("a" + std::to_string(i + 1) + " = " + to_string(a_[i]) + " is not a square");
    r_[i] = *r;
  }
}

EllipticCurve curve_from_triple(const Rational& a1, const Rational& a2, const Rational& a3) {
  if (a1 == a2 || a1 == a3 || a2 == a3) throw DomainError("triple entries must be distinct");
  if (a3 == 0) throw DomainError("a3 must be nonzero");
  const Rational sum_sq = a1 * a1 + a2 * a2 + a3 * a3;
  const Rational sum_pairs = a1 * a2 + a1 * a3 + a2 * a3;
  const Rational sum_cubes = a1 * a1 * a1 + a2 * a2 * a2 + a3 * a3 * a3;
  const Rational mixed = a1 * a1 * (a2 + a3) + a2 * a2 * (a1 + a3) + a3 * a3 * (a1 + a2);
  const Rational alpha = (-sum_sq + sum_pairs) / (3 * a3 * a3);
  const Rational beta = (2 * sum_cubes - 3 * mixed + 12 * a1 * a2 * a3) / (27 * a3 * a3 * a3);
  return EllipticCurve(alpha, beta);
}

EllipticCurve curve_from_triple(const SquareTriple& triple) {
  return curve_from_triple(triple.a(1), triple.a(2), triple.a(3));
}

CurveMap::CurveMap(const SquareTriple& triple) {
  const Rational& a1 = triple.a(1);
  const Rational& a2 = triple.a(2);
  const Rational& a3 = triple.a(3);
  c = triple.root(1) * triple.root(2) / a3;
  e = (4 * a1 + 4 * a2 - 2 * a3) / a3;
  g1 = -2 * c;
  g0 = (e - 4 * c * c) / 2;
  h1 = 4 * c * (g0 - 1);
  h0 = 1 - g0 * g0;
  b2 = g1 * g1 / 4 - g0;
  b1 = g1 * h1 / 8 - h0 / 4;
  b0 = h1 * h1 / 64;
}

EllipticCurve CurveMap::curve() const {
  return EllipticCurve(b1 - b2 * b2 / 3, b0 - b1 * b2 / 3 + 2 * b2 * b2 * b2 / 27);
}

CurvePoint CurveMap::forward(const Rational& t0, const Rational& s0) const {
  const Rational x = t0 / 2;
  return CurvePoint(x + b2 / 3, s0 / 2 + g1 * t0 / 4 + h1 / 8);
}

std::pair<Rational, Rational> CurveMap::inverse(const CurvePoint& p) const {
  const Rational x = p.t() - b2 / 3;
  const Rational t0 = 2 * x;
  const Rational s0 = 2 * (p.s() - g1 * t0 / 4 - h1 / 8);
  return {t0, s0};
}

Rational CurveMap::quartic(const Rational& t) const {
  const Rational t2 = t * t;
  return t2 * t2 - 4 * c * t2 * t + e * t2 - 4 * c * t + 1;
}

std::optional<CurvePoint> point_from_parameter(const SquareTriple& triple, const Rational& t,
                                               int branch) {
  const CurveMap map(triple);
  auto root = rational_square_root(map.quartic(t));
  if (!root) return std::nullopt;
  const Rational g = t * t + map.g1 * t + map.g0;
  const Rational t0 = branch >= 0 ? Rational(g + *root) : Rational(g - *root);
  if (t0 == 0) return std::nullopt;
  return map.forward(t0, t * t0);
}

CurvePoint group_neg(const EllipticCurve& c, const CurvePoint& p) {
  if (!c.contains(p)) throw ValidationError("point " + p.to_string() + " is not on the curve");
  if (p.is_infinity()) return p;
  return CurvePoint(p.t(), -p.s());
}

CurvePoint group_add(const EllipticCurve& c, const CurvePoint& p, const CurvePoint& q) {
  if (!c.contains(p)) throw ValidationError("point " + p.to_string() + " is not on the curve");
  if (!c.contains(q)) throw ValidationError("point " + q.to_string() + " is not on the curve");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.t() == q.t()) {
    if (p.s() == -q.s()) return CurvePoint::infinity();
    slope = (3 * p.t() * p.t() + c.alpha) / (2 * p.s());
  } else {
    slope = (q.s() - p.s()) / (q.t() - p.t());
  }
  Rational t = slope * slope - p.t() - q.t();
  Rational s = slope * (p.t() - t) - p.s();
  return CurvePoint(std::move(t), std::move(s));
}

CurvePoint group_mul(const EllipticCurve& c, const CurvePoint& p, std::int64_t k) {
  CurvePoint base = k < 0 ? group_neg(c, p) : p;
  std::uint64_t n = k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  CurvePoint acc = CurvePoint::infinity();
  if (!c.contains(p)) throw ValidationError("point " + p.to_string() + " is not on the curve");
  while (n) {
    if (n & 1) acc = group_add(c, acc, base);
    n >>= 1;
    if (n) base = group_add(c, base, base);
  }
  return acc;
}

std::optional<unsigned> small_order(const EllipticCurve& c, const CurvePoint& p, unsigned limit) {
  CurvePoint acc = p;
  for (unsigned k = 1; k <= limit; ++k) {
    if (acc.is_infinity()) return k;
    acc = group_add(c, acc, p);
  }
  return std::nullopt;
}

std::vector<CurvePoint> scan_rational_points(const EllipticCurve& c, std::int64_t bound,
                                             std::int64_t denominator_cap) {
  if (bound < 0 || denominator_cap < 1) throw DomainError("scan bounds must be nonnegative");
  if (bound > 10000) throw SizeError("scan_rational_points supports bound <= 10^4");
  if (denominator_cap > 64) throw SizeError("scan_rational_points supports denominators <= 64");
  std::vector<CurvePoint> out;
  for (std::int64_t q = 1; q <= denominator_cap; ++q) {
    for (std::int64_t p = -bound * q; p <= bound * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational t(static_cast<long>(p), static_cast<unsigned long>(q));
      auto s = rational_square_root(c.rhs(t));
      if (!s) continue;
      out.emplace_back(t, *s);
      if (*s != 0) out.emplace_back(t, -*s);
    }
  }
  return out;
}

TranslatePoint point_to_translate(const SquareTriple& triple, const CurvePoint& p) {
  if (p.is_infinity()) throw DegeneracyError("the point at infinity gives no translate");
  const CurveMap map(triple);
  if (!map.curve().contains(p)) {
    throw ValidationError("point " + p.to_string() + " is not on the curve of the triple");
  }
  const auto [t0, s0] = map.inverse(p);
  if (t0 == 0) throw DegeneracyError("T0 = 0 at " + p.to_string());
  TranslatePoint out;
  out.t = s0 / t0;
  const Rational t2 = out.t * out.t;
  if (t2 == 1) throw DegeneracyError("t = +-1 at " + p.to_string());
  out.u = 2 * (triple.root(1) - out.t * triple.root(2)) / (t2 - 1);
  if (out.u == 0) throw DegeneracyError("u = 0 at " + p.to_string() + " gives only X = 0");
  const Rational y1 = triple.root(1) + out.u;
  out.x = y1 * y1 - triple.a(1);
  if (out.x == 0) throw DegeneracyError("trivial translate X = 0 at " + p.to_string());
  for (int i = 0; i < 3; ++i) {
    auto r = rational_square_root(Rational(out.x + triple.a(i + 1)));
    if (!r) {
      throw InternalError("X = " + to_string(out.x) + " from " + p.to_string() + ": X + a" +
                          std::to_string(i + 1) + " is not a square");
    }
    out.y[i] = *r;
  }
  const Rational y2 = triple.root(2) + out.t * out.u;
  if (y2 * y2 != out.x + triple.a(2)) {
    throw InternalError("back-substitution mismatch for Y2 at " + p.to_string());
  }
  return out;
}

CurveFamily translate_family_from_curve(const SquareTriple& triple, const CurvePoint& generator,
                                        std::size_t count) {
  if (count < 1) throw DomainError("translate_family_from_curve needs count >= 1");
  const EllipticCurve curve = CurveMap(triple).curve();
  if (!curve.contains(generator)) {
    throw ValidationError("generator " + generator.to_string() + " is not on the curve");
  }
  if (auto order = small_order(curve, generator)) {
    throw DomainError("generator " + generator.to_string() + " has order " +
                      std::to_string(*order));
  }
  CurveFamily out;
  std::set<Rational> seen;
  CurvePoint point = generator;
  for (unsigned k = 1; k <= count + 16 && out.translates.size() < count; ++k) {
    if (k > 1) point = group_add(curve, point, generator);
    TranslatePoint tp;
    try {
      tp = point_to_translate(triple, point);
    } catch (const DegeneracyError&) {
      continue;
    }
    if (!seen.insert(tp.x).second) continue;
    out.translates.push_back(tp.x);
    out.multiples.push_back(k);
  }
  out.partial = out.translates.size() < count;
  TranslateFamily rational{{triple.a(1), triple.a(2), triple.a(3)}, out.translates, 1};
  out.family = clear_denominators(rational);
  if (!verify_family(out.family.base, out.family.translates).ok) {
    throw InternalError("scaled family fails verification");
  }
  return out;
}

namespace {

bool all_squares(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const Rational& q) { return is_rational_square(q); });
}

}  // namespace

FamilyMatching matching_from_family(const TranslateFamily& family, std::size_t num_sums,
                                    std::size_t num_products) {
  if (num_sums < 1 || num_products < 1) throw DomainError("need at least one sum and one product");
  if (!is_integral(family)) throw DomainError("family must be integral; clear denominators first");
  if (!verify_family(family.base, family.translates).ok) {
    throw ValidationError("family fails verification");
  }
  std::vector<Rational> square_side = family.base;
  std::vector<Rational> other_side = family.translates;
  if (!all_squares(square_side)) {
    if (all_squares(other_side)) {
      std::swap(square_side, other_side);
    } else if (!other_side.empty()) {
      const Rational shift = other_side.front();
      for (auto& a : square_side) a += shift;
      for (auto& x : other_side) x -= shift;
    }
  }
  auto divisible_by_4 = [](const Rational& q) { return mpz_divisible_ui_p(q.get_num_mpz_t(), 4); };
  if (!std::all_of(square_side.begin(), square_side.end(), divisible_by_4) ||
      !std::all_of(other_side.begin(), other_side.end(), divisible_by_4)) {
    for (auto& a : square_side) a *= 4;
    for (auto& x : other_side) x *= 4;
  }

  std::vector<Integer> sums;
  for (const auto& a : square_side) sums.push_back(rational_square_root(a)->get_num());
  std::sort(sums.begin(), sums.end());
  std::vector<Integer> ys;
  for (const auto& x : other_side) {
    if (x != 0) ys.push_back(x.get_num());
  }
  std::sort(ys.begin(), ys.end(), [](const Integer& a, const Integer& b) {
    const int c = cmp(abs(a), abs(b));
    return c != 0 ? c < 0 : a < b;
  });
  if (sums.size() < num_sums || ys.size() < num_products) {
    throw SizeError("family too small: " + std::to_string(sums.size()) + " sums and " +
                    std::to_string(ys.size()) + " products available");
  }

  // Roots of z^2 - s z - y/4: (s -+ r)/2 with r^2 = s^2 + y.
  auto solutions = [](const Integer& s, const Integer& y) -> std::optional<std::pair<Integer, Integer>> {
    const Integer disc = s * s + y;
    auto r = perfect_square_root(disc);
    if (!r || *r == 0) return std::nullopt;
    return std::make_pair(Integer((s - *r) / 2), Integer((s + *r) / 2));
  };

  std::size_t best = 0;
  std::vector<std::size_t> pick(num_products);
  std::iota(pick.begin(), pick.end(), 0);
  constexpr std::size_t kMaxProductSets = 4096;
  for (std::size_t tried = 0; tried < kMaxProductSets; ++tried) {
    std::set<Integer> used;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::pair<Integer, Integer>>> pairs_of;
    for (std::size_t si = 0; si < sums.size() && chosen.size() < num_sums; ++si) {
      std::vector<std::pair<Integer, Integer>> pairs;
      bool ok = true;
      for (std::size_t pi : pick) {
        auto sol = solutions(sums[si], ys[pi]);
        if (!sol || used.count(sol->first) || used.count(sol->second)) {
          ok = false;
          break;
        }
        pairs.push_back(*sol);
      }
      if (!ok) continue;
      for (const auto& [x, y] : pairs) used.insert({x, y});
      chosen.push_back(si);
      pairs_of.push_back(std::move(pairs));
    }
    best = std::max(best, chosen.size());
    if (chosen.size() == num_sums) {
      FamilyMatching out;
      std::vector<Integer> values;
      for (const auto& pairs : pairs_of) {
        for (const auto& [x, y] : pairs) {
          values.push_back(x);
          values.push_back(y);
        }
      }
      for (std::size_t si : chosen) out.sums.push_back(sums[si]);
      for (std::size_t pi : pick) out.products.push_back(Integer(-ys[pi] / 4));
      out.graph = Graph::matching(values.size() / 2);
      out.labels = Labeling::from_integers(values);
      return out;
    }
    // Next combination of product indices in lexicographic order.
    std::size_t i = num_products;
    while (i > 0 && pick[i - 1] == ys.size() - num_products + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < num_products; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw SizeError("matching_from_family reached " + std::to_string(best) + " of " +
                  std::to_string(num_sums) + " sums");
}

Interval naive_height(const CurvePoint& p) {
  if (p.is_infinity()) throw DomainError("naive height of the point at infinity");
  const Integer num = abs(p.t().get_num());
  const Integer& den = p.t().get_den();
  const Interval log_den = log(Interval::from_integer(den));
  if (num == 0) return log_den;
  const Interval log_num = log(Interval::from_integer(num));
  return num >= den ? log_num : log_den;
}

Integer genus_of_system(unsigned k) {
  if (k < 3) throw DomainError("genus_of_system needs k >= 3");
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, k - 2);
  return 1 + Integer(k - 3) * power;
}

}  // namespace sumprod
