#include "sumprod/translates.hpp"

#include <algorithm>
#include <set>

#include "sumprod/errors.hpp"

namespace sumprod {

namespace {

void require_distinct(const std::vector<Rational>& values, const char* what) {
  std::set<Rational> seen;
  for (const auto& v : values) {
    if (!seen.insert(v).second) {
      throw ValidationError(std::string("duplicate ") + what + " entry " + to_string(v));
    }
  }
}

}  // namespace

FamilyCheck verify_family(const std::vector<Rational>& base, const std::vector<Rational>& xs) {
  require_distinct(base, "base");
  require_distinct(xs, "translate");
  FamilyCheck out;
  out.roots.reserve(xs.size());
  for (const auto& x : xs) {
    std::vector<Rational> row;
    row.reserve(base.size());
    for (const auto& a : base) {
      auto r = rational_square_root(Rational(a + x));
      if (!r) {
        out.roots.clear();
        return out;
      }
      row.push_back(*r);
    }
    out.roots.push_back(std::move(row));
  }
  out.ok = true;
  return out;
}

std::vector<Integer> pair_translates(const Integer& a, const Integer& b) {
  if (a == b) throw DomainError("pair_translates needs a != b");
  const Integer n = a - b;
  std::set<Integer> found;
  for (const Integer& d0 : divisors(n)) {
    for (int sign : {1, -1}) {
      const Integer d = sign * d0;
      const Integer e = n / d;
      if (mpz_odd_p(Integer(d - e).get_mpz_t())) continue;
      const Integer y1 = (d + e) / 2;
      found.insert(y1 * y1 - a);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Integer> brute_force_translates(const std::vector<Integer>& base,
                                            const Integer& bound) {
  if (base.empty()) throw DomainError("brute_force_translates needs a nonempty base");
  if (bound < 0) throw DomainError("bound must be nonnegative");
  if (bound > 100000000) throw SizeError("brute_force_translates scans at most |x| <= 10^8");
  const Integer& a0 = base.front();
  const Integer low_square = a0 - bound;
  const Integer high_square = a0 + bound;
  std::vector<Integer> out;
  if (high_square < 0) return out;
  Integer y = low_square > 0 ? int_sqrt_floor(low_square) : Integer(0);
  if (y * y < low_square) ++y;
  for (; y * y <= high_square; ++y) {
    const Integer x = y * y - a0;
    bool all = true;
    for (std::size_t i = 1; i < base.size() && all; ++i) {
      all = perfect_square_root(base[i] + x).has_value();
    }
    if (all) out.push_back(x);
  }
  return out;
}

std::vector<Rational> euler_chain(unsigned depth) {
  if (depth > 6) throw SizeError("euler_chain supports depth <= 6");
  std::vector<Rational> chain{Rational(1, 2)};
  Rational x(1, 2);
  for (unsigned i = 0;; ++i) {
    const Rational x2 = x * x;
    const auto check = verify_family({Rational(0), Rational(2), Rational(6)}, {x2});
    if (!check.ok) throw InternalError("euler_chain element " + std::to_string(i) + " fails");
    if (i == depth) break;
    const Rational& y = check.roots[0][1];
    const Rational& z = check.roots[0][2];
    x = (x2 * x2 - 12) / (2 * x * y * z);
    chain.push_back(abs(x));
  }
  return chain;
}

TranslateFamily clear_denominators(const TranslateFamily& family) {
  Integer l = 1;
  auto absorb = [&l](const Rational& q) {
    Integer root = 1;
    if (q.get_den() != 1) {
      for (const auto& [p, e] : factorize(q.get_den())) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), (e + 1) / 2);
        root *= pe;
      }
    }
    l = lcm(l, root);
  };
  for (const auto& q : family.base) absorb(q);
  for (const auto& q : family.translates) absorb(q);

  TranslateFamily out;
  const Rational factor(l * l);
  for (const auto& q : family.base) out.base.push_back(q * factor);
  for (const auto& q : family.translates) out.translates.push_back(q * factor);
  out.scale = family.scale * l;
  return out;
}

bool is_integral(const TranslateFamily& family) {
  auto integral = [](const Rational& q) { return q.get_den() == 1; };
  return std::all_of(family.base.begin(), family.base.end(), integral) &&
         std::all_of(family.translates.begin(), family.translates.end(), integral);
}

}  // namespace sumprod
