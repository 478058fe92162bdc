#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sumprod/errors.hpp"
#include "sumprod/translates.hpp"

namespace sumprod {
namespace {

// Every x in [-bound, bound] with a + x and b + x perfect squares, tested one
// x at a time with a floating-point root and exact integer confirmation.
std::vector<Integer> naive_pair(long a, long b, long bound) {
  auto square = [](long v) {
    if (v < 0) return false;
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
  };
  std::vector<Integer> out;
  for (long x = -bound; x <= bound; ++x) {
    if (square(a + x) && square(b + x)) out.emplace_back(x);
  }
  return out;
}

std::vector<Integer> clipped(const std::vector<Integer>& xs, const Integer& bound) {
  std::vector<Integer> out;
  for (const auto& x : xs) {
    if (abs(x) <= bound) out.push_back(x);
  }
  return out;
}

TEST(VerifyFamily, Examples) {
  EXPECT_TRUE(verify_family({0, 9, 16}, {0}).ok);
  const auto check = verify_family({0, 7}, {9});
  ASSERT_TRUE(check.ok);
  EXPECT_EQ(check.roots[0], (std::vector<Rational>{3, 4}));
  EXPECT_FALSE(verify_family({0, 3}, {2}).ok);
  EXPECT_THROW(verify_family({0, 0}, {1}), ValidationError);
  EXPECT_THROW(verify_family({0, 1}, {1, 1}), ValidationError);
}

TEST(PairTranslates, Examples) {
  EXPECT_EQ(pair_translates(16, 0), (std::vector<Integer>{0, 9}));
  EXPECT_EQ(pair_translates(6, 2), (std::vector<Integer>{-2}));
  EXPECT_EQ(pair_translates(2, 1), (std::vector<Integer>{-1}));
  EXPECT_THROW(pair_translates(3, 3), DomainError);
  EXPECT_EQ(pair_translates(16, 0), naive_pair(16, 0, 10000));
  EXPECT_EQ(pair_translates(-120, 45), clipped(naive_pair(-120, 45, 20000), 20000));
}

TEST(PairTranslates, MatchesBruteForce) {
  std::mt19937_64 rng(500);
  const Integer bound = 1000000;
  for (int i = 0; i < 500; ++i) {
    const long a = static_cast<long>(rng() % 20001) - 10000;
    long b = static_cast<long>(rng() % 20001) - 10000;
    if (b == a) ++b;
    const auto exact = pair_translates(a, b);
    ASSERT_EQ(clipped(exact, bound), brute_force_translates({a, b}, bound)) << a << " " << b;
    EXPECT_LE(exact.size(), divisors(Integer(a - b)).size());
    for (const auto& x : exact) {
      EXPECT_TRUE(perfect_square_root(Integer(a + x)));
      EXPECT_TRUE(perfect_square_root(Integer(b + x)));
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_translates({1, 2}, 100), (std::vector<Integer>{-1}));
  EXPECT_EQ(brute_force_translates({0}, 10), (std::vector<Integer>{0, 1, 4, 9}));
  EXPECT_TRUE(brute_force_translates({0, 2, 6}, 1000000).empty());
  EXPECT_THROW(brute_force_translates({0}, 100000001), SizeError);
  EXPECT_THROW(brute_force_translates({}, 10), DomainError);
  for (long a : {-7, 0, 5}) {
    EXPECT_EQ(brute_force_translates({a, a + 24}, 3000), naive_pair(a, a + 24, 3000));
  }
}

TEST(Euler, Chain) {
  const auto chain = euler_chain(3);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_EQ(chain[0], Rational(1, 2));
  EXPECT_EQ(chain[1], Rational(191, 60));
  EXPECT_EQ(chain[2], parse_rational("1175343361/1154457480"));
  EXPECT_EQ(Integer(chain[3].get_num()).get_str().size(), 38u);
  EXPECT_EQ(Integer(chain[3].get_den()).get_str().size(), 38u);
  for (const auto& x : chain) {
    EXPECT_TRUE(is_rational_square(x * x + 2));
    EXPECT_TRUE(is_rational_square(x * x + 6));
    EXPECT_TRUE(verify_family({0, 2, 6}, {x * x}).ok);
  }
  EXPECT_THROW(euler_chain(7), SizeError);
}

TEST(ClearDenominators, Examples) {
  const auto cleared = clear_denominators({{0, 2, 6}, {Rational(1, 4)}, 1});
  EXPECT_EQ(cleared.scale, 2);
  EXPECT_EQ(cleared.base, (std::vector<Rational>{0, 8, 24}));
  EXPECT_EQ(cleared.translates, (std::vector<Rational>{1}));
  EXPECT_TRUE(is_integral(cleared));
  const TranslateFamily integral{{0, 7}, {9}, 1};
  const auto same = clear_denominators(integral);
  EXPECT_EQ(same.scale, 1);
  EXPECT_EQ(same.base, integral.base);
  EXPECT_EQ(same.translates, integral.translates);
}

TEST(ClearDenominators, PreservesSquares) {
  const auto chain = euler_chain(3);
  std::vector<Rational> xs;
  for (const auto& x : chain) xs.push_back(x * x);
  const TranslateFamily f{{0, 2, 6}, xs, 1};
  ASSERT_TRUE(verify_family(f.base, f.translates).ok);
  const auto g = clear_denominators(f);
  EXPECT_TRUE(is_integral(g));
  EXPECT_TRUE(verify_family(g.base, g.translates).ok);
  const Integer s2 = g.scale * g.scale;
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(g.translates[i], xs[i] * s2);
  for (const auto& x : xs) {
    EXPECT_EQ(Integer(s2 % Integer(x.get_den())), 0);
  }
}

}  // namespace
}  // namespace sumprod
