#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "sumprod/errors.hpp"
#include "sumprod/expander.hpp"
#include "sumprod/random.hpp"

namespace sumprod {
namespace {

std::vector<double> double_char_sums(std::uint64_t n, const std::vector<std::uint64_t>& t) {
  std::vector<double> out;
  for (std::uint64_t j = 1; j < n; ++j) {
    std::complex<double> acc = 0;
    for (auto s : t) acc += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((j * s) % n) / n);
    out.push_back(std::abs(acc));
  }
  return out;
}

TEST(CayleySum, Examples) {
  const Graph five = build_cayley_sum(5, {0});
  EXPECT_EQ(five.edges(), (std::vector<Edge>{{1, 4}, {2, 3}}));
  const Graph four = build_cayley_sum(4, {1});
  EXPECT_EQ(four.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_THROW(build_cayley_sum(3, {}), ValidationError);
  EXPECT_THROW(build_cayley_sum(5, {1, 1}), ValidationError);
  EXPECT_THROW(build_cayley_sum(5, {5}), ValidationError);
  EXPECT_THROW(build_cayley_sum(2, {1}), DomainError);
}

TEST(CayleySum, EdgeSumsLieInTranslatesOfT) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t n = 5 + rng() % 200;
    CounterRng pick(i, 0);
    const auto t = pick.subset(n, 1 + rng() % std::min<std::uint64_t>(n, 12));
    const Graph g = build_cayley_sum(n, t);
    std::set<std::uint64_t> allowed, sums;
    for (auto s : t) {
      allowed.insert(s + 2);
      allowed.insert(s + n + 2);
    }
    for (const Edge& e : g.edges()) {
      const std::uint64_t sum = std::uint64_t{e.u} + 1 + e.v + 1;
      ASSERT_TRUE(allowed.count(sum));
      sums.insert(sum);
    }
    EXPECT_LE(sums.size(), 2 * t.size());
  }
}

TEST(CharSums, Examples) {
  std::vector<std::uint64_t> all(12);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_LT(char_sum_max(12, all).value.upper_double(), 1e-20);
  const auto one = char_sum_max(12, {0});
  EXPECT_LE(one.value.lower_double(), 1.0);
  EXPECT_GE(one.value.upper_double(), 1.0);
  const auto root2 = char_sum_max(4, {0, 1});
  EXPECT_LE(root2.value.lower_double(), std::sqrt(2.0));
  EXPECT_GE(root2.value.upper_double(), std::sqrt(2.0));
  EXPECT_TRUE(root2.argmax == 1 || root2.argmax == 3);
  EXPECT_LT(root2.value.width(), 1e-20);
}

TEST(CharSums, MatchDoubleDft) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t n = 10 + rng() % 500;
    const auto t = CounterRng(77, i).subset(n, 1 + rng() % 20);
    const auto exact = char_sum_magnitudes(n, t);
    const auto approx = double_char_sums(n, t);
    for (std::size_t j = 0; j < approx.size(); ++j) {
      ASSERT_NEAR(exact[j].midpoint(), approx[j], 1e-9);
    }
  }
}

// The loop-inclusive operator M[y][z] = [y + z in T] has |eigenvalues| equal to
// the character sums (including |T| for the trivial character); dropping the
// loops moves each eigenvalue by at most 1.
TEST(CharSums, SpectralIdentity) {
  for (std::uint64_t n : {7u, 16u, 31u, 48u, 64u}) {
    for (std::uint64_t d : {1u, 3u, 6u}) {
      const auto t = CounterRng(n, d).subset(n, d);
      Eigen::MatrixXd loops = Eigen::MatrixXd::Zero(n, n);
      for (std::uint64_t y = 0; y < n; ++y)
        for (auto s : t) loops(y, (s + n - y) % n) = 1;
      Eigen::MatrixXd loopless = Eigen::MatrixXd::Zero(n, n);
      const Graph g = build_cayley_sum(n, t);
      for (const Edge& e : g.edges()) loopless(e.u, e.v) = loopless(e.v, e.u) = 1;

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(loops), bare(loopless);
      std::vector<double> eig(full.eigenvalues().data(), full.eigenvalues().data() + n);
      std::vector<double> bare_eig(bare.eigenvalues().data(), bare.eigenvalues().data() + n);
      for (std::size_t i = 0; i < n; ++i) ASSERT_LE(std::abs(eig[i] - bare_eig[i]), 1 + 1e-9);

      std::vector<double> abs_eig;
      for (double x : eig) abs_eig.push_back(std::abs(x));
      std::vector<double> sums{static_cast<double>(d)};
      for (const auto& m : char_sum_magnitudes(n, t)) sums.push_back(m.midpoint());
      std::sort(abs_eig.begin(), abs_eig.end());
      std::sort(sums.begin(), sums.end());
      for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(abs_eig[i], sums[i], 1e-9) << n << " " << d;
    }
  }
}

TEST(GoodSet, Success) {
  const std::uint64_t n = 1024, d = static_cast<std::uint64_t>(std::ceil(8 * std::log(1024.0)));
  const GoodSet g = random_good_T(n, d, 3, 200);
  EXPECT_EQ(g.residues.size(), d);
  EXPECT_TRUE(std::is_sorted(g.residues.begin(), g.residues.end()));
  const auto again = char_sum_max(n, g.residues);
  EXPECT_TRUE(again.value.certainly_less_than(good_set_threshold(n, d)));
  const auto approx = double_char_sums(n, g.residues);
  EXPECT_NEAR(*std::max_element(approx.begin(), approx.end()), g.certificate.value.midpoint(), 1e-9);
  EXPECT_NEAR(good_set_threshold(n, d).midpoint(), 3 * std::sqrt(d * std::log(10.0 * n)), 1e-9);
}

TEST(GoodSet, Errors) {
  EXPECT_THROW(random_good_T(1024, 10, 1, 0), DomainError);
  EXPECT_THROW(random_good_T(1000, 101, 1, 5), PreconditionError);
  EXPECT_NO_THROW(random_good_T(1000, 100, 1, 5));
}

TEST(Delta, Values) {
  EXPECT_EQ(expander_delta(Rational(10), Rational(0)), Rational(1, 2));
  EXPECT_EQ(expander_delta(Rational(10), Rational(10)), 0);
  EXPECT_EQ(expander_delta(Rational(64), Rational(16)), Rational(3, 8));
  EXPECT_THROW(expander_delta(Rational(10), Rational(11)), DomainError);
  const Interval d = expander_delta(64, Interval::from_integer(16));
  EXPECT_EQ(d.midpoint(), 0.375);
}

TEST(Experiment, Reports) {
  const auto r = cayley_sum_experiment(1024, 56, 7);
  EXPECT_LE(r.sum_set_size, 112u);
  EXPECT_EQ(r.sum_set_bound, 112u);
  ASSERT_TRUE(r.diameter);
  EXPECT_TRUE(r.lemma_check);
  EXPECT_GE(r.sum_set_size, r.min_sumset);
  EXPECT_FALSE(r.delta.certainly_less_than(r.delta_floor));

  const auto s = cayley_sum_experiment(512, 50, 7);
  ASSERT_TRUE(s.diameter);
  EXPECT_TRUE(sumset_diameter_inequality(512, *s.diameter, s.sum_set_size));
  EXPECT_TRUE(s.lemma_check);

  const auto again = cayley_sum_experiment(1024, 56, 7);
  EXPECT_EQ(again.good.residues, r.good.residues);
}

}  // namespace
}  // namespace sumprod
