#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace sumprod {

/// Counter-based generator: the i-th output of stream s under seed k is a
/// pure function of (k, s, i), so a retry or a parallel attempt can be
/// replayed by index alone. Bounded draws use rejection sampling, so results
/// do not depend on the standard library's distribution implementations.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return at(counter_++); }

  /// Output number `index` of this stream, independent of the cursor.
  result_type at(std::uint64_t index) const;

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  /// Uniform d-subset of {0, ..., n-1}, ascending (Floyd's algorithm).
  std::vector<std::uint64_t> subset(std::uint64_t n, std::uint64_t d);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace sumprod
