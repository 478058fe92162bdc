#pragma once

// Cayley sum graphs over Z_n and certified bounds on their character sums.

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/arith.hpp"
#include "sumprod/graphs.hpp"
#include "sumprod/interval.hpp"

namespace sumprod {

/// Working precision for character sums, in bits.
inline constexpr mpfr_prec_t kCharSumPrecision = 96;

/// Graph on Z_n joining y != z when y + z mod n lies in T. Pairs with
/// 2y in T would be loops and are dropped. Throws ValidationError for empty
/// T, repeated or out-of-range residues; DomainError for n < 3.
Graph build_cayley_sum(std::uint64_t n, const std::vector<std::uint64_t>& residues);

/// |sum_{s in T} e^(2 pi i j s / n)| for j = 1, ..., n-1 (entry j-1).
std::vector<Interval> char_sum_magnitudes(std::uint64_t n,
                                          const std::vector<std::uint64_t>& residues);

struct CharSumCertificate {
  /// Encloses max_j |sum_{s in T} w^(j s)| over nontrivial j.
  Interval value;
  /// The j whose enclosure has the largest upper end.
  std::uint64_t argmax = 0;
};

CharSumCertificate char_sum_max(std::uint64_t n, const std::vector<std::uint64_t>& residues);

/// 3 sqrt(d) sqrt(ln(10 n)).
Interval good_set_threshold(std::uint64_t n, std::uint64_t d);

struct GoodSet {
  std::vector<std::uint64_t> residues;  // ascending
  CharSumCertificate certificate;
  Interval threshold;
  unsigned attempts = 0;  // attempts consumed, including the successful one
};

/// Uniform d-subsets of Z_n (attempt a draws from stream a of `seed`) until
/// the certified character-sum maximum lies strictly below
/// 3 sqrt(d) sqrt(ln(10 n)). Requires 1 <= d, d^3 <= n^2 (PreconditionError)
/// and attempts >= 1 (DomainError); StochasticFailure when all attempts fail.
GoodSet random_good_T(std::uint64_t n, std::uint64_t d, std::uint64_t seed, unsigned attempts);

/// (d - lambda) / (2d). Throws DomainError unless 0 <= lambda <= d.
Rational expander_delta(const Rational& d, const Rational& lambda);
/// Interval version; throws DomainError when lambda certainly leaves [0, d].
Interval expander_delta(std::uint64_t d, const Interval& lambda);

struct CayleyExperiment {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  GoodSet good;
  Interval delta;        // (|T| - lambda) / (2 |T|) with lambda the certificate
  Interval delta_floor;  // (d - threshold) / (2d); negative when the threshold exceeds d
  std::size_t edge_count = 0;
  std::size_t sum_set_size = 0;  // |A + A| along the graph, A = {1..n}
  std::size_t sum_set_bound = 0;  // 2 |T|
  std::optional<std::size_t> diameter;
  std::uint64_t min_sumset = 0;  // from the diameter lemma; 0 when disconnected
  bool lemma_check = false;
};

/// Cayley sum graph from random_good_T with vertex y labeled y + 1.
CayleyExperiment cayley_sum_experiment(std::uint64_t n, std::uint64_t d, std::uint64_t seed,
                                       unsigned attempts = 200);

}  // namespace sumprod
