#pragma once

// Explicit labelings with few sums and products: disjoint triangles, real
// matchings from quadratic roots, colour-class matchings, the interval
// construction and the randomized dense-to-sparse reduction.

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/arith.hpp"
#include "sumprod/graphs.hpp"
#include "sumprod/interval.hpp"

namespace sumprod {

/// colour[i] is the colour of g.edges()[i]. Proper: edges sharing a vertex
/// get distinct colours.
class EdgeColouring {
 public:
  /// Throws ValidationError if the colouring is improper or has the wrong length.
  EdgeColouring(const Graph& g, std::vector<std::uint32_t> colour);

  std::uint32_t operator[](std::size_t edge) const { return colour_[edge]; }
  std::size_t size() const { return colour_.size(); }
  /// Number of distinct colours present.
  std::size_t colour_count() const { return colour_count_; }

 private:
  std::vector<std::uint32_t> colour_;
  std::size_t colour_count_ = 0;
};

struct LabeledGraph {
  Graph graph;
  Labeling labels;
};

/// All C(m,3) triangles on sum triples from {2, 8, 32, ..., 2*4^(m-1)}; the
/// edge sums of the triangle for s1 < s2 < s3 are exactly s1, s2, s3. The
/// label 4^a + 4^b - 4^c names its triangle and vertex, so labels are distinct.
/// (Powers of two collide from m = 4: (4+8-2)/2 = (2+16-8)/2.)
LabeledGraph triangle_family(unsigned m);

/// a + b*sqrt(d) with rational a, b and a fixed radicand d.
struct QuadraticNumber {
  Rational a;
  Rational b;
  Rational d;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
};

/// The root (s + sign * sqrt(s^2 - 4p)) / 2 of z^2 - s z + p.
class AlgebraicLabel {
 public:
  /// Throws DomainError unless s^2 - 4p > 0 and sign is +1 or -1.
  AlgebraicLabel(Rational s, Rational p, int sign);

  const Rational& s() const { return s_; }
  const Rational& p() const { return p_; }
  int sign() const { return sign_; }
  Rational discriminant() const { return s_ * s_ - 4 * p_; }

  Interval enclosure(mpfr_prec_t prec = kDefaultPrecision) const;
  QuadraticNumber symbolic() const;
  std::string to_string() const;

  /// Exact: two such roots agree iff they solve a common quadratic on the
  /// same branch, or share the rational common root (p2-p1)/(s2-s1).
  friend bool operator==(const AlgebraicLabel& x, const AlgebraicLabel& y);

 private:
  Rational s_;
  Rational p_;
  int sign_;
};

/// Index pairs (i, j), i < j, of labels that compare equal. Candidates come
/// from overlapping interval enclosures under doubling precision; overlaps
/// that survive refinement are settled exactly.
std::vector<std::pair<std::size_t, std::size_t>> equal_label_pairs(
    const std::vector<AlgebraicLabel>& labels);

struct RealMatching {
  Graph graph;
  /// labels[2i], labels[2i+1] sit on edge i.
  std::vector<AlgebraicLabel> labels;
  std::vector<Rational> values;  // the m sums, also used as the m products
  std::size_t sum_count = 0;
  std::size_t product_count = 0;
  unsigned attempts = 0;
};

/// n-edge matching over the reals with ceil(sqrt n) sums and products: pick
/// m = ceil(sqrt n) distinct values in [5, 6] (multiples of 10^-6), and label
/// the first n pairs (s, p) in row-major order by the two roots of
/// z^2 - s z + p. Re-samples when two labels collide.
RealMatching real_matching_family(std::size_t n, std::uint64_t seed, unsigned attempts = 16);

struct ColourMatching {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> colours;  // ascending
  std::size_t target = 0;              // ceil(|E| / (4 Delta))
  std::size_t degree_bound = 0;        // Delta used for the target
};

/// Repeatedly take every remaining edge of the most used remaining colour
/// (ties: lowest colour id) and delete the edges touching them, until at
/// least |E| / (4 Delta) edges are selected. Delta defaults to the maximum
/// degree; a larger degree_bound may be supplied. A graph without edges
/// yields an empty matching.
ColourMatching greedy_colour_matching(const Graph& g, const EdgeColouring& colouring,
                                      std::optional<std::size_t> degree_bound = std::nullopt);

/// Colour each edge by the product of its endpoint labels (rank among the
/// distinct products). Proper whenever the labeling is injective and nonzero
/// on every edge that shares a vertex.
EdgeColouring colour_by_product(const Graph& g, const Labeling& labels);

struct IntervalExperiment {
  std::uint64_t n_vertices = 0;
  Rational eps;
  Integer interval_low;   // smallest integer in I
  Integer interval_high;  // largest integer in I
  std::size_t interval_size = 0;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  std::size_t colour_count = 0;
  std::size_t target = 0;
  std::size_t matching_size = 0;
  std::size_t colours_used = 0;
  std::size_t sum_count = 0;
  std::size_t product_count = 0;
  bool sums_within_interval = false;
  bool matching_meets_target = false;
  bool colours_within_bound = false;
  std::vector<Edge> matching;  // vertex v carries label v + 1
};

/// Graph on {1..N} joining i < j when i + j lies in
/// I = [N - h, N + h), h = N / (32 (ln N)^eps), coloured by endpoint product
/// and reduced with greedy_colour_matching. N must be a power of two >= 2,
/// 0 < eps <= 1.
IntervalExperiment interval_matching_experiment(std::uint64_t n, const Rational& eps);

struct SparseReduction {
  std::vector<Edge> matching;
  std::vector<std::pair<Rational, Rational>> pairs;  // endpoint labels per matching edge
  std::vector<Rational> sampled_sums;                // R
  std::size_t sum_count = 0;
  std::size_t product_count = 0;
  std::size_t max_degree = 0;      // D
  std::size_t edge_count = 0;      // |E(G)|
  std::size_t sp_bound = 0;        // S = max(|A+A|, |A.A|) along G
  std::size_t sub_edge_count = 0;  // |E(H)|
  std::size_t sub_max_degree = 0;
  std::size_t guaranteed_size = 0;  // ceil(|E| / (16 D)) = ceil(N d / (32 D))
  unsigned attempts = 0;            // attempts consumed, including the successful one
};

/// Random sub-sampling of the sum-set with probability 1/sqrt(D), then a
/// colour-class matching of the surviving edges coloured by product. Attempt
/// a draws from stream a of `seed`; the first attempt that passes all three
/// acceptance tests wins. Requires average degree d >= 5 sqrt(D)
/// (PreconditionError); throws StochasticFailure after `retries` rejections.
SparseReduction sparse_from_dense(const Graph& g, const Labeling& labels, std::uint64_t seed,
                                  unsigned retries);

}  // namespace sumprod
