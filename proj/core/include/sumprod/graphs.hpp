#pragma once

// Graphs with injective vertex labelings, the sum-set and product-set taken
// along their edges, and the lower-bound calculators that apply to them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sumprod/arith.hpp"
#include "sumprod/interval.hpp"

namespace sumprod {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Edges are stored with u < v, in insertion order.
class Graph {
 public:
  Graph() = default;
  /// Throws ValidationError on loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  /// n disjoint edges {2i, 2i+1}.
  static Graph matching(std::size_t n);
  static Graph complete(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<std::vector<Vertex>> adjacency() const;
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
  bool is_matching() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Injective map vertex -> rational value. Integer labelings are the
/// special case where every denominator is 1.
class Labeling {
 public:
  Labeling() = default;
  /// Throws ValidationError when two vertices share a value.
  explicit Labeling(std::vector<Rational> values);
  static Labeling from_integers(const std::vector<Integer>& values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t v) const { return values_[v]; }
  const std::vector<Rational>& values() const { return values_; }
  bool integral() const;

 private:
  std::vector<Rational> values_;
};

struct SumProductProfile {
  std::set<Rational> sums;
  std::set<Rational> products;

  std::size_t sum_count() const { return sums.size(); }
  std::size_t product_count() const { return products.size(); }
  std::size_t sp() const { return std::max(sums.size(), products.size()); }
};

/// Sums and products of endpoint labels over the edges of g.
SumProductProfile sp_profile(const Graph& g, const Labeling& labels);

/// ceil(sqrt(|E|)): any injective labeling into a field has sp at least this.
std::uint64_t sqrt_edge_bound(const Graph& g);

/// Number of (undirected) cycles of length k, by exhaustive search.
std::uint64_t count_cycles(const Graph& g, unsigned k);

/// ceil((2k * e_k(G))^(1/k)) for odd k >= 3, or 0 when G has no k-cycles.
/// Lower bound on the sum-set of any injective labeling (char != 2).
std::uint64_t odd_cycle_bound(const Graph& g, unsigned k);

/// Largest breadth-first eccentricity; nullopt when g is disconnected.
std::optional<std::size_t> diameter(const Graph& g);

/// Whether 2^s * C(r+s, s) >= n/2, evaluated exactly.
bool sumset_diameter_inequality(std::uint64_t n, std::uint64_t r, std::uint64_t s);

/// Smallest s >= 1 with 2^s * C(r+s, s) >= n/2. Any labeled connected graph
/// on n vertices with diameter r has a sum-set at least this large.
std::uint64_t min_sumset_from_diameter(std::uint64_t n, std::uint64_t r);

/// floor((r-1)^(1/k) (m-k+1) m^(1-1/k) + (k-1) m): the Kovari-Sos-Turan
/// ceiling on edges of a K_{k,r}-free bipartite graph with m vertices per
/// side. Evaluated exactly as an integer k-th root. Requires 2 <= k <= r, m >= k.
Integer kst_max_edges(std::uint64_t m, std::uint64_t k, std::uint64_t r);

/// ceil((n/2)^(k/(2k-1)) * r^(-1/(2k-1))), the explicit form of the matching
/// lower bound when no k sums share more than r translates. Computed exactly
/// as the least c with c^(2k-1) * 2^k * r >= n^k.
Integer fk_sp_lower(std::uint64_t n, std::uint64_t k, std::uint64_t r);

/// Main terms of the dense-graph bounds for a graph with n vertices and at
/// least n^2/k edges. The o(1) corrections in the exponents are dropped.
struct DenseBounds {
  /// min{n^(15/14) / k^(4/7), n^(3/2) / k}; conditional on Bombieri-Lang.
  Interval conditional;
  /// n^(10/9) / k^(19/9).
  Interval unconditional;
  /// The conditional term exceeds n exactly when k^8 < n.
  bool conditional_nontrivial = false;
  /// The unconditional term exceeds n exactly when k^19 < n.
  bool unconditional_nontrivial = false;
};

DenseBounds dense_graph_conditional_bounds(std::uint64_t n, std::uint64_t k);

/// Exact conductance min_S e(S, S^c) / min(vol S, vol S^c) over nonempty
/// proper S. Exhaustive; at most 24 vertices, none isolated.
Rational conductance_small(const Graph& g);

struct MatchingOracleResult {
  SumProductProfile profile;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

/// Minimum sp over injective labelings of an n-edge matching with values in
/// [-B, B], by exhaustive search modulo edge order and swaps within an edge.
/// The result is an upper bound on SP over the integers restricted to that
/// range, nothing more. Guard: n <= 3, B <= 20.
MatchingOracleResult sp_oracle_matching(std::size_t n, std::int64_t value_bound);

}  // namespace sumprod
