#include "sumprod/graphs.hpp"

#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <unordered_set>

#include "sumprod/errors.hpp"

namespace sumprod {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw ValidationError("vertex count exceeds 32-bit vertex ids");
  }
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw ValidationError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(e).second) {
      throw ValidationError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges_.push_back(e);
  }
}

Graph Graph::matching(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)});
  }
  return Graph(2 * n, std::move(edges));
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::size_t Graph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Graph::is_matching() const { return max_degree() <= 1; }

Labeling::Labeling(std::vector<Rational> values) : values_(std::move(values)) {
  std::set<Rational> seen;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    values_[v].canonicalize();
    if (!seen.insert(values_[v]).second) {
      throw ValidationError("labeling is not injective: value " + to_string(values_[v]) +
                            " repeats at vertex " + std::to_string(v));
    }
  }
}

Labeling Labeling::from_integers(const std::vector<Integer>& values) {
  std::vector<Rational> q;
  q.reserve(values.size());
  for (const auto& v : values) q.emplace_back(v);
  return Labeling(std::move(q));
}

bool Labeling::integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

SumProductProfile sp_profile(const Graph& g, const Labeling& labels) {
  if (labels.size() < g.vertex_count()) {
    throw ValidationError("labeling covers " + std::to_string(labels.size()) + " of " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  SumProductProfile out;
  for (const Edge& e : g.edges()) {
    out.sums.insert(labels[e.u] + labels[e.v]);
    out.products.insert(labels[e.u] * labels[e.v]);
  }
  return out;
}

std::uint64_t sqrt_edge_bound(const Graph& g) {
  return int_root_ceil(Integer(static_cast<unsigned long>(g.edge_count())), 2).get_ui();
}

std::uint64_t count_cycles(const Graph& g, unsigned k) {
  if (k < 3) throw DomainError("cycles have length at least 3");
  const auto adj = g.adjacency();
  std::uint64_t count = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.vertex_count(), false);

  // Each cycle is counted once: it starts at its smallest vertex and the
  // second vertex is smaller than the last.
  auto extend = [&](auto&& self, Vertex start) -> void {
    const Vertex tail = path.back();
    if (path.size() == k) {
      if (path[1] < tail &&
          std::find(adj[tail].begin(), adj[tail].end(), start) != adj[tail].end()) {
        ++count;
      }
      return;
    }
    for (Vertex next : adj[tail]) {
      if (next <= start || on_path[next]) continue;
      on_path[next] = true;
      path.push_back(next);
      self(self, start);
      path.pop_back();
      on_path[next] = false;
    }
  };

  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(extend, s);
    on_path[s] = false;
  }
  return count;
}

std::uint64_t odd_cycle_bound(const Graph& g, unsigned k) {
  if (k < 3 || k % 2 == 0) {
    throw DomainError("odd_cycle_bound needs an odd cycle length >= 3, got " + std::to_string(k));
  }
  const std::uint64_t cycles = count_cycles(g, k);
  if (cycles == 0) return 0;
  Integer directed = Integer(static_cast<unsigned long>(cycles)) * (2 * k);
  return int_root_ceil(directed, k).get_ui();
}

namespace {

std::optional<std::size_t> diameter_by_bfs(const Graph& g) {
  const auto adj = g.adjacency();
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    queue.assign(1, s);
    std::size_t reached = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : adj[u]) {
        if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
        dist[w] = dist[u] + 1;
        best = std::max(best, dist[w]);
        ++reached;
        queue.push_back(w);
      }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

// All sources at once: row v holds the set of sources within distance i of
// v after round i. The diameter is the number of rounds that change a row.
std::optional<std::size_t> diameter_by_bitsets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> cur(n * words, 0), next(n * words, 0);
  for (std::size_t v = 0; v < n; ++v) cur[v * words + v / 64] |= std::uint64_t{1} << (v % 64);
  const auto adj = g.adjacency();
  std::size_t rounds = 0;
  for (;;) {
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t* row = &next[v * words];
      std::copy_n(&cur[v * words], words, row);
      for (Vertex w : adj[v]) {
        const std::uint64_t* other = &cur[w * words];
        for (std::size_t i = 0; i < words; ++i) row[i] |= other[i];
      }
      if (!changed && !std::equal(row, row + words, &cur[v * words])) changed = true;
    }
    if (!changed) break;
    ++rounds;
    cur.swap(next);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < words; ++i) bits += std::popcount(cur[v * words + i]);
    if (bits != n) return std::nullopt;
  }
  return rounds;
}

}  // namespace

std::optional<std::size_t> diameter(const Graph& g) {
  if (g.vertex_count() <= 1) return 0;
  if (g.vertex_count() <= 8192) return diameter_by_bitsets(g);
  return diameter_by_bfs(g);
}

bool sumset_diameter_inequality(std::uint64_t n, std::uint64_t r, std::uint64_t s) {
  // 2^s C(r+s, s) >= n/2  <=>  2^(s+1) C(r+s, s) >= n
  Integer lhs = binomial(r + s, s);
  mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), s + 1);
  return lhs >= Integer(static_cast<unsigned long>(n));
}

std::uint64_t min_sumset_from_diameter(std::uint64_t n, std::uint64_t r) {
  if (n < 1 || r < 1) throw DomainError("min_sumset_from_diameter needs n >= 1 and r >= 1");
  const Integer target(static_cast<unsigned long>(n));
  // Running value of 2^(s+1) C(r+s, s), starting at s = 1.
  Integer value = Integer(4) * (r + 1);
  for (std::uint64_t s = 1;; ++s) {
    if (value >= target) return s;
    value = value * 2 * (r + s + 1) / (s + 1);
  }
}

Integer kst_max_edges(std::uint64_t m, std::uint64_t k, std::uint64_t r) {
  if (k < 2) throw DomainError("kst_max_edges needs k >= 2");
  if (k > r) throw DomainError("kst_max_edges needs k <= r");
  if (m < k) throw DomainError("kst_max_edges needs m >= k");
  // (r-1)^(1/k) (m-k+1) m^(1-1/k) = ((r-1) m^(k-1) (m-k+1)^k)^(1/k)
  Integer radicand = Integer(static_cast<unsigned long>(r - 1));
  Integer mk, width;
  mpz_ui_pow_ui(mk.get_mpz_t(), m, k - 1);
  mpz_ui_pow_ui(width.get_mpz_t(), m - k + 1, k);
  radicand *= mk * width;
  return int_root_floor(radicand, k) + Integer(static_cast<unsigned long>(k - 1)) * m;
}

Integer fk_sp_lower(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
  if (k < 2) throw DomainError("fk_sp_lower needs k >= 2");
  if (r < 1) throw DomainError("fk_sp_lower needs r >= 1");
  // least c with c^(2k-1) >= n^k / (2^k r)
  Integer num, den(static_cast<unsigned long>(r));
  mpz_ui_pow_ui(num.get_mpz_t(), n, k);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  Integer floor_quotient = num / den;
  const unsigned long e = 2 * k - 1;
  Integer c = int_root_floor(floor_quotient, e);
  for (;;) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), e);
    if (power * den >= num) return c;
    ++c;
  }
}

DenseBounds dense_graph_conditional_bounds(std::uint64_t n, std::uint64_t k) {
  if (n < 2) throw DomainError("dense_graph_conditional_bounds needs n >= 2");
  if (k < 1) throw DomainError("dense_graph_conditional_bounds needs k >= 1");
  const Interval log_n = log(Interval::from_integer(Integer(static_cast<unsigned long>(n))));
  const Interval log_k = log(Interval::from_integer(Integer(static_cast<unsigned long>(k))));
  auto term = [&](const Rational& a, const Rational& b) {
    return exp(Interval::from_rational(a) * log_n - Interval::from_rational(b) * log_k);
  };
  DenseBounds out;
  out.conditional = min(term(Rational(15, 14), Rational(4, 7)), term(Rational(3, 2), Rational(1)));
  out.unconditional = term(Rational(10, 9), Rational(19, 9));

  const Integer big_n(static_cast<unsigned long>(n));
  Integer k8, k19;
  mpz_ui_pow_ui(k8.get_mpz_t(), k, 8);
  mpz_ui_pow_ui(k19.get_mpz_t(), k, 19);
  out.conditional_nontrivial = k8 < big_n;
  out.unconditional_nontrivial = k19 < big_n;
  return out;
}

Rational conductance_small(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw SizeError("conductance_small enumerates subsets; at most 24 vertices");
  if (n < 2) throw DomainError("conductance needs at least two vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  std::uint64_t total_volume = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (nbr[v] == 0) throw DomainError("conductance undefined with isolated vertex " + std::to_string(v));
    total_volume += std::popcount(nbr[v]);
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // S and its complement give the same ratio, so fix the top vertex outside S.
  const std::uint32_t limit = 1u << (n - 1);
  std::uint64_t best_cut = 1, best_vol = 0;  // ratio sentinel: infinity
  for (std::uint32_t s = 1; s < limit; ++s) {
    std::uint64_t cut = 0, vol = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      vol += std::popcount(nbr[v]);
      cut += std::popcount(nbr[v] & ~s & full);
    }
    const std::uint64_t denom = std::min(vol, total_volume - vol);
    if (best_vol == 0 || cut * best_vol < best_cut * denom) {
      best_cut = cut;
      best_vol = denom;
    }
  }
  return make_rational(Integer(static_cast<unsigned long>(best_cut)),
                       Integer(static_cast<unsigned long>(best_vol)));
}

MatchingOracleResult sp_oracle_matching(std::size_t n, std::int64_t value_bound) {
  if (n < 1) throw DomainError("sp_oracle_matching needs at least one edge");
  if (n > 3 || value_bound > 20) {
    throw SizeError("sp_oracle_matching guard: n <= 3 and value bound <= 20");
  }
  if (value_bound < 1 || 2 * value_bound + 1 < static_cast<std::int64_t>(2 * n)) {
    throw DomainError("value range too small for an injective labeling");
  }
  struct Pair {
    std::int64_t x, y, sum, product;
  };
  std::vector<Pair> pairs;
  for (std::int64_t x = -value_bound; x <= value_bound; ++x) {
    for (std::int64_t y = x + 1; y <= value_bound; ++y) pairs.push_back({x, y, x + y, x * y});
  }

  std::vector<std::size_t> chosen;
  std::vector<std::int64_t> sums, products, used;
  auto contains = [](const std::vector<std::int64_t>& v, std::int64_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // Depth-first search for n pairs with increasing index, pairwise disjoint,
  // using at most `limit` distinct sums and products.
  auto search = [&](auto&& self, std::size_t from, std::size_t limit) -> bool {
    if (chosen.size() == n) return true;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      const Pair& p = pairs[i];
      if (contains(used, p.x) || contains(used, p.y)) continue;
      const bool new_sum = !contains(sums, p.sum);
      const bool new_product = !contains(products, p.product);
      if (new_sum && sums.size() == limit) continue;
      if (new_product && products.size() == limit) continue;
      chosen.push_back(i);
      used.insert(used.end(), {p.x, p.y});
      if (new_sum) sums.push_back(p.sum);
      if (new_product) products.push_back(p.product);
      if (self(self, i + 1, limit)) return true;
      chosen.pop_back();
      used.resize(used.size() - 2);
      if (new_sum) sums.pop_back();
      if (new_product) products.pop_back();
    }
    return false;
  };

  for (std::size_t limit = 1; limit <= n; ++limit) {
    chosen.clear();
    sums.clear();
    products.clear();
    used.clear();
    if (!search(search, 0, limit)) continue;
    MatchingOracleResult out;
    for (std::size_t i : chosen) {
      out.pairs.emplace_back(pairs[i].x, pairs[i].y);
      out.profile.sums.insert(Rational(static_cast<long>(pairs[i].sum)));
      out.profile.products.insert(Rational(static_cast<long>(pairs[i].product)));
    }
    return out;
  }
  throw InternalError("sp_oracle_matching found no labeling at the trivial bound");
}

}  // namespace sumprod
