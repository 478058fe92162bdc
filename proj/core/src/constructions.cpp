#include "sumprod/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "sumprod/errors.hpp"
#include "sumprod/random.hpp"

namespace sumprod {

EdgeColouring::EdgeColouring(const Graph& g, std::vector<std::uint32_t> colour)
    : colour_(std::move(colour)) {
  if (colour_.size() != g.edge_count()) {
    throw ValidationError("colouring has " + std::to_string(colour_.size()) + " entries for " +
                          std::to_string(g.edge_count()) + " edges");
  }
  std::vector<std::vector<std::uint32_t>> seen(g.vertex_count());
  for (std::size_t i = 0; i < colour_.size(); ++i) {
    const Edge& e = g.edges()[i];
    for (Vertex v : {e.u, e.v}) {
      auto& at = seen[v];
      if (std::find(at.begin(), at.end(), colour_[i]) != at.end()) {
        throw ValidationError("improper colouring: colour " + std::to_string(colour_[i]) +
                              " repeats at vertex " + std::to_string(v));
      }
      at.push_back(colour_[i]);
    }
  }
  std::vector<std::uint32_t> distinct = colour_;
  std::sort(distinct.begin(), distinct.end());
  colour_count_ = std::unique(distinct.begin(), distinct.end()) - distinct.begin();
}

LabeledGraph triangle_family(unsigned m) {
  if (m < 3) throw DomainError("triangle_family needs m >= 3");
  if (m > 60) throw SizeError("triangle_family supports m <= 60");
  std::vector<Edge> edges;
  std::vector<Rational> values;
  auto pow2 = [](unsigned i) {
    Integer x;
    mpz_ui_pow_ui(x.get_mpz_t(), 2, 2 * i - 1);
    return x;
  };
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = i + 1; j <= m; ++j) {
      for (unsigned k = j + 1; k <= m; ++k) {
        const Integer s1 = pow2(i), s2 = pow2(j), s3 = pow2(k);
        const auto base = static_cast<Vertex>(values.size());
        values.emplace_back(Integer((s1 + s3 - s2) / 2));
        values.emplace_back(Integer((s1 + s2 - s3) / 2));
        values.emplace_back(Integer((s2 + s3 - s1) / 2));
        edges.push_back({base, static_cast<Vertex>(base + 1)});
        edges.push_back({base, static_cast<Vertex>(base + 2)});
        edges.push_back({static_cast<Vertex>(base + 1), static_cast<Vertex>(base + 2)});
      }
    }
  }
  const std::size_t n = values.size();
  return {Graph(n, std::move(edges)), Labeling(std::move(values))};
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d != y.d) throw DomainError("quadratic numbers over different radicands");
  return {x.a + y.a, x.b + y.b, x.d};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d != y.d) throw DomainError("quadratic numbers over different radicands");
  return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  return x.d == y.d && x.a == y.a && x.b == y.b;
}

AlgebraicLabel::AlgebraicLabel(Rational s, Rational p, int sign)
    : s_(std::move(s)), p_(std::move(p)), sign_(sign) {
  s_.canonicalize();
  p_.canonicalize();
  if (sign != 1 && sign != -1) throw DomainError("root sign must be +1 or -1");
  if (sgn(discriminant()) <= 0) {
    throw DomainError("s^2 - 4p must be positive, got " + sumprod::to_string(discriminant()));
  }
}

Interval AlgebraicLabel::enclosure(mpfr_prec_t prec) const {
  Interval root = sqrt(Interval::from_rational(discriminant(), prec));
  if (sign_ < 0) root = -root;
  return (Interval::from_rational(s_, prec) + root) / Interval::from_integer(2, prec);
}

QuadraticNumber AlgebraicLabel::symbolic() const {
  return {s_ / 2, Rational(sign_, 2), discriminant()};
}

std::string AlgebraicLabel::to_string() const {
  return "(" + sumprod::to_string(s_) + (sign_ > 0 ? " + " : " - ") + "sqrt(" +
         sumprod::to_string(discriminant()) + "))/2";
}

bool operator==(const AlgebraicLabel& x, const AlgebraicLabel& y) {
  if (x.s_ == y.s_) return x.p_ == y.p_ && x.sign_ == y.sign_;
  // A common root v solves (s2 - s1) v = p2 - p1.
  const Rational v = (y.p_ - x.p_) / (y.s_ - x.s_);
  auto on_branch = [&v](const AlgebraicLabel& a) {
    if (v * v - a.s_ * v + a.p_ != 0) return false;
    return sgn(Rational(2 * v - a.s_)) == a.sign_;
  };
  return on_branch(x) && on_branch(y);
}

std::vector<std::pair<std::size_t, std::size_t>> equal_label_pairs(
    const std::vector<AlgebraicLabel>& labels) {
  std::vector<std::pair<std::size_t, std::size_t>> equal;
  std::vector<std::pair<std::size_t, std::size_t>> open;
  {
    std::vector<Interval> box;
    box.reserve(labels.size());
    for (const auto& l : labels) box.push_back(l.enclosure());
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return mpfr_less_p(box[a].lower().get(), box[b].lower().get());
    });
    // Sweep: each interval against later ones whose lower end does not pass its upper end.
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (box[order[i]].certainly_less_than(box[order[j]])) break;
        open.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
      }
    }
  }
  for (auto [a, b] : open) {
    bool separated = false;
    for (mpfr_prec_t prec = 2 * kDefaultPrecision; prec <= 8 * kDefaultPrecision; prec *= 2) {
      if (labels[a].enclosure(prec).disjoint_from(labels[b].enclosure(prec))) {
        separated = true;
        break;
      }
    }
    if (!separated && labels[a] == labels[b]) equal.emplace_back(a, b);
  }
  std::sort(equal.begin(), equal.end());
  return equal;
}

RealMatching real_matching_family(std::size_t n, std::uint64_t seed, unsigned attempts) {
  if (n < 1) throw DomainError("real_matching_family needs n >= 1");
  if (attempts < 1) throw DomainError("real_matching_family needs at least one attempt");
  const std::uint64_t m = int_root_ceil(Integer(static_cast<unsigned long>(n)), 2).get_ui();
  constexpr std::uint64_t kGrid = 1000000;
  if (m > kGrid + 1) throw SizeError("too many values for the 10^-6 grid on [5, 6]");

  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    CounterRng rng(seed, attempt);
    std::vector<Rational> values;
    for (std::uint64_t k : rng.subset(kGrid + 1, m)) {
      values.push_back(make_rational(Integer(static_cast<unsigned long>(5 * kGrid + k)),
                                     Integer(static_cast<unsigned long>(kGrid))));
    }
    RealMatching out;
    out.values = values;
    out.attempts = attempt + 1;
    for (std::size_t e = 0; e < n; ++e) {
      const Rational& s = values[e / m];
      const Rational& p = values[e % m];
      out.labels.emplace_back(s, p, +1);
      out.labels.emplace_back(s, p, -1);
    }
    if (!equal_label_pairs(out.labels).empty()) continue;
    out.graph = Graph::matching(n);
    out.sum_count = std::min<std::uint64_t>(m, (n + m - 1) / m);
    out.product_count = std::min<std::uint64_t>(m, n);
    return out;
  }
  throw StochasticFailure("real_matching_family: labels collided on every attempt", attempts);
}

ColourMatching greedy_colour_matching(const Graph& g, const EdgeColouring& colouring,
                                      std::optional<std::size_t> degree_bound) {
  if (colouring.size() != g.edge_count()) {
    throw ValidationError("colouring does not match the graph");
  }
  ColourMatching out;
  const std::size_t max_deg = g.max_degree();
  if (g.edge_count() == 0) return out;
  const std::size_t delta = degree_bound.value_or(max_deg);
  if (delta < max_deg) {
    throw DomainError("degree bound " + std::to_string(delta) + " is below the maximum degree " +
                      std::to_string(max_deg));
  }
  out.degree_bound = delta;
  const std::size_t edges = g.edge_count();
  out.target = (edges + 4 * delta - 1) / (4 * delta);

  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_colour;
  for (std::size_t i = 0; i < edges; ++i) by_colour[colouring[i]].push_back(i);
  std::unordered_map<std::uint32_t, std::size_t> live;
  for (const auto& [c, list] : by_colour) live[c] = list.size();

  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t i = 0; i < edges; ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  std::vector<bool> removed(edges, false);

  // Max-heap on (live count, -colour); stale entries are skipped on pop.
  using Entry = std::pair<std::size_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (const auto& [c, count] : live) heap.emplace(count, -static_cast<std::int64_t>(c));

  auto remove = [&](std::size_t i) {
    if (removed[i]) return;
    removed[i] = true;
    std::size_t& count = live[colouring[i]];
    --count;
    if (count > 0) heap.emplace(count, -static_cast<std::int64_t>(colouring[i]));
  };

  while (out.edges.size() < out.target && !heap.empty()) {
    auto [count, neg] = heap.top();
    heap.pop();
    const auto c = static_cast<std::uint32_t>(-neg);
    if (live[c] != count || count == 0) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t i : by_colour[c]) {
      if (!removed[i]) chosen.push_back(i);
    }
    for (std::size_t i : chosen) {
      out.edges.push_back(g.edges()[i]);
      removed[i] = true;
    }
    live[c] = 0;
    for (std::size_t i : chosen) {
      for (Vertex v : {g.edges()[i].u, g.edges()[i].v}) {
        for (std::size_t j : incident[v]) remove(j);
      }
    }
    out.colours.push_back(c);
  }
  std::sort(out.colours.begin(), out.colours.end());
  return out;
}

EdgeColouring colour_by_product(const Graph& g, const Labeling& labels) {
  std::vector<Rational> products;
  products.reserve(g.edge_count());
  for (const Edge& e : g.edges()) products.push_back(labels[e.u] * labels[e.v]);
  std::vector<Rational> distinct = products;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> colour;
  colour.reserve(products.size());
  for (const auto& p : products) {
    colour.push_back(static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), p) - distinct.begin()));
  }
  return EdgeColouring(g, std::move(colour));
}

namespace {

// Certified floor and ceiling of h = N / (32 (ln N)^eps).
std::pair<Integer, Integer> interval_half_width(std::uint64_t n, const Rational& eps) {
  for (mpfr_prec_t prec = kDefaultPrecision; prec <= 16 * kDefaultPrecision; prec *= 2) {
    const Interval big_n = Interval::from_integer(Integer(static_cast<unsigned long>(n)), prec);
    const Interval h =
        big_n / (Interval::from_integer(32, prec) * pow(log(big_n), Interval::from_rational(eps, prec)));
    auto lo = h.certain_floor();
    auto hi = h.certain_ceil();
    if (lo && hi) return {*lo, *hi};
  }
  throw InternalError("could not certify the interval width");
}

}  // namespace

IntervalExperiment interval_matching_experiment(std::uint64_t n, const Rational& eps) {
  if (n < 2 || (n & (n - 1)) != 0) throw DomainError("N must be a power of two >= 2");
  if (n > (std::uint64_t{1} << 20)) throw SizeError("interval experiment supports N <= 2^20");
  if (sgn(eps) <= 0 || eps > 1) throw DomainError("eps must lie in (0, 1]");

  IntervalExperiment out;
  out.n_vertices = n;
  out.eps = eps;
  const auto [h_floor, h_ceil] = interval_half_width(n, eps);
  const Integer big_n(static_cast<unsigned long>(n));
  out.interval_low = big_n - h_floor;
  out.interval_high = big_n + h_ceil - 1;
  out.interval_size = Integer(out.interval_high - out.interval_low + 1).get_ui();

  const std::uint64_t lo = out.interval_low.get_ui();
  const std::uint64_t hi = out.interval_high.get_ui();
  // Vertex v stands for the integer v + 1.
  std::vector<Edge> edges;
  std::vector<std::uint64_t> products;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t j_min = std::max(i + 1, lo > i ? lo - i : 0);
    const std::uint64_t j_max = std::min<std::uint64_t>(n, hi > i ? hi - i : 0);
    for (std::uint64_t j = j_min; j <= j_max; ++j) {
      edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1)});
      products.push_back(i * j);
    }
  }
  std::vector<std::uint64_t> distinct = products;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> colour;
  colour.reserve(products.size());
  for (std::uint64_t p : products) {
    colour.push_back(static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), p) - distinct.begin()));
  }

  const Graph g(n, std::move(edges));
  const EdgeColouring colouring(g, std::move(colour));
  out.edge_count = g.edge_count();
  out.max_degree = g.max_degree();
  out.colour_count = colouring.colour_count();

  const ColourMatching m = greedy_colour_matching(g, colouring);
  out.target = m.target;
  out.matching = m.edges;
  out.matching_size = m.edges.size();
  out.colours_used = m.colours.size();

  std::set<std::uint64_t> sums, prods;
  for (const Edge& e : m.edges) {
    sums.insert(std::uint64_t{e.u} + e.v + 2);
    prods.insert((std::uint64_t{e.u} + 1) * (std::uint64_t{e.v} + 1));
  }
  out.sum_count = sums.size();
  out.product_count = prods.size();
  out.sums_within_interval = out.sum_count <= out.interval_size &&
                             std::all_of(sums.begin(), sums.end(), [&](std::uint64_t s) {
                               return s >= lo && s <= hi;
                             });
  out.matching_meets_target = out.matching_size >= out.target;
  if (out.max_degree == 0) {
    out.colours_within_bound = out.colours_used == 0;
  } else {
    const std::size_t bound = (out.colour_count + 2 * out.max_degree - 1) / (2 * out.max_degree);
    out.colours_within_bound = out.colours_used <= bound;
  }
  return out;
}

SparseReduction sparse_from_dense(const Graph& g, const Labeling& labels, std::uint64_t seed,
                                  unsigned retries) {
  if (retries < 1) throw DomainError("sparse_from_dense needs at least one attempt");
  const SumProductProfile profile = sp_profile(g, labels);
  const std::size_t max_deg = g.max_degree();
  const std::size_t edge_count = g.edge_count();
  if (max_deg == 0) throw PreconditionError("graph has no edges");

  const Integer big_d(static_cast<unsigned long>(max_deg));
  const Integer big_e(static_cast<unsigned long>(edge_count));
  const Integer big_n(static_cast<unsigned long>(g.vertex_count()));
  // d >= 5 sqrt(D) with d = 2|E|/N, squared: 4|E|^2 >= 25 D N^2.
  if (4 * big_e * big_e < 25 * big_d * big_n * big_n) {
    throw PreconditionError("average degree is below 5 sqrt(D) (D = " + std::to_string(max_deg) +
                            ", |E| = " + std::to_string(edge_count) +
                            ", N = " + std::to_string(g.vertex_count()) + ")");
  }

  SparseReduction out;
  out.max_degree = max_deg;
  out.edge_count = edge_count;
  out.sp_bound = profile.sp();
  const Integer big_s(static_cast<unsigned long>(out.sp_bound));
  out.guaranteed_size = Integer((big_e + 16 * big_d - 1) / (16 * big_d)).get_ui();

  // Largest integer strictly below 2 sqrt(D): the degree bound handed to the
  // matching lemma.
  std::size_t sub_degree_bound = int_sqrt_floor(4 * big_d).get_ui();
  if (Integer(static_cast<unsigned long>(sub_degree_bound)) * sub_degree_bound == 4 * big_d) {
    --sub_degree_bound;
  }

  const std::vector<Rational> sums(profile.sums.begin(), profile.sums.end());
  std::vector<Rational> edge_sum(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    edge_sum[i] = labels[g.edges()[i].u] + labels[g.edges()[i].v];
  }
  Integer two_128;
  mpz_ui_pow_ui(two_128.get_mpz_t(), 2, 128);

  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    CounterRng rng(seed, attempt);
    // Keep s when x / 2^64 < 1/sqrt(D), i.e. x^2 D < 2^128.
    std::set<Rational> kept;
    for (const auto& s : sums) {
      const std::uint64_t draw = rng();
      Integer x;
      mpz_import(x.get_mpz_t(), 1, 1, sizeof draw, 0, 0, &draw);
      if (x * x * big_d < two_128) kept.insert(s);
    }
    std::vector<Edge> sub_edges;
    for (std::size_t i = 0; i < edge_count; ++i) {
      if (kept.count(edge_sum[i])) sub_edges.push_back(g.edges()[i]);
    }
    const Graph h(g.vertex_count(), sub_edges);
    const Integer r_size(static_cast<unsigned long>(kept.size()));
    const Integer h_edges(static_cast<unsigned long>(h.edge_count()));
    const Integer h_deg(static_cast<unsigned long>(h.max_degree()));
    const bool small_r = r_size * r_size * big_d < 4 * big_s * big_s;
    const bool low_degree = h_deg * h_deg < 4 * big_d;
    const bool enough_edges = 4 * h_edges * h_edges * big_d >= big_e * big_e;
    if (!(small_r && low_degree && enough_edges) || h.edge_count() == 0) continue;

    const ColourMatching m =
        greedy_colour_matching(h, colour_by_product(h, labels), sub_degree_bound);
    out.attempts = attempt + 1;
    out.sampled_sums.assign(kept.begin(), kept.end());
    out.sub_edge_count = h.edge_count();
    out.sub_max_degree = h.max_degree();
    out.matching = m.edges;
    std::set<Rational> msums, mprods;
    for (const Edge& e : m.edges) {
      out.pairs.emplace_back(labels[e.u], labels[e.v]);
      msums.insert(labels[e.u] + labels[e.v]);
      mprods.insert(labels[e.u] * labels[e.v]);
    }
    out.sum_count = msums.size();
    out.product_count = mprods.size();

    auto within = [&](std::size_t count) {
      const Integer c(static_cast<unsigned long>(count));
      return c * c * big_d <= 4 * big_s * big_s;
    };
    if (m.edges.size() < out.guaranteed_size || !within(out.sum_count) ||
        !within(out.product_count)) {
      throw InternalError("sparse_from_dense: accepted sample violates the output bounds");
    }
    return out;
  }
  throw StochasticFailure("sparse_from_dense: no sample passed the acceptance tests in " +
                              std::to_string(retries) + " attempts",
                          retries);
}

}  // namespace sumprod
