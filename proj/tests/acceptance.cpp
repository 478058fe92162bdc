// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sumprod/constructions.hpp"
#include "sumprod/elliptic.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/expander.hpp"
#include "sumprod/golden.hpp"
#include "sumprod/io.hpp"
#include "sumprod/random.hpp"
#include "sumprod/translates.hpp"

using namespace sumprod;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && seconds >= limit_seconds) {
    out.ok = false;
    out.detail = "over the time limit";
  }
  if (!out.ok) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << (out.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << seconds << " s, limit "
       << limit_seconds << " s)";
  if (!out.detail.empty()) line << ": " << out.detail;
  std::cout << line.str() << std::endl;
}

Labeling one_to(std::size_t n) {
  std::vector<Integer> v;
  for (std::size_t i = 1; i <= n; ++i) v.emplace_back(static_cast<unsigned long>(i));
  return Labeling::from_integers(v);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Outcome table9_golden() {
  Outcome o;
  const Graph g = io::read_graph_file(SUMPROD_FIXTURES "/table9_graph.txt");
  const Labeling l = io::read_labeling_file(SUMPROD_FIXTURES "/table9_labels.txt");
  const auto p = sp_profile(g, l);
  const Rational s = 4564560;
  o.require(g.edge_count() == 9 && g.is_matching(), "fixture is not a 9-edge matching");
  o.require(std::set<Rational>(l.values().begin(), l.values().end()).size() == 18, "labels not distinct");
  o.require(p.sums == std::set<Rational>{s, 2 * s, 4 * s}, "sums differ");
  o.require(p.products == std::set<Rational>{Rational(parse_integer("5101411431375")),
                                             Rational(parse_integer("-34182763114500")),
                                             Rational(parse_integer("-164308056580096"))},
            "products differ");
  o.require(p.sp() == 3 && sqrt_edge_bound(g) == 3, "sp is not 3 = ceil(sqrt 9)");
  return o;
}

Outcome curve_parameters() {
  Outcome o;
  const EllipticCurve c = curve_from_triple(Rational(4, 9), Rational(16, 9), Rational(1, 9));
  o.require(c.alpha == -63 && c.beta == 162, "got (" + to_string(c.alpha) + ", " + to_string(c.beta) + ")");
  return o;
}

Outcome euler() {
  Outcome o;
  const auto two = euler_chain(2);
  o.require(two.size() == 3 && two[1] == Rational(191, 60) &&
                two[2] == parse_rational("1175343361/1154457480"),
            "depth-2 values differ");
  const auto three = euler_chain(3);
  const auto& x3 = three.back();
  o.require(Integer(x3.get_num()).get_str().size() == 38 && Integer(x3.get_den()).get_str().size() == 38,
            "depth-3 element is not 38/38 digits");
  for (const auto& x : three) {
    const Rational sq = x * x;
    o.require(is_rational_square(sq) && is_rational_square(sq + 2) && is_rational_square(sq + 6),
              "element " + to_string(x) + " fails the square checks");
  }
  return o;
}

Outcome elliptic_pipeline() {
  Outcome o;
  const EllipticCurve c(-63, 162);
  const auto pts = scan_rational_points(c, 20);
  std::optional<CurvePoint> generator;
  for (const auto& p : pts) {
    if (!c.contains(p)) o.require(false, "scan returned an off-curve point");
    if (!generator && !small_order(c, p)) generator = p;
  }
  o.require(generator.has_value(), "no non-torsion point found");
  o.require(std::find(pts.begin(), pts.end(), CurvePoint(7, 8)) != pts.end(), "(7, 8) missing");
  if (!o.ok) return o;
  const SquareTriple triple(Rational(4, 9), Rational(16, 9), Rational(1, 9));
  const auto fam = translate_family_from_curve(triple, *generator, 5);
  const std::set<Rational> distinct(fam.translates.begin(), fam.translates.end());
  o.require(distinct.size() >= 5, "fewer than 5 translates");
  o.require(verify_family({triple.a(1), triple.a(2), triple.a(3)}, fam.translates).ok,
            "translates fail verification");
  o.require(verify_family(fam.family.base, fam.family.translates).ok && is_integral(fam.family),
            "cleared family fails verification");
  const auto fm = matching_from_family(fam.family, 3, 3);
  const auto p = sp_profile(fm.graph, fm.labels);
  o.require(fm.graph.edge_count() == 9 && fm.graph.is_matching(), "matching does not have 9 edges");
  o.require(p.sum_count() == 3 && p.product_count() == 3,
            "profile (" + std::to_string(p.sum_count()) + ", " + std::to_string(p.product_count()) + ")");
  o.detail = "generator " + generator->to_string();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  const Integer bound = 1000000;
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const long a = static_cast<long>(rng() % 20001) - 10000;
    long b = static_cast<long>(rng() % 20001) - 10000;
    if (a == b) b = a + 1;
    std::vector<Integer> exact;
    for (const auto& x : pair_translates(a, b)) {
      if (abs(x) <= bound) exact.push_back(x);
    }
    if (exact != brute_force_translates({a, b}, bound)) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

Outcome triangles() {
  Outcome o;
  for (unsigned m = 3; m <= 10; ++m) {
    const LabeledGraph lg = triangle_family(m);
    const std::set<Rational> labels(lg.labels.values().begin(), lg.labels.values().end());
    o.require(labels.size() == lg.labels.size(), "labels repeat at m = " + std::to_string(m));
    const auto p = sp_profile(lg.graph, lg.labels);
    o.require(p.sum_count() == m, "sum count differs at m = " + std::to_string(m));
    o.require(odd_cycle_bound(lg.graph, 3) <= m, "odd-cycle bound exceeds m = " + std::to_string(m));
  }
  return o;
}

Outcome greedy_lemma() {
  Outcome o;
  std::mt19937_64 rng(7);
  int violations = 0, graphs = 0;
  while (graphs < 200) {
    const std::size_t n = 4 + rng() % 60;
    const double p = 0.05 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    const auto palette = static_cast<std::uint32_t>(3 + rng() % 80);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) candidates.push_back({u, v});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<std::set<std::uint32_t>> used(n);
    std::vector<std::pair<Edge, std::uint32_t>> kept;
    for (const Edge& e : candidates) {
      std::vector<std::uint32_t> free;
      for (std::uint32_t c = 0; c < palette; ++c)
        if (!used[e.u].count(c) && !used[e.v].count(c)) free.push_back(c);
      if (free.empty()) continue;
      const auto c = free[rng() % free.size()];
      used[e.u].insert(c);
      used[e.v].insert(c);
      kept.emplace_back(e, c);
    }
    if (kept.empty()) continue;
    std::sort(kept.begin(), kept.end());
    std::vector<Edge> edges;
    std::vector<std::uint32_t> colours;
    for (auto& [e, c] : kept) {
      edges.push_back(e);
      colours.push_back(c);
    }
    const Graph g(n, edges);
    const EdgeColouring colouring(g, colours);
    const auto m = greedy_colour_matching(g, colouring);
    const std::size_t delta = g.max_degree();
    std::set<Vertex> touched;
    bool matching = true;
    for (const Edge& e : m.edges) {
      matching = matching && touched.insert(e.u).second && touched.insert(e.v).second &&
                 std::binary_search(edges.begin(), edges.end(), e);
    }
    if (!matching || m.edges.size() < ceil_div(g.edge_count(), 4 * delta) ||
        m.colours.size() > ceil_div(colouring.colour_count(), 2 * delta)) {
      ++violations;
    }
    ++graphs;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  return o;
}

Outcome dense_to_sparse() {
  Outcome o;
  const Graph g = Graph::complete(64);
  const Labeling l = one_to(64);
  const std::size_t s = sp_profile(g, l).sp();
  const std::size_t big_d = g.max_degree();
  int successes = 0, reported = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    try {
      const auto r = sparse_from_dense(g, l, seed, 1);
      ++successes;
      std::set<Vertex> touched;
      std::set<Rational> sums, products;
      for (std::size_t i = 0; i < r.matching.size(); ++i) {
        const Edge& e = r.matching[i];
        o.require(touched.insert(e.u).second && touched.insert(e.v).second, "not a matching");
        sums.insert(l[e.u] + l[e.v]);
        products.insert(l[e.u] * l[e.v]);
      }
      o.require(r.matching.size() >= r.guaranteed_size && r.guaranteed_size == ceil_div(g.edge_count(), 16 * big_d),
                "matching below ceil(|E|/(16D))");
      o.require(sums.size() * sums.size() * big_d <= 4 * s * s, "sum set exceeds 2S/sqrt(D)");
      o.require(products.size() * products.size() * big_d <= 4 * s * s, "product set exceeds 2S/sqrt(D)");
      o.require(r.sampled_sums.size() * r.sampled_sums.size() * big_d < 4 * s * s, "|R| >= 2S/sqrt(D)");
      o.require(r.sub_max_degree * r.sub_max_degree < 4 * big_d, "max degree of H >= 2 sqrt(D)");
      o.require(4 * r.sub_edge_count * r.sub_edge_count * big_d >= g.edge_count() * g.edge_count(),
                "|E(H)| < |E| / (2 sqrt(D))");
    } catch (const StochasticFailure& e) {
      o.require(e.attempts() == 1, "retry report has the wrong attempt count");
      ++reported;
    }
  }
  o.require(successes >= 1, "no success in 20 attempts");
  if (o.ok) o.detail = std::to_string(successes) + " accepted, " + std::to_string(reported) + " rejected with report";
  return o;
}

bool spectral_identity(std::uint64_t n, const std::vector<std::uint64_t>& t) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::uint64_t y = 0; y < n; ++y)
    for (auto s : t) m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>((s + n - y) % n)) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<double> eig;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) eig.push_back(std::abs(solver.eigenvalues()[i]));
  std::vector<double> sums{static_cast<double>(t.size())};
  for (const auto& x : char_sum_magnitudes(n, t)) sums.push_back(x.midpoint());
  std::sort(eig.begin(), eig.end());
  std::sort(sums.begin(), sums.end());
  for (std::size_t i = 0; i < eig.size(); ++i) {
    if (std::abs(eig[i] - sums[i]) > 1e-9) return false;
  }
  return true;
}

Outcome expander() {
  Outcome o;
  std::ostringstream summary;
  for (std::uint64_t n : {512u, 1024u, 2048u, 4096u}) {
    const auto d = static_cast<std::uint64_t>(std::ceil(8 * std::log(static_cast<double>(n))));
    const auto r = cayley_sum_experiment(n, d, 20240601, 200);
    const std::string at = " at n = " + std::to_string(n);
    o.require(r.good.certificate.value.certainly_less_than(good_set_threshold(n, d)), "certificate" + at);
    o.require(r.sum_set_size <= 2 * r.good.residues.size(), "sum-set exceeds 2|T|" + at);
    o.require(r.diameter.has_value(), "disconnected" + at);
    if (!r.diameter) continue;
    o.require(sumset_diameter_inequality(n, *r.diameter, r.sum_set_size), "diameter lemma" + at);
    o.require(min_sumset_from_diameter(n, *r.diameter) <= r.sum_set_size, "sum-set below lemma minimum" + at);
    summary << "n=" << n << " d=" << d << " s=" << r.sum_set_size << " in [" << r.min_sumset << ", "
            << 2 * d << "]";
    if (n < 4096) summary << "; ";
  }
  for (std::uint64_t n : {8u, 17u, 32u, 50u, 64u}) {
    for (std::uint64_t d : {1u, 4u, 7u}) {
      o.require(spectral_identity(n, CounterRng(n, d).subset(n, d)),
                "spectral identity at n = " + std::to_string(n));
    }
  }
  if (o.ok) o.detail = summary.str();
  return o;
}

Outcome genus() {
  Outcome o;
  o.require(genus_of_system(3) == 1 && genus_of_system(4) == 5 && genus_of_system(5) == 17,
            "genus values differ");
  return o;
}

}  // namespace

int main() {
  criterion(1, "nine-edge table: 3 sums, 3 products, 18 labels", 1, table9_golden);
  criterion(2, "curve parameters (-63, 162)", 1, curve_parameters);
  criterion(3, "Euler chain", 1, euler);
  criterion(4, "elliptic pipeline to a 9-edge (3, 3) matching", 30, elliptic_pipeline);
  criterion(5, "pair translates vs brute force, 500 pairs", 60, oracle_equivalence);
  criterion(6, "triangle families m = 3..10", 5, triangles);
  criterion(7, "greedy colour-class matching on 200 graphs", 30, greedy_lemma);
  criterion(8, "dense-to-sparse reduction on K_64, 20 seeds", 30, dense_to_sparse);
  criterion(9, "Cayley sum graph expanders n = 512..4096", 120, expander);
  criterion(10, "genus of the k-square system", 1, genus);
  std::cout << "NOTE 11 asymptotic exponents, curve ranks and the n/(log n)^eps product count are "
               "not checked at this scale"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
