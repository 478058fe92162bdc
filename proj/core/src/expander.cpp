#include "sumprod/expander.hpp"

#include <algorithm>
#include <set>

#include "sumprod/errors.hpp"
#include "sumprod/random.hpp"

namespace sumprod {

namespace {

void check_residues(std::uint64_t n, const std::vector<std::uint64_t>& residues) {
  if (residues.empty()) throw ValidationError("generator set T is empty");
  std::set<std::uint64_t> seen;
  for (std::uint64_t t : residues) {
    if (t >= n) throw ValidationError("residue " + std::to_string(t) + " is not below n");
    if (!seen.insert(t).second) throw ValidationError("residue " + std::to_string(t) + " repeats");
  }
}

Interval interval_max(const Interval& a, const Interval& b) { return -min(-a, -b); }

}  // namespace

Graph build_cayley_sum(std::uint64_t n, const std::vector<std::uint64_t>& residues) {
  if (n < 3) throw DomainError("Cayley sum graphs need n >= 3");
  check_residues(n, residues);
  std::vector<Edge> edges;
  for (std::uint64_t t : residues) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t z = (t + n - y) % n;
      if (y < z) edges.push_back({static_cast<Vertex>(y), static_cast<Vertex>(z)});
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

std::vector<Interval> char_sum_magnitudes(std::uint64_t n,
                                          const std::vector<std::uint64_t>& residues) {
  if (n < 2) throw DomainError("character sums need n >= 2");
  if (n > (std::uint64_t{1} << 24)) throw SizeError("character sums support n <= 2^24");
  check_residues(n, residues);
  const mpfr_prec_t prec = kCharSumPrecision;
  std::vector<Interval> cos_table, sin_table;
  cos_table.reserve(n);
  sin_table.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    cos_table.push_back(Interval::cos_two_pi_ratio(static_cast<long>(r), static_cast<long>(n), prec));
    sin_table.push_back(Interval::sin_two_pi_ratio(static_cast<long>(r), static_cast<long>(n), prec));
  }
  std::vector<Interval> out;
  out.reserve(n - 1);
  for (std::uint64_t j = 1; j < n; ++j) {
    Interval re(prec), im(prec);
    for (std::uint64_t s : residues) {
      const std::uint64_t r = (j * s) % n;
      re += cos_table[r];
      im += sin_table[r];
    }
    out.push_back(sqrt(square(re) + square(im)));
  }
  return out;
}

CharSumCertificate char_sum_max(std::uint64_t n, const std::vector<std::uint64_t>& residues) {
  const auto magnitudes = char_sum_magnitudes(n, residues);
  CharSumCertificate out;
  out.value = magnitudes.front();
  out.argmax = 1;
  for (std::size_t i = 1; i < magnitudes.size(); ++i) {
    if (mpfr_greater_p(magnitudes[i].upper().get(), magnitudes[out.argmax - 1].upper().get())) {
      out.argmax = i + 1;
    }
    out.value = interval_max(out.value, magnitudes[i]);
  }
  return out;
}

Interval good_set_threshold(std::uint64_t n, std::uint64_t d) {
  const Interval ten_n = Interval::from_integer(Integer(static_cast<unsigned long>(n)) * 10);
  return Interval::from_integer(3) * sqrt(Interval::from_integer(Integer(static_cast<unsigned long>(d)))) *
         sqrt(log(ten_n));
}

GoodSet random_good_T(std::uint64_t n, std::uint64_t d, std::uint64_t seed, unsigned attempts) {
  if (attempts < 1) throw DomainError("random_good_T needs at least one attempt");
  if (n < 3) throw DomainError("random_good_T needs n >= 3");
  const Integer big_n(static_cast<unsigned long>(n)), big_d(static_cast<unsigned long>(d));
  if (d < 1 || big_d * big_d * big_d > big_n * big_n) {
    throw PreconditionError("random_good_T needs 1 <= d <= n^(2/3)");
  }
  GoodSet out;
  out.threshold = good_set_threshold(n, d);
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    CounterRng rng(seed, attempt);
    auto residues = rng.subset(n, d);
    auto certificate = char_sum_max(n, residues);
    if (certificate.value.certainly_less_than(out.threshold)) {
      out.residues = std::move(residues);
      out.certificate = std::move(certificate);
      out.attempts = attempt + 1;
      return out;
    }
  }
  throw StochasticFailure("random_good_T: no certified set in " + std::to_string(attempts) +
                              " attempts",
                          attempts);
}

Rational expander_delta(const Rational& d, const Rational& lambda) {
  if (sgn(d) <= 0) throw DomainError("degree must be positive");
  if (sgn(lambda) < 0 || lambda > d) throw DomainError("need 0 <= lambda <= d");
  return (d - lambda) / (2 * d);
}

Interval expander_delta(std::uint64_t d, const Interval& lambda) {
  if (d == 0) throw DomainError("degree must be positive");
  const Interval big_d = Interval::from_integer(Integer(static_cast<unsigned long>(d)));
  if (lambda.certainly_greater_than(big_d) || lambda.certainly_less_than(Interval::from_integer(0))) {
    throw DomainError("need 0 <= lambda <= d, got " + lambda.to_string());
  }
  return (big_d - lambda) / (Interval::from_integer(2) * big_d);
}

CayleyExperiment cayley_sum_experiment(std::uint64_t n, std::uint64_t d, std::uint64_t seed,
                                       unsigned attempts) {
  CayleyExperiment out;
  out.n = n;
  out.d = d;
  out.good = random_good_T(n, d, seed, attempts);
  const std::uint64_t degree = out.good.residues.size();
  out.delta = expander_delta(degree, out.good.certificate.value);
  const Interval big_d = Interval::from_integer(Integer(static_cast<unsigned long>(d)));
  out.delta_floor = (big_d - out.good.threshold) / (Interval::from_integer(2) * big_d);

  const Graph g = build_cayley_sum(n, out.good.residues);
  out.edge_count = g.edge_count();
  std::set<std::uint64_t> sums;
  for (const Edge& e : g.edges()) sums.insert(std::uint64_t{e.u} + e.v + 2);
  out.sum_set_size = sums.size();
  out.sum_set_bound = 2 * degree;
  out.diameter = diameter(g);
  if (out.diameter && *out.diameter >= 1) {
    out.min_sumset = min_sumset_from_diameter(n, *out.diameter);
    out.lemma_check = sumset_diameter_inequality(n, *out.diameter, out.sum_set_size);
  }
  return out;
}

}  // namespace sumprod
