#include "sumprod/golden.hpp"

namespace sumprod::golden {

Integer table9_sum_unit() { return 4564560; }

std::vector<std::pair<Integer, Integer>> table9_pairs() {
  static const long rows[9][2] = {
      {283815, 17974425},    {597975, 8531145},     {1954575, 2609985},
      {-1711710, 19969950},  {-2852850, 11981970},  {-3993990, 8558550},
      {-6607744, 24865984},  {-9042176, 18171296},  {-10737584, 15302144},
  };
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& r : rows) out.emplace_back(Integer(r[0]), Integer(r[1]));
  return out;
}

std::vector<Integer> table9_sums() {
  const Integer s = table9_sum_unit();
  return {s, 2 * s, 4 * s};
}

std::vector<Integer> table9_products() {
  return {Integer("5101411431375"), Integer("-34182763114500"), Integer("-164308056580096")};
}

Graph table9_graph() { return Graph::matching(9); }

Labeling table9_labels() {
  std::vector<Integer> values;
  for (const auto& [x, y] : table9_pairs()) {
    values.push_back(x);
    values.push_back(y);
  }
  return Labeling::from_integers(values);
}

TranslateFamily table9_family() {
  const Integer s = table9_sum_unit();
  TranslateFamily f;
  f.base = {Rational(s * s), Rational(4 * s * s), Rational(16 * s * s)};
  for (const auto& p : table9_products()) f.translates.emplace_back(-4 * p);
  return f;
}

}  // namespace sumprod::golden
