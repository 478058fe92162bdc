#pragma once

// The optimal 9-edge integer matching with 3 sums and 3 products.

#include <utility>
#include <vector>

#include "sumprod/arith.hpp"
#include "sumprod/graphs.hpp"
#include "sumprod/translates.hpp"

namespace sumprod::golden {

/// 4564560; the sums are s, 2s and 4s.
Integer table9_sum_unit();

/// The nine pairs, row by row.
std::vector<std::pair<Integer, Integer>> table9_pairs();

std::vector<Integer> table9_sums();      // ascending
std::vector<Integer> table9_products();  // as listed: 5101411431375, -34182763114500, -164308056580096

/// The pairs as a 9-edge matching; edge i joins vertices 2i and 2i+1.
Graph table9_graph();
Labeling table9_labels();

/// Base {s^2, 4 s^2, 16 s^2} with translates {-4p} for the three products p.
TranslateFamily table9_family();

}  // namespace sumprod::golden
