#pragma once

// Text formats for graphs and labelings, and JSON records for families,
// curves and experiment reports. Numbers in JSON are decimal strings.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumprod/constructions.hpp"
#include "sumprod/elliptic.hpp"
#include "sumprod/expander.hpp"
#include "sumprod/graphs.hpp"
#include "sumprod/translates.hpp"

namespace sumprod::io {

/// One "u v" edge per line, 0-indexed. Blank lines and lines starting with
/// '#' are skipped. A leading line holding a single integer fixes the vertex
/// count; otherwise it is one more than the largest endpoint.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// One "v value" line per vertex; values are integers or "p/q". Every vertex
/// 0..n-1 must appear exactly once.
Labeling read_labeling(std::istream& in);
Labeling read_labeling_file(const std::string& path);
void write_labeling(std::ostream& out, const Labeling& labels);

std::string profile_json(const Graph& g, const SumProductProfile& profile);

/// {"base", "translates", "scale", "witness_roots"}. Throws ValidationError
/// when the family does not verify.
std::string family_json(const TranslateFamily& family);
/// Parses and re-verifies, including the witness roots.
TranslateFamily parse_family_json(std::string_view text);

/// {"alpha", "beta", "points": [["T", "S"], ...]}. Affine points only.
std::string curve_json(const EllipticCurve& curve, const std::vector<CurvePoint>& points);
/// Parses and checks every point against the curve.
std::pair<EllipticCurve, std::vector<CurvePoint>> parse_curve_json(std::string_view text);

/// {parameters, matching_size, sum_count, product_count, guarantees_checked, pairs}.
std::string interval_report_json(const IntervalExperiment& report);
std::string sparse_report_json(const SparseReduction& report, std::uint64_t seed,
                               unsigned retries);
std::string matching_report_json(const std::string& construction, const std::string& parameters_json,
                                 const std::vector<std::pair<Rational, Rational>>& pairs,
                                 const std::string& guarantees_json);

/// {n, d, T, certificate, delta, sum_set_size, diameter, lemma_check}.
std::string cayley_report_json(const CayleyExperiment& report, std::uint64_t seed);

struct VerifyOutcome {
  std::string kind;  // "family", "curve", "matching-report", "cayley-report"
  bool ok = false;
  std::string detail;
};

/// Re-checks a JSON artifact written by this library, recomputing every
/// claim it makes from its own data.
VerifyOutcome verify_json(std::string_view text);

}  // namespace sumprod::io
