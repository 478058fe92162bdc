#include "sumprod/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sumprod/errors.hpp"

namespace sumprod::io {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  const Integer v = parse_integer(text);
  if (v < 0 || !v.fits_ulong_p()) throw ValidationError(what + " out of range: " + text);
  return v.get_ui();
}

std::string endpoint(mpfr_srcptr x, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.25R*g", rnd, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Json interval_json(const Interval& x) {
  return {{"lower", endpoint(x.lower().get(), MPFR_RNDD)},
          {"upper", endpoint(x.upper().get(), MPFR_RNDU)}};
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> parse_rationals(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ValidationError(std::string("missing array \"") + key + "\"");
  }
  std::vector<Rational> out;
  for (const auto& v : j[key]) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <typename T>
std::string num(const T& v) {
  if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
    return to_string(v);
  } else {
    return std::to_string(v);
  }
}

std::uint64_t get_count(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return parse_count(j[key].get<std::string>(), key);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared;
  std::uint64_t top = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (skippable(line)) continue;
    const auto t = tokens(line);
    if (t.size() == 1 && edges.empty() && !declared) {
      declared = parse_count(t[0], "vertex count");
      continue;
    }
    if (t.size() != 2) {
      throw ValidationError("graph line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    const std::uint64_t u = parse_count(t[0], "vertex");
    const std::uint64_t v = parse_count(t[1], "vertex");
    if (u > 0xffffffffULL || v > 0xffffffffULL) throw ValidationError("vertex id exceeds 32 bits");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    top = std::max({top, u + 1, v + 1});
  }
  return Graph(declared.value_or(top), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

Labeling read_labeling(std::istream& in) {
  std::map<std::uint64_t, Rational> values;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (skippable(line)) continue;
    const auto t = tokens(line);
    if (t.size() != 2) {
      throw ValidationError("labeling line " + std::to_string(line_no) + ": expected \"v value\"");
    }
    const std::uint64_t v = parse_count(t[0], "vertex");
    if (!values.emplace(v, parse_rational(t[1])).second) {
      throw ValidationError("vertex " + t[0] + " labeled twice");
    }
  }
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& [v, q] : values) {
    if (v != out.size()) throw ValidationError("vertex " + std::to_string(out.size()) + " has no label");
    out.push_back(q);
  }
  return Labeling(std::move(out));
}

Labeling read_labeling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open labeling file " + path);
  return read_labeling(in);
}

void write_labeling(std::ostream& out, const Labeling& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << " " << to_string(labels[v]) << "\n";
}

std::string profile_json(const Graph& g, const SumProductProfile& profile) {
  Json j;
  j["vertices"] = num(g.vertex_count());
  j["edges"] = num(g.edge_count());
  j["sum_count"] = num(profile.sum_count());
  j["product_count"] = num(profile.product_count());
  j["sp"] = num(profile.sp());
  j["sqrt_edge_bound"] = num(sqrt_edge_bound(g));
  j["sums"] = rationals({profile.sums.begin(), profile.sums.end()});
  j["products"] = rationals({profile.products.begin(), profile.products.end()});
  return dump(j);
}

std::string family_json(const TranslateFamily& family) {
  const FamilyCheck check = verify_family(family.base, family.translates);
  if (!check.ok) throw ValidationError("family does not verify");
  Json j;
  j["base"] = rationals(family.base);
  j["translates"] = rationals(family.translates);
  j["scale"] = to_string(family.scale);
  Json roots = Json::array();
  for (const auto& row : check.roots) roots.push_back(rationals(row));
  j["witness_roots"] = roots;
  return dump(j);
}

TranslateFamily parse_family_json(std::string_view text) {
  const Json j = parse_text(text);
  TranslateFamily f;
  f.base = parse_rationals(j, "base");
  f.translates = parse_rationals(j, "translates");
  f.scale = parse_integer(j.value("scale", std::string("1")));
  if (f.scale <= 0) throw ValidationError("scale must be positive");
  const FamilyCheck check = verify_family(f.base, f.translates);
  if (!check.ok) throw ValidationError("family does not verify: some a + x is not a square");
  if (j.contains("witness_roots")) {
    const auto& rows = j["witness_roots"];
    if (!rows.is_array() || rows.size() != f.translates.size()) {
      throw ValidationError("witness_roots has the wrong shape");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != f.base.size()) {
        throw ValidationError("witness_roots row " + std::to_string(i) + " has the wrong length");
      }
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        const Rational r = parse_rational(rows[i][k].get<std::string>());
        if (r * r != f.base[k] + f.translates[i]) {
          throw ValidationError("witness root " + to_string(r) + " does not square to base + x");
        }
      }
    }
  }
  return f;
}

std::string curve_json(const EllipticCurve& curve, const std::vector<CurvePoint>& points) {
  Json j;
  j["alpha"] = to_string(curve.alpha);
  j["beta"] = to_string(curve.beta);
  Json pts = Json::array();
  for (const auto& p : points) {
    if (p.is_infinity()) throw ValidationError("the point at infinity has no JSON form");
    pts.push_back({to_string(p.t()), to_string(p.s())});
  }
  j["points"] = pts;
  return dump(j);
}

std::pair<EllipticCurve, std::vector<CurvePoint>> parse_curve_json(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.contains("alpha") || !j.contains("beta")) throw ValidationError("curve needs alpha and beta");
  EllipticCurve curve(parse_rational(j["alpha"].get<std::string>()),
                      parse_rational(j["beta"].get<std::string>()));
  std::vector<CurvePoint> points;
  for (const auto& p : j.value("points", Json::array())) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("points are [\"T\", \"S\"] pairs");
    CurvePoint pt(parse_rational(p[0].get<std::string>()), parse_rational(p[1].get<std::string>()));
    if (!curve.contains(pt)) throw ValidationError("point " + pt.to_string() + " is off the curve");
    points.push_back(std::move(pt));
  }
  return {std::move(curve), std::move(points)};
}

std::string matching_report_json(const std::string& construction,
                                 const std::string& parameters_json,
                                 const std::vector<std::pair<Rational, Rational>>& pairs,
                                 const std::string& guarantees_json) {
  std::set<Rational> sums, products;
  Json jp = Json::array();
  for (const auto& [x, y] : pairs) {
    sums.insert(x + y);
    products.insert(x * y);
    jp.push_back({to_string(x), to_string(y)});
  }
  Json j;
  j["construction"] = construction;
  j["parameters"] = parse_text(parameters_json);
  j["matching_size"] = num(pairs.size());
  j["sum_count"] = num(sums.size());
  j["product_count"] = num(products.size());
  j["guarantees_checked"] = parse_text(guarantees_json);
  j["pairs"] = jp;
  return dump(j);
}

std::string interval_report_json(const IntervalExperiment& r) {
  Json params;
  params["N"] = num(r.n_vertices);
  params["eps"] = to_string(r.eps);
  params["interval_low"] = to_string(r.interval_low);
  params["interval_high"] = to_string(r.interval_high);
  params["interval_size"] = num(r.interval_size);
  params["edge_count"] = num(r.edge_count);
  params["max_degree"] = num(r.max_degree);
  params["colour_count"] = num(r.colour_count);
  params["target"] = num(r.target);
  params["colours_used"] = num(r.colours_used);
  Json checks;
  checks["sums_within_interval"] = r.sums_within_interval;
  checks["matching_meets_target"] = r.matching_meets_target;
  checks["colours_within_bound"] = r.colours_within_bound;
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const Edge& e : r.matching) {
    pairs.emplace_back(Rational(static_cast<unsigned long>(e.u) + 1),
                       Rational(static_cast<unsigned long>(e.v) + 1));
  }
  return matching_report_json("interval", params.dump(), pairs, checks.dump());
}

std::string sparse_report_json(const SparseReduction& r, std::uint64_t seed, unsigned retries) {
  Json params;
  params["seed"] = num(seed);
  params["retries"] = num(retries);
  params["attempts"] = num(r.attempts);
  params["max_degree"] = num(r.max_degree);
  params["edge_count"] = num(r.edge_count);
  params["sp_bound"] = num(r.sp_bound);
  params["sampled_sums"] = num(r.sampled_sums.size());
  params["sub_edge_count"] = num(r.sub_edge_count);
  params["sub_max_degree"] = num(r.sub_max_degree);
  params["guaranteed_size"] = num(r.guaranteed_size);
  const Integer d(static_cast<unsigned long>(r.max_degree));
  const Integer s(static_cast<unsigned long>(r.sp_bound));
  auto within = [&](std::size_t c) {
    const Integer x(static_cast<unsigned long>(c));
    return x * x * d <= 4 * s * s;
  };
  Json checks;
  checks["matching_meets_guarantee"] = r.matching.size() >= r.guaranteed_size;
  checks["sums_within_bound"] = within(r.sum_count);
  checks["products_within_bound"] = within(r.product_count);
  return matching_report_json("reduce", params.dump(), r.pairs, checks.dump());
}

std::string cayley_report_json(const CayleyExperiment& r, std::uint64_t seed) {
  Json j;
  j["n"] = num(r.n);
  j["d"] = num(r.d);
  j["seed"] = num(seed);
  Json t = Json::array();
  for (auto x : r.good.residues) t.push_back(num(x));
  j["T"] = t;
  Json cert = interval_json(r.good.certificate.value);
  cert["argmax"] = num(r.good.certificate.argmax);
  j["certificate"] = cert;
  j["threshold"] = interval_json(r.good.threshold);
  j["attempts"] = num(r.good.attempts);
  j["delta"] = interval_json(r.delta);
  j["delta_floor"] = interval_json(r.delta_floor);
  j["edge_count"] = num(r.edge_count);
  j["sum_set_size"] = num(r.sum_set_size);
  j["sum_set_bound"] = num(r.sum_set_bound);
  j["diameter"] = r.diameter ? Json(num(*r.diameter)) : Json(nullptr);
  j["min_sumset"] = num(r.min_sumset);
  j["lemma_check"] = r.lemma_check;
  return dump(j);
}

namespace {

VerifyOutcome verify_matching_report(const Json& j) {
  VerifyOutcome out{"matching-report", false, ""};
  std::vector<std::pair<Rational, Rational>> pairs;
  std::vector<Rational> values;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("pairs are [\"x\", \"y\"] entries");
    pairs.emplace_back(parse_rational(p[0].get<std::string>()), parse_rational(p[1].get<std::string>()));
    values.push_back(pairs.back().first);
    values.push_back(pairs.back().second);
  }
  const Labeling labels(values);  // throws on repeated labels
  const SumProductProfile profile = sp_profile(Graph::matching(pairs.size()), labels);
  if (get_count(j, "matching_size") != pairs.size() ||
      get_count(j, "sum_count") != profile.sum_count() ||
      get_count(j, "product_count") != profile.product_count()) {
    out.detail = "recorded counts differ from the pairs";
    return out;
  }
  for (const auto& [name, value] : j["guarantees_checked"].items()) {
    if (!value.get<bool>()) {
      out.detail = "guarantee " + name + " recorded as failed";
      return out;
    }
  }
  const Json& params = j["parameters"];
  const std::string construction = j.value("construction", std::string());
  if (construction == "interval") {
    const Integer lo = parse_integer(params["interval_low"].get<std::string>());
    const Integer hi = parse_integer(params["interval_high"].get<std::string>());
    for (const auto& s : profile.sums) {
      if (s < lo || s > hi) {
        out.detail = "sum " + to_string(s) + " outside the interval";
        return out;
      }
    }
    if (pairs.size() < get_count(params, "target")) {
      out.detail = "matching below the target";
      return out;
    }
  } else if (construction == "reduce") {
    const Integer d(static_cast<unsigned long>(get_count(params, "max_degree")));
    const Integer s(static_cast<unsigned long>(get_count(params, "sp_bound")));
    for (std::size_t c : {profile.sum_count(), profile.product_count()}) {
      const Integer x(static_cast<unsigned long>(c));
      if (x * x * d > 4 * s * s) {
        out.detail = "sum or product count above 2S/sqrt(D)";
        return out;
      }
    }
    if (pairs.size() < get_count(params, "guaranteed_size")) {
      out.detail = "matching below the guaranteed size";
      return out;
    }
  }
  out.ok = true;
  out.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(profile.sum_count()) +
               " sums, " + std::to_string(profile.product_count()) + " products";
  return out;
}

VerifyOutcome verify_triangle_report(const Json& j) {
  VerifyOutcome out{"triangle-report", false, ""};
  std::vector<Rational> values;
  for (const auto& v : j["labels"]) values.push_back(parse_rational(v.get<std::string>()));
  if (values.size() % 3 != 0) throw ValidationError("labels come in triangles of three");
  const Labeling labels(values);
  std::vector<Edge> edges;
  for (Vertex t = 0; 3 * std::size_t{t} < values.size(); ++t) {
    edges.push_back({3 * t, 3 * t + 1});
    edges.push_back({3 * t, 3 * t + 2});
    edges.push_back({3 * t + 1, 3 * t + 2});
  }
  const Graph g(values.size(), std::move(edges));
  const SumProductProfile profile = sp_profile(g, labels);
  const std::uint64_t m = get_count(j, "m");
  if (get_count(j, "triangles") != values.size() / 3 ||
      Integer(static_cast<unsigned long>(values.size() / 3)) != binomial(m, 3) ||
      get_count(j, "sum_count") != profile.sum_count() ||
      get_count(j, "product_count") != profile.product_count() ||
      get_count(j, "odd_cycle_bound") != odd_cycle_bound(g, 3)) {
    out.detail = "recorded counts differ from the labels";
    return out;
  }
  if (profile.sum_count() > m) {
    out.detail = "more than m distinct sums";
    return out;
  }
  out.ok = true;
  out.detail = std::to_string(values.size() / 3) + " triangles, " +
               std::to_string(profile.sum_count()) + " sums, " +
               std::to_string(profile.product_count()) + " products";
  return out;
}

VerifyOutcome verify_cayley_report(const Json& j) {
  VerifyOutcome out{"cayley-report", false, ""};
  const std::uint64_t n = get_count(j, "n");
  const std::uint64_t d = get_count(j, "d");
  std::vector<std::uint64_t> residues;
  for (const auto& t : j["T"]) residues.push_back(parse_count(t.get<std::string>(), "residue"));
  const Graph g = build_cayley_sum(n, residues);
  std::set<std::uint64_t> sums;
  for (const Edge& e : g.edges()) sums.insert(std::uint64_t{e.u} + e.v + 2);
  if (sums.size() != get_count(j, "sum_set_size")) {
    out.detail = "sum-set size differs";
    return out;
  }
  if (sums.size() > 2 * residues.size()) {
    out.detail = "sum-set exceeds 2|T|";
    return out;
  }
  const CharSumCertificate cert = char_sum_max(n, residues);
  if (!cert.value.certainly_less_than(good_set_threshold(n, d))) {
    out.detail = "character-sum certificate does not clear the threshold";
    return out;
  }
  const auto diam = diameter(g);
  const bool recorded_connected = !j["diameter"].is_null();
  if (recorded_connected != diam.has_value() ||
      (diam && *diam != get_count(j, "diameter"))) {
    out.detail = "diameter differs";
    return out;
  }
  const bool lemma = diam && *diam >= 1 && sumset_diameter_inequality(n, *diam, sums.size());
  if (lemma != j["lemma_check"].get<bool>() || !lemma) {
    out.detail = "diameter lemma check fails";
    return out;
  }
  out.ok = true;
  out.detail = "n = " + std::to_string(n) + ", |T| = " + std::to_string(residues.size()) +
               ", sum-set " + std::to_string(sums.size()) + ", diameter " + std::to_string(*diam);
  return out;
}

}  // namespace

VerifyOutcome verify_json(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  if (j.contains("witness_roots") || (j.contains("base") && j.contains("translates"))) {
    const TranslateFamily f = parse_family_json(text);
    return {"family", true,
            std::to_string(f.base.size()) + " base values, " + std::to_string(f.translates.size()) +
                " translates"};
  }
  if (j.contains("alpha")) {
    const auto [curve, points] = parse_curve_json(text);
    return {"curve", true, std::to_string(points.size()) + " points on the curve"};
  }
  if (j.contains("pairs") && j.contains("guarantees_checked")) return verify_matching_report(j);
  if (j.contains("lemma_check") && j.contains("T")) return verify_cayley_report(j);
  if (j.value("construction", std::string()) == "triangles") return verify_triangle_report(j);
  throw ValidationError("unrecognized artifact");
}

}  // namespace sumprod::io
