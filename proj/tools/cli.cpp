#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "sumprod/arith.hpp"
#include "sumprod/constructions.hpp"
#include "sumprod/elliptic.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/expander.hpp"
#include "sumprod/golden.hpp"
#include "sumprod/graphs.hpp"
#include "sumprod/io.hpp"
#include "sumprod/translates.hpp"

namespace sumprod::cli {

const std::string& Command::get(const std::string& key) const {
  auto it = options.find(key);
  if (it == options.end()) throw UsageError("missing option --" + key);
  return it->second;
}

namespace {

struct OptionDef {
  const char* name;
  const char* help;
  bool required;
};

struct CommandDef {
  CommandDef(const char* name, const char* help, std::vector<OptionDef> options, bool seeded = false,
          const char* csv = nullptr, std::vector<CommandDef> modes = {})
      : name(name), help(help), options(std::move(options)), seeded(seeded), csv(csv),
        modes(std::move(modes)) {}

  const char* name;
  const char* help;
  std::vector<OptionDef> options;
  bool seeded;
  const char* csv;  // CSV column list, when CSV output is offered
  std::vector<CommandDef> modes;
};

const std::vector<CommandDef>& command_table() {
  static const std::vector<CommandDef> table = {
      {"eval", "Sum and product sets of a labeled graph",
       {{"graph", "edge list file (\"u v\" per line)", true},
        {"labels", "labeling file (\"v value\" per line)", true},
        {"odd-cycle", "also report the odd-cycle bound for this cycle length", false}}},
      {"table9", "Check the optimal 9-edge matching with 3 sums and 3 products", {}, false,
       "x,y,sum,product"},
      {"euler", "Euler's chain of rationals x with x^2, x^2+2, x^2+6 all squares",
       {{"depth", "number of steps after x_0 = 1/2 (<= 6)", true}}, false,
       "index,value,numerator_digits,denominator_digits"},
      {"curve", "Curve for a triple and its small rational points",
       {{"triple", "a1,a2,a3 as integers or p/q", true},
        {"scan", "scan bound for T numerators (default 20)", false},
        {"denominators", "largest T denominator scanned (default 4)", false},
        {"double", "report 2P for the point T,S", false}}},
      {"translates", "Square translates",
       {},
       false,
       nullptr,
       {{"pair", "All integer x with a+x and b+x squares",
         {{"a", "first base value", true}, {"b", "second base value", true}}, false, "x"},
        {"scan", "Brute-force scan of x in [-bound, bound]",
         {{"base", "comma-separated integers", true}, {"bound", "scan bound (<= 10^8)", true}},
         false, "x"},
        {"verify", "Check a translate-family JSON file", {{"file", "family JSON", true}}},
        {"curve", "Translate family from multiples of a curve point",
         {{"triple", "a1,a2,a3 (rational squares)", true},
          {"generator", "T,S of a non-torsion point", true},
          {"count", "number of translates", true}}}}},
      {"construct", "Explicit constructions",
       {},
       false,
       nullptr,
       {{"triangles", "Disjoint triangles with sums {2, 8, ..., 2*4^(m-1)}",
         {{"m", "number of powers of two (>= 3)", true}}},
        {"interval", "Colour-class matching in the interval sum graph",
         {{"N", "number of vertices, a power of two", true},
          {"eps", "exponent of log N, in (0, 1] (decimal or p/q)", true}},
         false, "x,y,sum,product"},
        {"reduce", "Random sparse matching from a dense labeled graph",
         {{"graph", "edge list file", false},
          {"labels", "labeling file", false},
          {"complete", "use K_N labeled 1..N instead of files", false},
          {"retries", "attempts before giving up (default 20)", false}},
         true, "x,y,sum,product"},
        {"real-matching", "Matching over the reals with ceil(sqrt n) sums and products",
         {{"n", "number of edges", true}}, true},
        {"family-matching", "Matching from an integral translate family",
         {{"family", "family JSON file (default: the 9-edge family)", false},
          {"sums", "number of sums", true},
          {"products", "number of products", true}},
         false, "x,y,sum,product"}}},
      {"bounds", "Lower-bound calculators",
       {},
       false,
       nullptr,
       {{"kst", "Kovari-Sos-Turan edge ceiling",
         {{"m", "side size", true}, {"k", "k", true}, {"r", "r", true}}},
        {"fk", "Matching lower bound from a translate bound r",
         {{"n", "edges", true}, {"k", "k", true}, {"r", "r", true}}},
        {"dense", "Dense-graph main terms", {{"n", "vertices", true}, {"k", "density", true}}},
        {"genus", "Genus of the k-square system", {{"k", "k >= 3", true}}},
        {"diameter", "Least sum-set size for diameter r", {{"n", "vertices", true}, {"r", "diameter", true}}}}},
      {"expander", "Cayley sum graph with a certified character-sum bound",
       {{"n", "modulus", true},
        {"d", "generator count", true},
        {"attempts", "sampling attempts (default 200)", false}},
       true},
      {"oracle", "Exhaustive minimum sp for a small matching",
       {{"n", "edges (<= 3)", true}, {"bound", "label range [-B, B] (B <= 20)", true}}, false, "x,y"},
      {"verify", "Re-check a JSON artifact", {{"file", "artifact path", true}}},
  };
  return table;
}

void add_options(CLI::App* app, const CommandDef& def, std::map<std::string, std::string>& values,
                 std::vector<std::tuple<CLI::App*, CLI::Option*, std::string>>& bound, std::string& seed,
                 std::string& out, std::string& format) {
  for (const auto& o : def.options) {
    auto* opt = app->add_option(std::string("--") + o.name, values[o.name], o.help);
    if (o.required) opt->required();
    bound.emplace_back(app, opt, o.name);
  }
  if (def.seeded) {
    app->add_option("--seed", seed, "random seed (default " + std::to_string(kDefaultSeed) + ")");
  }
  app->add_option("--out", out, "write the artifact to this file");
  app->add_option("--format", format, def.csv ? "text, json or csv" : "text or json")
      ->check(CLI::IsMember(def.csv ? std::vector<std::string>{"text", "json", "csv"}
                                     : std::vector<std::string>{"text", "json"}));
  if (def.csv) app->footer(std::string("CSV columns: ") + def.csv);
}

std::uint64_t to_count(const std::string& text, const std::string& what) {
  const Integer v = parse_integer(text);
  if (v < 0 || !v.fits_ulong_p()) throw DomainError(what + " must be a nonnegative 64-bit count");
  return v.get_ui();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

// Accepts "p/q" or a plain decimal such as 0.1.
Rational parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  return make_rational(parse_integer(digits.empty() ? "0" : digits), den);
}

std::string digits_of(const Integer& n) {
  std::string s = n.get_str();
  return std::to_string(s.size() - (s[0] == '-' ? 1 : 0));
}

std::string pairs_csv(const std::vector<std::pair<Rational, Rational>>& pairs) {
  std::ostringstream os;
  os << "x,y,sum,product\n";
  for (const auto& [x, y] : pairs) {
    os << to_string(x) << "," << to_string(y) << "," << to_string(Rational(x + y)) << ","
       << to_string(Rational(x * y)) << "\n";
  }
  return os.str();
}

std::vector<std::pair<Rational, Rational>> matching_pairs(const Graph& g, const Labeling& l) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const Edge& e : g.edges()) out.emplace_back(l[e.u], l[e.v]);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_eval(const Command& c) {
  const Graph g = io::read_graph_file(c.get("graph"));
  const Labeling l = io::read_labeling_file(c.get("labels"));
  const SumProductProfile profile = sp_profile(g, l);
  std::string out = io::profile_json(g, profile);
  if (c.has("odd-cycle")) {
    const auto k = static_cast<unsigned>(to_count(c.get("odd-cycle"), "odd-cycle"));
    const std::uint64_t bound = odd_cycle_bound(g, k);
    out.insert(out.rfind("\n}"), ",\n  \"odd_cycle_bound\": \"" + std::to_string(bound) + "\"");
  }
  return out;
}

std::string run_table9(const Command& c) {
  const Graph g = golden::table9_graph();
  const Labeling l = golden::table9_labels();
  const SumProductProfile profile = sp_profile(g, l);
  std::set<Rational> want_sums, want_products;
  for (const auto& s : golden::table9_sums()) want_sums.insert(Rational(s));
  for (const auto& p : golden::table9_products()) want_products.insert(Rational(p));
  const bool ok = profile.sums == want_sums && profile.products == want_products &&
                  l.size() == 18 && profile.sp() == sqrt_edge_bound(g);
  if (!ok) throw InternalError("the 9-edge table does not reproduce 3 sums and 3 products");
  const auto pairs = matching_pairs(g, l);
  if (c.format == "csv") return pairs_csv(pairs);
  if (c.format == "json") {
    return io::matching_report_json("table9", "{}", pairs, R"({"three_sums": true, "three_products": true, "sp_equals_sqrt_bound": true})");
  }
  std::ostringstream os;
  for (const auto& [x, y] : pairs) {
    os << to_string(x) << " " << to_string(y) << "  sum " << to_string(Rational(x + y))
       << "  product " << to_string(Rational(x * y)) << "\n";
  }
  os << "18 distinct labels, " << profile.sum_count() << " sums, " << profile.product_count()
     << " products, sp = " << profile.sp() << " = ceil(sqrt(9))\n";
  return os.str();
}

std::string run_euler(const Command& c) {
  const auto depth = static_cast<unsigned>(to_count(c.get("depth"), "depth"));
  const auto chain = euler_chain(depth);
  std::ostringstream os;
  if (c.format == "csv") os << "index,value,numerator_digits,denominator_digits\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& x = chain[i];
    if (c.format == "csv") {
      os << i << "," << to_string(x) << "," << digits_of(x.get_num()) << ","
         << digits_of(x.get_den()) << "\n";
    } else {
      os << "x_" << i << " = " << to_string(x) << "\n";
    }
  }
  return os.str();
}

std::string run_curve(const Command& c) {
  const auto triple = rational_list(c.get("triple"));
  if (triple.size() != 3) throw DomainError("--triple needs three values");
  const EllipticCurve curve = curve_from_triple(triple[0], triple[1], triple[2]);
  const std::int64_t bound = c.has("scan") ? static_cast<std::int64_t>(to_count(c.get("scan"), "scan")) : 20;
  const std::int64_t dens =
      c.has("denominators") ? static_cast<std::int64_t>(to_count(c.get("denominators"), "denominators")) : 4;
  std::vector<CurvePoint> points = scan_rational_points(curve, bound, dens);
  if (c.has("double")) {
    const auto ts = rational_list(c.get("double"));
    if (ts.size() != 2) throw DomainError("--double needs T,S");
    const CurvePoint twice = group_add(curve, {ts[0], ts[1]}, {ts[0], ts[1]});
    if (twice.is_infinity()) throw DegeneracyError("2P is the point at infinity");
    points = {CurvePoint(ts[0], ts[1]), twice};
  }
  return io::curve_json(curve, points);
}

std::string run_translates(const Command& c) {
  std::ostringstream os;
  if (c.mode == "pair" || c.mode == "scan") {
    std::vector<Integer> xs;
    if (c.mode == "pair") {
      xs = pair_translates(parse_integer(c.get("a")), parse_integer(c.get("b")));
    } else {
      std::vector<Integer> base;
      for (const auto& s : split(c.get("base"), ',')) base.push_back(parse_integer(s));
      xs = brute_force_translates(base, parse_integer(c.get("bound")));
    }
    if (c.format == "csv") {
      os << "x\n";
      for (const auto& x : xs) os << to_string(x) << "\n";
    } else {
      os << "[";
      for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << '"' << to_string(xs[i]) << '"';
      os << "]\n";
    }
    return os.str();
  }
  if (c.mode == "verify") {
    const TranslateFamily f = io::parse_family_json(read_file(c.get("file")));
    os << "family verified: " << f.base.size() << " base values, " << f.translates.size()
       << " translates, scale " << to_string(f.scale) << "\n";
    return os.str();
  }
  const auto a = rational_list(c.get("triple"));
  const auto g = rational_list(c.get("generator"));
  if (a.size() != 3 || g.size() != 2) throw DomainError("--triple needs 3 values, --generator T,S");
  const SquareTriple triple(a[0], a[1], a[2]);
  const CurveFamily fam =
      translate_family_from_curve(triple, CurvePoint(g[0], g[1]), to_count(c.get("count"), "count"));
  if (fam.partial) {
    std::cerr << "warning: only " << fam.translates.size() << " translates found\n";
  }
  return io::family_json(fam.family);
}

std::string run_construct(const Command& c, std::ostream& err) {
  if (c.mode == "triangles") {
    const auto m = static_cast<unsigned>(to_count(c.get("m"), "m"));
    const LabeledGraph lg = triangle_family(m);
    const SumProductProfile profile = sp_profile(lg.graph, lg.labels);
    std::ostringstream os;
    os << "{\n  \"construction\": \"triangles\",\n  \"m\": \"" << m << "\",\n  \"triangles\": \""
       << lg.graph.edge_count() / 3 << "\",\n  \"sum_count\": \"" << profile.sum_count()
       << "\",\n  \"product_count\": \"" << profile.product_count()
       << "\",\n  \"odd_cycle_bound\": \"" << odd_cycle_bound(lg.graph, 3)
       << "\",\n  \"labels\": [";
    for (std::size_t v = 0; v < lg.labels.size(); ++v) {
      os << (v ? ", " : "") << '"' << to_string(lg.labels[v]) << '"';
    }
    os << "]\n}\n";
    return os.str();
  }
  if (c.mode == "interval") {
    const IntervalExperiment r =
        interval_matching_experiment(to_count(c.get("N"), "N"), parse_decimal(c.get("eps")));
    if (c.format == "csv") {
      std::vector<std::pair<Rational, Rational>> pairs;
      for (const Edge& e : r.matching) {
        pairs.emplace_back(Rational(static_cast<unsigned long>(e.u) + 1),
                           Rational(static_cast<unsigned long>(e.v) + 1));
      }
      return pairs_csv(pairs);
    }
    return io::interval_report_json(r);
  }
  if (c.mode == "reduce") {
    Graph g;
    Labeling l;
    if (c.has("complete")) {
      const auto n = to_count(c.get("complete"), "complete");
      g = Graph::complete(n);
      std::vector<Integer> values;
      for (std::uint64_t v = 1; v <= n; ++v) values.emplace_back(static_cast<unsigned long>(v));
      l = Labeling::from_integers(values);
    } else {
      g = io::read_graph_file(c.get("graph"));
      l = io::read_labeling_file(c.get("labels"));
    }
    const unsigned retries = c.has("retries") ? static_cast<unsigned>(to_count(c.get("retries"), "retries")) : 20;
    const SparseReduction r = sparse_from_dense(g, l, c.seed, retries);
    err << "accepted on attempt " << r.attempts << "\n";
    if (c.format == "csv") return pairs_csv(r.pairs);
    return io::sparse_report_json(r, c.seed, retries);
  }
  if (c.mode == "real-matching") {
    const RealMatching r = real_matching_family(to_count(c.get("n"), "n"), c.seed);
    std::ostringstream os;
    os << "{\n  \"construction\": \"real-matching\",\n  \"n\": \"" << r.graph.edge_count()
       << "\",\n  \"seed\": \"" << c.seed << "\",\n  \"attempts\": \"" << r.attempts
       << "\",\n  \"sum_count\": \"" << r.sum_count << "\",\n  \"product_count\": \""
       << r.product_count << "\",\n  \"values\": [";
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      os << (i ? ", " : "") << '"' << to_string(r.values[i]) << '"';
    }
    os << "],\n  \"labels\": [";
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      os << (i ? ", " : "") << '"' << r.labels[i].to_string() << '"';
    }
    os << "]\n}\n";
    return os.str();
  }
  // family-matching
  const TranslateFamily family =
      c.has("family") ? io::parse_family_json(read_file(c.get("family"))) : golden::table9_family();
  const FamilyMatching fm = matching_from_family(family, to_count(c.get("sums"), "sums"),
                                                 to_count(c.get("products"), "products"));
  const auto pairs = matching_pairs(fm.graph, fm.labels);
  if (c.format == "csv") return pairs_csv(pairs);
  const SumProductProfile profile = sp_profile(fm.graph, fm.labels);
  std::ostringstream params, checks;
  params << R"({"sums": ")" << c.get("sums") << R"(", "products": ")" << c.get("products") << "\"}";
  checks << R"({"sum_count_ok": )" << (profile.sum_count() <= fm.sums.size() ? "true" : "false")
         << R"(, "product_count_ok": )" << (profile.product_count() <= fm.products.size() ? "true" : "false")
         << "}";
  return io::matching_report_json("family", params.str(), pairs, checks.str());
}

std::string run_bounds(const Command& c) {
  std::ostringstream os;
  auto n = [&](const char* key) { return to_count(c.get(key), key); };
  if (c.mode == "kst") {
    os << to_string(kst_max_edges(n("m"), n("k"), n("r"))) << "\n";
  } else if (c.mode == "fk") {
    os << to_string(fk_sp_lower(n("n"), n("k"), n("r"))) << "\n";
  } else if (c.mode == "dense") {
    const DenseBounds b = dense_graph_conditional_bounds(n("n"), n("k"));
    os << "{\n  \"conditional\": \"" << b.conditional.to_string() << "\",\n  \"conditional_nontrivial\": "
       << (b.conditional_nontrivial ? "true" : "false") << ",\n  \"unconditional\": \""
       << b.unconditional.to_string() << "\",\n  \"unconditional_nontrivial\": "
       << (b.unconditional_nontrivial ? "true" : "false") << "\n}\n";
  } else if (c.mode == "genus") {
    os << to_string(genus_of_system(static_cast<unsigned>(n("k")))) << "\n";
  } else {
    os << min_sumset_from_diameter(n("n"), n("r")) << "\n";
  }
  return os.str();
}

std::string run_expander(const Command& c) {
  const unsigned attempts = c.has("attempts") ? static_cast<unsigned>(to_count(c.get("attempts"), "attempts")) : 200;
  const CayleyExperiment r =
      cayley_sum_experiment(to_count(c.get("n"), "n"), to_count(c.get("d"), "d"), c.seed, attempts);
  return io::cayley_report_json(r, c.seed);
}

std::string run_oracle(const Command& c) {
  const auto n = to_count(c.get("n"), "n");
  const auto b = to_count(c.get("bound"), "bound");
  if (b > 1000) throw SizeError("bound too large");
  const MatchingOracleResult r = sp_oracle_matching(n, static_cast<std::int64_t>(b));
  std::ostringstream os;
  if (c.format == "csv") {
    os << "x,y\n";
    for (const auto& [x, y] : r.pairs) os << x << "," << y << "\n";
    return os.str();
  }
  os << "{\n  \"n\": \"" << n << "\",\n  \"bound\": \"" << b << "\",\n  \"sp\": \"" << r.profile.sp()
     << "\",\n  \"scope\": \"minimum over labels in [-bound, bound] only\",\n  \"pairs\": [";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    os << (i ? ", " : "") << "[\"" << r.pairs[i].first << "\", \"" << r.pairs[i].second << "\"]";
  }
  os << "]\n}\n";
  return os.str();
}

std::string run_verify(const Command& c) {
  const io::VerifyOutcome v = io::verify_json(read_file(c.get("file")));
  if (!v.ok) throw ValidationError(v.kind + " failed verification: " + v.detail);
  return v.kind + " verified: " + v.detail + "\n";
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  CLI::App app{"Sums and products along graphs: constructions, bounds and searches", "sumprod"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::vector<std::tuple<CLI::App*, CLI::Option*, std::string>> bound;
  std::string seed, out, format;

  std::vector<std::pair<CLI::App*, const CommandDef*>> leaves;
  for (const auto& def : command_table()) {
    auto* sub = app.add_subcommand(def.name, def.help);
    if (def.modes.empty()) {
      add_options(sub, def, values[def.name], bound, seed, out, format);
      leaves.emplace_back(sub, &def);
    } else {
      sub->require_subcommand(1);
      for (const auto& mode : def.modes) {
        auto* leaf = sub->add_subcommand(mode.name, mode.help);
        add_options(leaf, mode, values[std::string(def.name) + "/" + mode.name], bound, seed, out,
                    format);
        leaves.emplace_back(leaf, &mode);
      }
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  Command command;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help, ignored;
    app.exit(e, help, ignored);
    command.name = "help";
    command.help = help.str();
    return command;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto [leaf, def] : leaves) {
    if (!leaf->parsed()) continue;
    auto* parent = leaf->get_parent();
    if (parent != &app) {
      command.name = parent->get_name();
      command.mode = leaf->get_name();
    } else {
      command.name = leaf->get_name();
    }
    for (const auto& [owner, opt, name] : bound) {
      if (owner == leaf && opt->count() > 0) command.options[name] = opt->as<std::string>();
    }
    if (def->seeded && !seed.empty()) {
      const Integer s = parse_integer(seed);
      if (s < 0 || !s.fits_ulong_p()) throw UsageError("--seed must be a 64-bit unsigned integer");
      command.seed = s.get_ui();
      command.seed_given = true;
    }
  }
  if (!out.empty()) command.output = out;
  command.format = format;
  if (command.name == "construct" && command.mode == "reduce" && !command.has("complete") &&
      !(command.has("graph") && command.has("labels"))) {
    throw UsageError("construct reduce needs --complete N or both --graph and --labels");
  }
  return command;
}

int execute(const Command& c, std::ostream& out, std::ostream& err) {
  if (c.name == "help") {
    out << c.help;
    return kOk;
  }
  static const std::map<std::string, bool> seeded = {
      {"construct/reduce", true}, {"construct/real-matching", true}, {"expander", true}};
  const std::string key = c.mode.empty() ? c.name : c.name + "/" + c.mode;
  if (seeded.count(key) && !c.seed_given) err << "seed " << c.seed << " (default)\n";
  try {
    std::string artifact;
    if (c.name == "eval") artifact = run_eval(c);
    else if (c.name == "table9") artifact = run_table9(c);
    else if (c.name == "euler") artifact = run_euler(c);
    else if (c.name == "curve") artifact = run_curve(c);
    else if (c.name == "translates") artifact = run_translates(c);
    else if (c.name == "construct") artifact = run_construct(c, err);
    else if (c.name == "bounds") artifact = run_bounds(c);
    else if (c.name == "expander") artifact = run_expander(c);
    else if (c.name == "oracle") artifact = run_oracle(c);
    else if (c.name == "verify") artifact = run_verify(c);
    else throw UsageError("unknown subcommand " + c.name);

    if (c.output) {
      std::ofstream file(*c.output, std::ios::binary);
      if (!file) throw ValidationError("cannot write " + *c.output);
      file << artifact;
    } else {
      out << artifact;
    }
    return kOk;
  } catch (const StochasticFailure& e) {
    err << "error: " << e.what() << " (" << e.attempts() << " attempts)\n";
    return kStochasticFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command c;
  try {
    c = parse(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return execute(c, out, err);
}

}  // namespace sumprod::cli
