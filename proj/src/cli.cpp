#include "starcount/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "starcount/bench.hpp"
#include "starcount/directed.hpp"
#include "starcount/errors.hpp"
#include "starcount/estimator.hpp"
#include "starcount/exact.hpp"
#include "starcount/instances.hpp"
#include "starcount/io.hpp"
#include "starcount/report_json.hpp"

namespace starcount::cli {
namespace {

constexpr double kDefaultEpsilon = 0.2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // shared
  std::string input;
  std::string csv;
  std::string column;
  std::string csv2;
  std::string column2;
  std::vector<unsigned> ps;
  std::optional<double> epsilon;  // default 0.2 for estimate; bench uses the sweep's
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::string mode = "undirected";
  std::optional<double> r;
  std::optional<double> l_prime;
  std::string validate = "off";
  std::string out;
  std::string format = "json";
  // gen
  std::string spec;
  std::string manifest;
  // exact
  bool jensen = false;
  // bench
  std::string sweep;
  bool timing = false;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STARCOUNT_SEED"); env && *env) {
    std::uint64_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof()) throw UsageError("STARCOUNT_SEED is not an unsigned integer");
    return value;
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json_arg(const std::string& text) {
  const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("bad JSON: ") + e.what());
  }
}

// Writes to --out when given, else to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
  file << text;
}

unsigned single_p(const Options& o) {
  if (o.ps.size() > 1) throw UsageError("this command takes a single --p");
  return o.ps.empty() ? 2u : o.ps.front();
}

void require_one_source(const Options& o) {
  if (o.input.empty() == o.csv.empty()) throw UsageError("give exactly one of --input or --csv");
  if (!o.csv.empty() && o.column.empty()) throw UsageError("--csv needs --column");
  if (o.csv2.empty() != o.column2.empty()) throw UsageError("--csv2 and --column2 go together");
  if (!o.csv2.empty() && o.csv.empty()) throw UsageError("--csv2 needs --csv");
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.spec.empty()) throw UsageError("gen needs --spec (JSON text or @file)");
  GeneratorSpec spec = GeneratorSpec::from_json(parse_json_arg(o.spec));
  if (o.seed) spec.seed = *o.seed;
  std::ostringstream text;
  if (spec.family == "table") {
    if (!spec.params.contains("counts")) throw InvalidArgument("family 'table' needs 'counts'");
    auto counts = spec.params.at("counts").get<std::vector<std::uint64_t>>();
    write_csv(gen_table(counts), text);
  } else {
    write_edge_list(generate_graph(spec), text);
  }
  emit(o, out, text.str());
  if (!o.manifest.empty()) {
    std::ofstream file(o.manifest, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + o.manifest + "'");
    file << spec.to_json().dump(2) << '\n';
  }
  return kOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
  require_one_source(o);
  std::vector<unsigned> ps = o.ps.empty() ? std::vector<unsigned>{2} : o.ps;
  Json j;
  if (!o.input.empty()) {
    const Graph g = load_edge_list(o.input);
    j = to_json(compute_exact_counts(g, ps));
    if (o.jensen) {
      if (g.is_directed()) throw UsageError("--jensen applies to undirected graphs");
      Json checks = Json::object();
      for (unsigned p : ps) checks[std::to_string(p)] = to_json(validate_jensen_bounds(g, p));
      j["jensen"] = checks;
    }
  } else {
    if (o.jensen) throw UsageError("--jensen applies to graphs");
    const TableColumn t = load_csv(o.csv, o.column);
    ExactCounts counts = compute_exact_counts(t, ps);
    if (!o.csv2.empty()) counts.join = exact_join_cardinality(t, load_csv(o.csv2, o.column2));
    j = to_json(counts);
  }
  emit(o, out, j.dump(2) + "\n");
  return kOk;
}

std::string flat_csv(const Json& j) {
  std::ostringstream head, row;
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) continue;
    if (value.is_object()) {
      for (const auto& [k2, v2] : value.items()) {
        head << (first ? "" : ",") << key << '_' << k2;
        row << (first ? "" : ",") << v2.dump();
        first = false;
      }
      continue;
    }
    head << (first ? "" : ",") << key;
    row << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
    first = false;
  }
  return head.str() + "\n" + row.str() + "\n";
}

ValidationMode parse_validation(const std::string& s) {
  if (s == "off") return ValidationMode::kOff;
  if (s == "warn") return ValidationMode::kWarn;
  return ValidationMode::kStrict;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  require_one_source(o);
  const std::uint64_t seed = resolve_seed(o.seed);
  Rng rng(seed);
  Json j;
  if (o.mode == "path2") {
    if (!o.r) throw UsageError("path2 mode needs --r");
    if (!o.ps.empty()) throw UsageError("--p does not apply to path2 mode");
    Path2Params params;
    params.ratio = RatioBound(*o.r);
    params.epsilon = o.epsilon.value_or(kDefaultEpsilon);
    params.seed = seed;
    params.trials = o.trials.value_or(1);
    params.validation = parse_validation(o.validate);

    std::optional<Graph> graph;
    std::optional<TableColumn> t1, t2;
    std::unique_ptr<DirectedDegreeSource> source;
    if (!o.input.empty()) {
      graph = load_edge_list(o.input);
      source = std::make_unique<GraphDirectedSource>(*graph);
    } else {
      if (o.csv2.empty()) throw UsageError("path2 on tables needs --csv2 and --column2");
      t1 = load_csv(o.csv, o.column);
      t2 = load_csv(o.csv2, o.column2);
      source = std::make_unique<JoinView>(*t1, *t2);
    }
    std::vector<std::string> notes;
    if (o.l_prime) {
      params.l_prime = *o.l_prime;
    } else {
      params.l_prime = compute_l_prime(source->degree_pairs());
      params.l_prime_source = "exact_scan";
      notes.push_back("L' computed by a full degree scan (harness convenience, not sublinear)");
    }
    Path2Report report = estimate_path2(*source, params, rng);
    report.warnings.insert(report.warnings.begin(), notes.begin(), notes.end());
    j = to_json(report);
  } else {
    if (o.trials) throw UsageError("--trials applies to path2 mode only");
    if (o.r || o.l_prime) throw UsageError("--r and --l-prime apply to path2 mode only");
    if (!o.csv2.empty()) throw UsageError("--csv2 applies to path2 mode only");
    auto params = EstimatorParams::make(single_p(o), o.epsilon.value_or(kDefaultEpsilon), seed);
    EstimateReport report;
    if (o.mode == "undirected") {
      if (!o.input.empty()) {
        const Graph g = load_edge_list(o.input);
        if (g.is_directed()) throw UsageError("directed input needs --mode in-star, out-star or path2");
        auto oracle = as_weighted_oracle(g);
        report = count_stars(*oracle, params, rng);
      } else {
        const TableColumn t = load_csv(o.csv, o.column);
        auto oracle = as_weighted_oracle(t);
        report = count_stars(*oracle, params, rng);
      }
    } else {
      if (o.input.empty()) throw UsageError("--mode " + o.mode + " needs a directed --input");
      const Graph g = load_edge_list(o.input);
      const Side side = o.mode == "in-star" ? Side::kIn : Side::kOut;
      report = exactly_in_out_stars(g, params.p, side, params, rng);
    }
    if (params.epsilon_clamped) report.warnings.insert(report.warnings.begin(), "epsilon clamped to 0.5");
    j = to_json(report);
  }
  emit(o, out, o.format == "csv" ? flat_csv(j) : j.dump(2) + "\n");
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchConfig config = o.sweep.empty() ? BenchConfig::default_sweep()
                                       : BenchConfig::from_json(parse_json_arg("@" + o.sweep));
  if (o.epsilon) config.epsilon = *o.epsilon;
  if (!o.ps.empty()) config.p = single_p(o);
  if (o.trials) config.trials = *o.trials;
  if (o.seed || std::getenv("STARCOUNT_SEED")) config.seed = resolve_seed(o.seed);
  config.timing = o.timing;
  const auto rows = run_bench(config);
  if (o.format == "json") {
    emit(o, out, bench_to_json(rows, o.timing).dump(2) + "\n");
  } else {
    std::ostringstream text;
    write_bench_csv(rows, text, o.timing);
    emit(o, out, text.str());
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sublinear star-count and path-count estimation"};
  app.name("starcount");
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "edge-list file");
    sub->add_option("--csv", o.csv, "CSV table");
    sub->add_option("--column", o.column, "CSV column holding labels");
    sub->add_option("--csv2", o.csv2, "second CSV table (joins)");
    sub->add_option("--column2", o.column2, "label column of the second table");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default stdout)"); };

  auto* gen = app.add_subcommand("gen", "generate an instance as an edge list (or CSV for 'table')");
  gen->add_option("--spec", o.spec, "generator spec JSON, or @file")->required();
  gen->add_option("--seed", o.seed, "overrides the spec seed");
  gen->add_option("--manifest", o.manifest, "also write the spec JSON here");
  add_out(gen);

  auto* exact = app.add_subcommand("exact", "exact counts by full scan");
  add_source(exact);
  exact->add_option("--p", o.ps, "star size (repeatable)")->check(CLI::Range(2u, 64u));
  exact->add_flag("--jensen", o.jensen, "also check the average-degree bounds");
  add_out(exact);

  auto* estimate = app.add_subcommand("estimate", "sublinear estimate with query ledger");
  add_source(estimate);
  estimate->add_option("--p", o.ps, "star size")->check(CLI::Range(2u, 64u));
  estimate->add_option("--epsilon", o.epsilon, "relative accuracy");
  estimate->add_option("--seed", o.seed, "RNG seed (else STARCOUNT_SEED, else 0)");
  estimate->add_option("--trials", o.trials, "path2: median over this many estimates");
  estimate->add_option("--mode", o.mode, "undirected | in-star | out-star | path2")
      ->check(CLI::IsMember({"undirected", "in-star", "out-star", "path2"}));
  estimate->add_option("--r", o.r, "path2: degree ratio bound");
  estimate->add_option("--l-prime", o.l_prime, "path2: sum of sqrt(in*out); default exact scan");
  estimate->add_option("--validate", o.validate, "path2 ratio check: off | warn | strict")
      ->check(CLI::IsMember({"off", "warn", "strict"}));
  estimate->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  add_out(estimate);

  auto* bench = app.add_subcommand("bench", "query-count sweep against the theoretical budget");
  bench->add_option("--sweep", o.sweep, "sweep JSON file (default: built-in star sweep)");
  bench->add_option("--p", o.ps, "star size")->check(CLI::Range(2u, 64u));
  bench->add_option("--epsilon", o.epsilon, "relative accuracy");
  bench->add_option("--trials", o.trials, "trials per instance");
  bench->add_option("--seed", o.seed, "base seed");
  bench->add_flag("--timing", o.timing, "add a wall-time column (output no longer byte-stable)");
  bench->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"json", "csv"}));
  add_out(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (exact->parsed()) return cmd_exact(o, out);
    if (estimate->parsed()) return cmd_estimate(o, out);
    if (bench->parsed()) {
      if (!bench->count("--format")) o.format = "csv";
      return cmd_bench(o, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const RatioViolation& e) {
    err << "error: ratio violation: " << e.what() << '\n';
    return kRatioViolation;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const EmptySourceError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace starcount::cli
