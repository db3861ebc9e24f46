#include "starcount/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "starcount/errors.hpp"
#include "starcount/estimator.hpp"
#include "starcount/exact.hpp"
#include "starcount/report_json.hpp"

namespace starcount {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

BenchConfig BenchConfig::default_sweep() {
  BenchConfig config;
  const std::uint64_t edges = 500;
  for (std::uint64_t star : {5, 16, 50, 160, 500}) {
    BenchInstance inst;
    char id[32];
    std::snprintf(id, sizeof id, "star%03llu", static_cast<unsigned long long>(star));
    inst.id = id;
    inst.spec.family = "star_matching";
    inst.spec.params = {{"n", 5000}, {"star", star}, {"matching", edges - star}};
    config.instances.push_back(inst);
  }
  return config;
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("bench sweep must be a JSON object");
  BenchConfig config;
  if (j.contains("p")) config.p = j.at("p").get<unsigned>();
  if (j.contains("epsilon")) config.epsilon = j.at("epsilon").get<double>();
  if (j.contains("trials")) config.trials = j.at("trials").get<std::uint64_t>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (!j.contains("instances") || !j.at("instances").is_array() || j.at("instances").empty()) {
    throw InvalidArgument("bench sweep needs a non-empty 'instances' array");
  }
  for (const auto& item : j.at("instances")) {
    BenchInstance inst;
    // Either {"id", "spec": {...}} or the spec fields inline next to "id".
    inst.spec = GeneratorSpec::from_json(item.contains("spec") ? item.at("spec") : item);
    inst.id = item.contains("id") ? item.at("id").get<std::string>()
                                  : "instance" + std::to_string(config.instances.size());
    config.instances.push_back(inst);
  }
  return config;
}

double query_budget(std::uint64_t total_weight, std::uint64_t n, unsigned p, double epsilon,
                    const BigInt& star_count) {
  if (star_count <= 0) return std::numeric_limits<double>::infinity();
  const double logn = std::log2(static_cast<double>(n));
  const double loglogn = std::log2(logn);
  const double root = std::pow(to_double(star_count), 1.0 / p);
  return static_cast<double>(total_weight) * logn * loglogn / (epsilon * epsilon * root);
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.trials == 0) throw InvalidArgument("bench needs at least one trial");
  std::vector<BenchRow> rows;
  for (const auto& inst : config.instances) {
    const Graph graph = generate_graph(inst.spec);
    if (graph.is_directed()) throw InvalidArgument("bench instance '" + inst.id + "' is directed");
    const BigInt exact = exact_star_count(graph, config.p);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const std::uint64_t seed = derive_seed(config.seed, t);
      auto params = EstimatorParams::make(config.p, config.epsilon, seed);
      auto oracle = as_weighted_oracle(graph);
      Rng rng(seed);
      const auto start = std::chrono::steady_clock::now();
      EstimateReport report = count_stars(*oracle, params, rng);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.instance = inst.id;
      row.n = graph.num_vertices();
      row.total_weight = graph.total_degree();
      row.p = config.p;
      row.epsilon = params.epsilon;
      row.exact = exact;
      row.estimate = report.estimate;
      if (exact > 0) row.relative_error = std::abs(report.estimate - to_double(exact)) / to_double(exact);
      row.queries = report.ledger.total();
      row.budget = query_budget(row.total_weight, row.n, config.p, params.epsilon, exact);
      row.budget_ratio = static_cast<double>(row.queries) / row.budget;
      row.seed = seed;
      row.iterations = report.iterations;
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.seed) < std::tie(b.instance, b.seed);
  });
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool timing) {
  out << "instance,n,W,p,epsilon,exact,estimate,rel_error,queries,budget,queries_over_budget,"
         "iterations,seed";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.total_weight << ',' << r.p << ',' << fmt(r.epsilon)
        << ',' << r.exact.str() << ',' << fmt(r.estimate) << ','
        << (r.relative_error ? fmt(*r.relative_error) : "") << ',' << r.queries << ','
        << fmt(r.budget) << ',' << fmt(r.budget_ratio) << ',' << r.iterations << ',' << r.seed;
    if (timing) out << ',' << fmt(r.wall_ms);
    out << '\n';
  }
}

nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows, bool timing) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["W"] = r.total_weight;
    j["p"] = r.p;
    j["epsilon"] = r.epsilon;
    j["exact"] = big_to_json(r.exact);
    j["estimate"] = r.estimate;
    j["rel_error"] = r.relative_error ? Json(*r.relative_error) : Json(nullptr);
    j["queries"] = r.queries;
    j["budget"] = r.budget;
    j["queries_over_budget"] = r.budget_ratio;
    j["iterations"] = r.iterations;
    j["seed"] = r.seed;
    if (timing) j["wall_ms"] = r.wall_ms;
    out.push_back(j);
  }
  return out;
}

}  // namespace starcount
