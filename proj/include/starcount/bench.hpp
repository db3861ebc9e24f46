#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "starcount/bigint.hpp"
#include "starcount/instances.hpp"

namespace starcount {

struct BenchInstance {
  std::string id;
  GeneratorSpec spec;
};

struct BenchConfig {
  unsigned p = 2;
  double epsilon = 0.2;
  std::uint64_t trials = 3;
  std::uint64_t seed = 0;
  bool timing = false;  // adds the wall-time column; off keeps output byte-stable
  std::vector<BenchInstance> instances;

  // Star plus matching on n = 5000 vertices with 500 edges (W = 1000) and
  // star sizes 5..500, so S_2 ranges from 10 to 124750 at fixed n and W.
  static BenchConfig default_sweep();
  // {"p":2,"epsilon":0.2,"trials":3,"seed":0,"instances":[{"id":..,"family":..,"params":{..},"seed":..}]}
  static BenchConfig from_json(const nlohmann::json& j);
};

struct BenchRow {
  std::string instance;
  std::uint64_t n = 0;
  std::uint64_t total_weight = 0;  // W = 2m
  unsigned p = 2;
  double epsilon = 0.0;
  BigInt exact;
  double estimate = 0.0;
  std::optional<double> relative_error;  // only when exact > 0
  std::uint64_t queries = 0;
  double budget = 0.0;  // W log2 n log2 log2 n / (eps^2 S_p^(1/p))
  double budget_ratio = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  double wall_ms = 0.0;
};

// W log2(n) log2(log2(n)) / (eps^2 S^(1/p)); infinite when S = 0.
double query_budget(std::uint64_t total_weight, std::uint64_t n, unsigned p, double epsilon,
                    const BigInt& star_count);

// One row per (instance, trial), sorted by (instance id, seed).
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool timing);
nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows, bool timing);

}  // namespace starcount
