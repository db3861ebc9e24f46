#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starcount/bigint.hpp"
#include "starcount/directed.hpp"
#include "starcount/graph.hpp"
#include "starcount/table.hpp"

namespace starcount {

// Sum of C(x, p) over the magnitudes. Throws InvalidArgument for p < 2.
BigInt exact_star_count(std::span<const std::uint64_t> magnitudes, unsigned p);
BigInt exact_star_count(const Graph& graph, unsigned p, Side side = Side::kUndirected);
BigInt exact_star_count(const TableColumn& table, unsigned p);

// Counts p-subsets of each vertex's neighbor list one by one. Refuses
// (InvalidArgument) when more than `limit` subsets would be visited.
BigInt exact_star_count_by_enumeration(const Graph& graph, unsigned p,
                                       std::uint64_t limit = 10'000'000);

// L = sum_v deg-(v) deg+(v). Throws InvalidArgument for undirected graphs.
BigInt exact_path2_count(const Graph& graph);
BigInt exact_path2_count(std::span<const DegreePair> degrees);

// sum_i x_i y_i over shared labels, and sum_i x_i^2.
BigInt exact_join_cardinality(const TableColumn& first, const TableColumn& second);
BigInt exact_self_join_cardinality(const TableColumn& table);

// Generalized binomial z (z-1) ... (z-p+1) / p!.
Rational falling_binomial(const Rational& z, unsigned p);

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool passed = true;  // vacuously true when not applicable
  std::string detail;
};

struct JensenReport {
  std::vector<BoundCheck> checks;
  bool all_passed() const;
};

// Checks on an undirected graph with average degree z = 2m/n:
//   average_degree:   S_p >= n C(z, p), applicable when z >= p-1;
//   edge_bound:       m <= p n^(1-1/p) S_p^(1/p) / 2, applicable when z >= p,
//                     evaluated as (2m)^p <= p^p n^(p-1) S_p;
//   few_stars:        m <= n p / 2, applicable when S_p <= n.
JensenReport validate_jensen_bounds(const Graph& graph, unsigned p);

struct ExactCounts {
  std::string source;  // "graph", "digraph" or "table"
  std::uint64_t n = 0;  // vertices or distinct labels
  std::uint64_t m = 0;  // edges, arcs or rows
  std::vector<unsigned> ps;
  // Undirected graphs and tables: S_p for each p in `ps`.
  std::vector<BigInt> star_counts;
  // Digraphs: in- and out-star counts for each p, and L.
  std::vector<BigInt> in_star_counts;
  std::vector<BigInt> out_star_counts;
  std::optional<BigInt> path2;
  std::optional<BigInt> self_join;  // tables
  std::optional<BigInt> join;       // two-table input
  // "degree" (undirected), "in"/"out" (digraphs) or "count" (tables): value -> frequency.
  std::map<std::string, std::map<std::uint64_t, std::uint64_t>> histograms;
};

ExactCounts compute_exact_counts(const Graph& graph, std::span<const unsigned> ps);
ExactCounts compute_exact_counts(const TableColumn& table, std::span<const unsigned> ps);

}  // namespace starcount
