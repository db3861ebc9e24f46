#include "starcount/exact.hpp"

#include <algorithm>
#include <cmath>

#include "starcount/errors.hpp"
#include "starcount/estimator.hpp"

namespace starcount {
namespace {

void check_p(unsigned p) {
  if (p < 2) throw InvalidArgument("p must be at least 2");
}

std::vector<std::uint64_t> degrees_of(const Graph& graph, Side side) {
  std::vector<std::uint64_t> out(graph.num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = graph.degree(static_cast<VertexId>(v), side);
  return out;
}

std::map<std::uint64_t, std::uint64_t> histogram(std::span<const std::uint64_t> values) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (auto v : values) ++h[v];
  return h;
}

}  // namespace

BigInt exact_star_count(std::span<const std::uint64_t> magnitudes, unsigned p) {
  check_p(p);
  BigInt total = 0;
  for (auto x : magnitudes) total += binomial(x, p);
  return total;
}

BigInt exact_star_count(const Graph& graph, unsigned p, Side side) {
  return exact_star_count(degrees_of(graph, side), p);
}

BigInt exact_star_count(const TableColumn& table, unsigned p) {
  return exact_star_count(table.counts(), p);
}

BigInt exact_star_count_by_enumeration(const Graph& graph, unsigned p, std::uint64_t limit) {
  check_p(p);
  if (graph.is_directed()) throw InvalidArgument("enumeration expects an undirected graph");
  // Guard first, from a floating-point size estimate.
  long double planned = 0.0L;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const auto d = static_cast<long double>(graph.degree(static_cast<VertexId>(v)));
    long double c = 1.0L;
    for (unsigned i = 0; i < p; ++i) c *= std::max(0.0L, d - i) / (i + 1);
    planned += c;
  }
  if (planned > static_cast<long double>(limit) * 1.000001L) {
    throw InvalidArgument("enumeration would visit about " + std::to_string(static_cast<double>(planned)) +
                          " subsets, above the limit of " + std::to_string(limit));
  }
  BigInt total = 0;
  std::vector<std::size_t> pick(p);
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    auto nbrs = graph.neighbors(static_cast<VertexId>(v));
    const std::size_t d = nbrs.size();
    if (d < p) continue;
    // Lexicographic walk over index tuples pick[0] < ... < pick[p-1].
    for (unsigned i = 0; i < p; ++i) pick[i] = i;
    std::uint64_t count = 0;
    while (true) {
      bool star = true;
      for (unsigned i = 0; i < p && star; ++i) {
        const VertexId leaf = nbrs[pick[i]];
        star = leaf != v && graph.has_edge(static_cast<VertexId>(v), leaf);
        for (unsigned j = 0; j < i && star; ++j) star = nbrs[pick[j]] != leaf;
      }
      if (star) ++count;
      int i = static_cast<int>(p) - 1;
      while (i >= 0 && pick[i] == d - p + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (unsigned j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    total += count;
  }
  return total;
}

BigInt exact_path2_count(std::span<const DegreePair> degrees) {
  BigInt total = 0;
  for (const auto& d : degrees) total += BigInt(d.in) * d.out;
  return total;
}

BigInt exact_path2_count(const Graph& graph) {
  if (!graph.is_directed()) throw InvalidArgument("path counting needs a directed graph");
  BigInt total = 0;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const auto id = static_cast<VertexId>(v);
    total += BigInt(graph.degree(id, Side::kIn)) * graph.degree(id, Side::kOut);
  }
  return total;
}

BigInt exact_join_cardinality(const TableColumn& first, const TableColumn& second) {
  BigInt total = 0;
  for (std::size_t i = 0; i < first.num_labels(); ++i) {
    if (auto j = second.find(first.label(i))) total += BigInt(first.count(i)) * second.count(*j);
  }
  return total;
}

BigInt exact_self_join_cardinality(const TableColumn& table) {
  BigInt total = 0;
  for (auto x : table.counts()) total += BigInt(x) * x;
  return total;
}

Rational falling_binomial(const Rational& z, unsigned p) {
  Rational value = 1;
  for (unsigned i = 0; i < p; ++i) value *= (z - i) / Rational(i + 1);
  return value;
}

bool JensenReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

JensenReport validate_jensen_bounds(const Graph& graph, unsigned p) {
  check_p(p);
  if (graph.is_directed()) throw InvalidArgument("degree bounds expect an undirected graph");
  const std::uint64_t n = graph.num_vertices();
  const std::uint64_t m = graph.num_edges();
  const BigInt s = exact_star_count(graph, p);
  JensenReport report;
  if (n == 0) return report;
  const Rational z(BigInt(2 * m), BigInt(n));

  BoundCheck avg;
  avg.name = "average_degree";
  avg.applicable = z >= Rational(p - 1);
  if (avg.applicable) {
    const Rational bound = Rational(n) * falling_binomial(z, p);
    avg.passed = Rational(s) >= bound;
    avg.detail = "S_p = " + s.str() + ", n C(2m/n, p) = " + bound.str();
  }
  report.checks.push_back(avg);

  BoundCheck edge;
  edge.name = "edge_bound";
  edge.applicable = z >= Rational(p);
  if (edge.applicable) {
    using boost::multiprecision::pow;
    const BigInt lhs = pow(BigInt(2 * m), p);
    const BigInt rhs = pow(BigInt(p), p) * pow(BigInt(n), p - 1) * s;
    edge.passed = lhs <= rhs;
    edge.detail = "(2m)^p = " + lhs.str() + ", p^p n^(p-1) S_p = " + rhs.str();
  }
  report.checks.push_back(edge);

  BoundCheck few;
  few.name = "few_stars";
  few.applicable = s <= n;
  if (few.applicable) {
    few.passed = BigInt(2 * m) <= BigInt(n) * p;
    few.detail = "2m = " + std::to_string(2 * m) + ", n p = " + (BigInt(n) * p).str();
  }
  report.checks.push_back(few);
  return report;
}

ExactCounts compute_exact_counts(const Graph& graph, std::span<const unsigned> ps) {
  ExactCounts out;
  out.n = graph.num_vertices();
  out.m = graph.num_edges();
  out.ps.assign(ps.begin(), ps.end());
  if (graph.is_directed()) {
    out.source = "digraph";
    const auto in = degrees_of(graph, Side::kIn);
    const auto outd = degrees_of(graph, Side::kOut);
    for (unsigned p : ps) {
      out.in_star_counts.push_back(exact_star_count(in, p));
      out.out_star_counts.push_back(exact_star_count(outd, p));
    }
    out.path2 = exact_path2_count(graph);
    out.histograms["in"] = histogram(in);
    out.histograms["out"] = histogram(outd);
  } else {
    out.source = "graph";
    const auto deg = degrees_of(graph, Side::kUndirected);
    for (unsigned p : ps) out.star_counts.push_back(exact_star_count(deg, p));
    out.histograms["degree"] = histogram(deg);
  }
  return out;
}

ExactCounts compute_exact_counts(const TableColumn& table, std::span<const unsigned> ps) {
  ExactCounts out;
  out.source = "table";
  out.n = table.num_labels();
  out.m = table.total_rows();
  out.ps.assign(ps.begin(), ps.end());
  for (unsigned p : ps) out.star_counts.push_back(exact_star_count(table, p));
  out.self_join = exact_self_join_cardinality(table);
  out.histograms["count"] = histogram(table.counts());
  return out;
}

}  // namespace starcount
