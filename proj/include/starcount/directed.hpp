#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starcount/estimator.hpp"
#include "starcount/graph.hpp"
#include "starcount/oracle.hpp"
#include "starcount/rng.hpp"
#include "starcount/table.hpp"

namespace starcount {

// Assumed bound 1/r <= deg-(v)/deg+(v) <= r on every non-isolated vertex.
struct RatioBound {
  double r = 1.0;

  RatioBound() = default;
  explicit RatioBound(double value);
};

struct DegreePair {
  std::uint64_t in = 0;
  std::uint64_t out = 0;

  std::uint64_t paths() const { return in * out; }  // l(v)
};

// Random-arc and degree access to a directed structure, metered. Implemented
// for digraphs and for the two-table join view.
class DirectedDegreeSource {
 public:
  virtual ~DirectedDegreeSource() = default;

  virtual std::uint64_t vertex_count() const = 0;
  virtual std::uint64_t arc_count() const = 0;
  // Tail of a uniformly random arc, i.e. v with probability deg+(v)/m.
  virtual std::uint64_t sample_tail(Rng& rng) = 0;
  virtual std::uint64_t in_degree(std::uint64_t v) = 0;
  virtual std::uint64_t out_degree(std::uint64_t v) = 0;
  virtual const QueryLedger& ledger() const = 0;

  // Unmetered full degree scan, for validation and exact baselines.
  virtual std::vector<DegreePair> degree_pairs() const = 0;
};

class GraphDirectedSource final : public DirectedDegreeSource {
 public:
  // Throws InvalidArgument for undirected graphs.
  explicit GraphDirectedSource(const Graph& graph);

  std::uint64_t vertex_count() const override { return oracle_.graph().num_vertices(); }
  std::uint64_t arc_count() const override { return oracle_.graph().num_edges(); }
  std::uint64_t sample_tail(Rng& rng) override { return oracle_.random_edge(rng).u; }
  std::uint64_t in_degree(std::uint64_t v) override;
  std::uint64_t out_degree(std::uint64_t v) override;
  const QueryLedger& ledger() const override { return oracle_.ledger(); }
  std::vector<DegreePair> degree_pairs() const override;

 private:
  GraphQueryOracle oracle_;
};

// Join of two table columns seen as a digraph over the union of their labels:
// deg-(i) = x_i (rows of the first table with label i) and deg+(i) = y_i
// (rows of the second). Labels missing from a table have count 0 there, so
// L = sum x_i y_i is the join cardinality. Random arcs are rows of the second table.
class JoinView final : public DirectedDegreeSource {
 public:
  JoinView(const TableColumn& first, const TableColumn& second);

  std::uint64_t vertex_count() const override { return labels_.size(); }
  std::uint64_t arc_count() const override { return second_->total_rows(); }
  std::uint64_t sample_tail(Rng& rng) override;
  std::uint64_t in_degree(std::uint64_t v) override;
  std::uint64_t out_degree(std::uint64_t v) override;
  const QueryLedger& ledger() const override { return ledger_; }
  std::vector<DegreePair> degree_pairs() const override;

  std::span<const std::string> labels() const { return labels_; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  const TableColumn* first_;
  const TableColumn* second_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> in_first_;         // union index -> label index in first, or kAbsent
  std::vector<std::size_t> in_second_;        // union index -> label index in second, or kAbsent
  std::vector<std::size_t> second_to_union_;  // label index in second -> union index
  QueryLedger ledger_;
};

// Builds the join view; labels absent from one table contribute 0.
JoinView join_size_exact_mapping(const TableColumn& first, const TableColumn& second);

// Estimates sum_v C(deg-(v), p) (side kIn) or sum_v C(deg+(v), p) (side kOut)
// by running count_stars over head/tail sampling. `params.p` is replaced by p.
EstimateReport exactly_in_out_stars(const Graph& graph, unsigned p, Side side,
                                    EstimatorParams params, Rng& rng);

struct SqrtSample {
  std::uint64_t vertex = 0;
  std::uint64_t paths = 0;     // l(v) = deg-(v) * deg+(v)
  std::uint64_t attempts = 0;  // arcs drawn, including the accepted one
};

// acceptance probability sqrt(deg- / (r deg+)) for a sampled tail.
double acceptance_probability(std::uint64_t in, std::uint64_t out, const RatioBound& ratio);

// Rejection sampler returning v with probability sqrt(l(v)) / sum_w sqrt(l(w)).
// Each attempt costs one random arc and two degree queries. Throws
// RatioViolation when a tail has deg- > r deg+, and EmptySourceError when
// `max_attempts` draws pass without an acceptance.
SqrtSample sqrt_weighted_sample(DirectedDegreeSource& source, const RatioBound& ratio, Rng& rng,
                                std::uint64_t max_attempts = std::uint64_t{1} << 26);

enum class ValidationMode { kOff, kWarn, kStrict };

struct RatioValidation {
  std::vector<std::uint64_t> violating;  // non-isolated vertices outside [1/r, r]
  bool ok() const { return violating.empty(); }
};

RatioValidation validate_ratio(std::span<const DegreePair> degrees, const RatioBound& ratio);

// L' = sum_v sqrt(l(v)) from a full scan.
double compute_l_prime(std::span<const DegreePair> degrees);

struct Path2Params {
  RatioBound ratio;
  double epsilon = 0.2;
  // sum_v sqrt(l(v)); supplied by the caller, exact or approximate.
  double l_prime = 0.0;
  std::string l_prime_source = "supplied";
  std::uint64_t seed = 0;
  // Median over this many independent estimates (raised to odd). 1 = single shot.
  std::uint64_t trials = 1;
  std::optional<std::uint64_t> k_override;
  ValidationMode validation = ValidationMode::kOff;
};

struct Path2Report {
  double estimate = 0.0;
  double l_prime = 0.0;
  std::string l_prime_source;
  double r = 1.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t samples_per_trial = 0;  // k = ceil(3 sqrt(n) / eps^2)
  std::uint64_t trials = 1;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  QueryLedger ledger;
  std::vector<std::uint64_t> ratio_violations;
  std::vector<std::string> warnings;
};

std::uint64_t path2_sample_count(std::uint64_t n, double epsilon);

// Mean of k samples of Y = sqrt(l(v)) * L' with v drawn by sqrt_weighted_sample;
// E[Y] = L. L' = 0 short-circuits to 0 without sampling.
Path2Report estimate_path2(DirectedDegreeSource& source, const Path2Params& params, Rng& rng);

}  // namespace starcount
