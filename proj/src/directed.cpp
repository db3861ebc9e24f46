#include "starcount/directed.hpp"

#include <algorithm>
#include <cmath>

#include "starcount/errors.hpp"

namespace starcount {

RatioBound::RatioBound(double value) : r(value) {
  if (!std::isfinite(value) || value < 1.0) {
    throw InvalidArgument("ratio bound r must be a finite value >= 1");
  }
}

GraphDirectedSource::GraphDirectedSource(const Graph& graph) : oracle_(graph) {
  if (!graph.is_directed()) throw InvalidArgument("directed source needs a directed graph");
}

std::uint64_t GraphDirectedSource::in_degree(std::uint64_t v) {
  if (v >= vertex_count()) throw InvalidArgument("unknown vertex id " + std::to_string(v));
  return oracle_.degree(static_cast<VertexId>(v), Side::kIn);
}

std::uint64_t GraphDirectedSource::out_degree(std::uint64_t v) {
  if (v >= vertex_count()) throw InvalidArgument("unknown vertex id " + std::to_string(v));
  return oracle_.degree(static_cast<VertexId>(v), Side::kOut);
}

std::vector<DegreePair> GraphDirectedSource::degree_pairs() const {
  const Graph& g = oracle_.graph();
  std::vector<DegreePair> pairs(g.num_vertices());
  for (std::size_t v = 0; v < pairs.size(); ++v) {
    pairs[v] = DegreePair{g.degree(static_cast<VertexId>(v), Side::kIn),
                          g.degree(static_cast<VertexId>(v), Side::kOut)};
  }
  return pairs;
}

JoinView::JoinView(const TableColumn& first, const TableColumn& second)
    : first_(&first), second_(&second) {
  for (std::size_t i = 0; i < first.num_labels(); ++i) {
    labels_.push_back(first.label(i));
    in_first_.push_back(i);
    in_second_.push_back(kAbsent);
  }
  second_to_union_.resize(second.num_labels());
  for (std::size_t j = 0; j < second.num_labels(); ++j) {
    if (auto i = first.find(second.label(j))) {
      in_second_[*i] = j;
      second_to_union_[j] = *i;
    } else {
      second_to_union_[j] = labels_.size();
      labels_.push_back(second.label(j));
      in_first_.push_back(kAbsent);
      in_second_.push_back(j);
    }
  }
}

std::uint64_t JoinView::sample_tail(Rng& rng) {
  const std::uint64_t rows = second_->total_rows();
  if (rows == 0) throw EmptySourceError("row sample on an empty table");
  ++ledger_.row_samples;
  return second_to_union_[second_->label_of_row(rng.uniform_below(rows))];
}

std::uint64_t JoinView::in_degree(std::uint64_t v) {
  if (v >= labels_.size()) throw InvalidArgument("unknown label index " + std::to_string(v));
  ++ledger_.magnitude_queries;
  return in_first_[v] == kAbsent ? 0 : first_->count(in_first_[v]);
}

std::uint64_t JoinView::out_degree(std::uint64_t v) {
  if (v >= labels_.size()) throw InvalidArgument("unknown label index " + std::to_string(v));
  ++ledger_.magnitude_queries;
  return in_second_[v] == kAbsent ? 0 : second_->count(in_second_[v]);
}

std::vector<DegreePair> JoinView::degree_pairs() const {
  std::vector<DegreePair> pairs(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    pairs[v].in = in_first_[v] == kAbsent ? 0 : first_->count(in_first_[v]);
    pairs[v].out = in_second_[v] == kAbsent ? 0 : second_->count(in_second_[v]);
  }
  return pairs;
}

JoinView join_size_exact_mapping(const TableColumn& first, const TableColumn& second) {
  return JoinView(first, second);
}

EstimateReport exactly_in_out_stars(const Graph& graph, unsigned p, Side side,
                                    EstimatorParams params, Rng& rng) {
  if (!graph.is_directed()) throw InvalidArgument("in/out stars need a directed graph");
  if (side == Side::kUndirected) throw InvalidArgument("side must be 'in' or 'out'");
  params.p = p;
  auto oracle = as_weighted_oracle(graph, side);
  return count_stars(*oracle, params, rng);
}

double acceptance_probability(std::uint64_t in, std::uint64_t out, const RatioBound& ratio) {
  if (out == 0) throw InvalidArgument("acceptance probability needs a positive out-degree");
  return std::sqrt(static_cast<double>(in) / (ratio.r * static_cast<double>(out)));
}

SqrtSample sqrt_weighted_sample(DirectedDegreeSource& source, const RatioBound& ratio, Rng& rng,
                                std::uint64_t max_attempts) {
  if (source.arc_count() == 0) throw EmptySourceError("directed source has no arcs");
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const std::uint64_t u = source.sample_tail(rng);
    const std::uint64_t in = source.in_degree(u);
    const std::uint64_t out = source.out_degree(u);
    if (static_cast<double>(in) > ratio.r * static_cast<double>(out)) {
      throw RatioViolation(u, "vertex " + std::to_string(u) + " has in-degree " +
                                  std::to_string(in) + " > r * out-degree " +
                                  std::to_string(out) + " (r = " + std::to_string(ratio.r) + ")");
    }
    if (rng.uniform01() < acceptance_probability(in, out, ratio)) {
      return SqrtSample{u, in * out, attempt};
    }
  }
  throw EmptySourceError("no sample accepted within " + std::to_string(max_attempts) +
                         " attempts; no vertex appears to have l(v) > 0");
}

RatioValidation validate_ratio(std::span<const DegreePair> degrees, const RatioBound& ratio) {
  RatioValidation result;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    const auto in = static_cast<double>(degrees[v].in);
    const auto out = static_cast<double>(degrees[v].out);
    if (in == 0 && out == 0) continue;
    if (in > ratio.r * out || out > ratio.r * in) result.violating.push_back(v);
  }
  return result;
}

double compute_l_prime(std::span<const DegreePair> degrees) {
  long double sum = 0.0L;
  for (const auto& d : degrees) sum += std::sqrt(static_cast<long double>(d.paths()));
  return static_cast<double>(sum);
}

std::uint64_t path2_sample_count(std::uint64_t n, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive");
  const double k = std::ceil(3.0 * std::sqrt(static_cast<double>(n)) / (epsilon * epsilon));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

namespace {

struct SingleEstimate {
  double value = 0.0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
};

SingleEstimate single_path2(DirectedDegreeSource& source, const RatioBound& ratio, double l_prime,
                            std::uint64_t k, Rng& rng) {
  SingleEstimate out;
  long double sum = 0.0L;
  for (std::uint64_t i = 0; i < k; ++i) {
    SqrtSample s = sqrt_weighted_sample(source, ratio, rng);
    sum += std::sqrt(static_cast<long double>(s.paths)) * l_prime;
    ++out.accepted;
    out.rejected += s.attempts - 1;
  }
  out.value = static_cast<double>(sum / static_cast<long double>(k));
  return out;
}

}  // namespace

Path2Report estimate_path2(DirectedDegreeSource& source, const Path2Params& params, Rng& rng) {
  if (!std::isfinite(params.l_prime) || params.l_prime < 0.0) {
    throw InvalidArgument("L' must be a finite nonnegative value");
  }
  if (params.trials == 0) throw InvalidArgument("trial count must be at least 1");
  if (params.k_override && *params.k_override == 0) throw InvalidArgument("k override must be positive");

  Path2Report report;
  report.l_prime = params.l_prime;
  report.l_prime_source = params.l_prime_source;
  report.r = params.ratio.r;
  report.epsilon = params.epsilon;
  report.seed = params.seed;
  report.samples_per_trial =
      params.k_override ? *params.k_override : path2_sample_count(source.vertex_count(), params.epsilon);
  report.trials = params.trials % 2 == 0 ? params.trials + 1 : params.trials;

  if (params.validation != ValidationMode::kOff) {
    auto check = validate_ratio(source.degree_pairs(), params.ratio);
    if (!check.ok()) {
      if (params.validation == ValidationMode::kStrict) {
        const auto v = check.violating.front();
        throw RatioViolation(v, std::to_string(check.violating.size()) +
                                    " vertices violate the ratio bound; first is " +
                                    std::to_string(v));
      }
      report.warnings.push_back(std::to_string(check.violating.size()) +
                                " vertices violate the ratio bound");
    }
    report.ratio_violations = std::move(check.violating);
  }

  const QueryLedger start = source.ledger();
  if (params.l_prime == 0.0) {
    report.warnings.push_back("L' = 0: no vertex has l(v) > 0, estimate is 0");
    return report;
  }
  if (source.arc_count() == 0) throw InvalidArgument("L' > 0 on a source with no arcs");

  std::vector<double> values;
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    Rng stream = report.trials == 1 ? rng : rng.fork();
    SingleEstimate e =
        single_path2(source, params.ratio, params.l_prime, report.samples_per_trial, stream);
    if (report.trials == 1) rng = stream;
    values.push_back(e.value);
    report.accepted += e.accepted;
    report.rejected += e.rejected;
  }
  auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  report.estimate = *mid;
  report.ledger = source.ledger() - start;
  return report;
}

}  // namespace starcount
