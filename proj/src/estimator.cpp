#include "starcount/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "starcount/errors.hpp"

namespace starcount {

EstimatorParams EstimatorParams::make(unsigned p, double epsilon, std::uint64_t seed) {
  EstimatorParams params;
  params.p = p;
  params.epsilon = epsilon;
  params.seed = seed;
  if (std::isfinite(epsilon) && epsilon > 0.5) {
    params.epsilon = 0.5;
    params.epsilon_clamped = true;
  }
  params.validate();
  return params;
}

void EstimatorParams::validate() const {
  if (p < 2) throw InvalidArgument("p must be at least 2, got " + std::to_string(p));
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon > 0.5) {
    throw InvalidArgument("epsilon must lie in (0, 1/2], got " + std::to_string(epsilon));
  }
  if (k_override && *k_override == 0) throw InvalidArgument("k override must be positive");
}

BigInt binomial(std::uint64_t x, std::uint64_t p) {
  if (x < p) return 0;
  p = std::min(p, x - p);
  BigInt result = 1;
  for (std::uint64_t i = 0; i < p; ++i) {
    result *= (x - i);
    result /= (i + 1);
  }
  return result;
}

Rational estimator_value_exact(std::uint64_t magnitude, std::uint64_t total_weight, unsigned p) {
  if (magnitude == 0) throw InvalidArgument("zero-magnitude item cannot be sampled");
  if (total_weight < magnitude) throw InvalidArgument("total weight smaller than magnitude");
  return Rational(binomial(magnitude, p) * total_weight, BigInt(magnitude));
}

double estimator_value(std::uint64_t magnitude, std::uint64_t total_weight, unsigned p) {
  return estimator_value_exact(magnitude, total_weight, p).convert_to<double>();
}

std::uint64_t sample_count_k(std::uint64_t total_weight, unsigned p, double epsilon, double guess) {
  if (!(guess >= 1.0)) throw InvalidArgument("guess must be at least 1");
  if (p == 0 || !(epsilon > 0.0)) throw InvalidArgument("p and epsilon must be positive");
  const long double numerator = 18.0L * static_cast<long double>(total_weight);
  const long double denominator = static_cast<long double>(p) * epsilon * epsilon *
                                  std::pow(static_cast<long double>(guess), 1.0L / p);
  const long double k = std::ceil(numerator / denominator);
  if (k < 1.0L) return 1;
  if (k >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidArgument("sample count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(k);
}

std::uint64_t amplification_count_l(std::uint64_t n, unsigned p) {
  if (n < 4) throw InvalidArgument("amplification count needs n >= 4 (log log n undefined)");
  if (p < 1) throw InvalidArgument("p must be positive");
  const double value = 40.0 * (std::log2(static_cast<double>(p)) +
                               std::log2(std::log2(static_cast<double>(n))));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(value)));
}

namespace detail {

double EstimatorValueCache::operator()(std::uint64_t magnitude) {
  if (magnitude < values_.size() && !std::isnan(values_[magnitude])) return values_[magnitude];
  double v = estimator_value(magnitude, total_weight_, p_);
  if (magnitude < (std::uint64_t{1} << 24)) {
    if (magnitude >= values_.size()) {
      values_.resize(magnitude + 1, std::numeric_limits<double>::quiet_NaN());
    }
    values_[magnitude] = v;
  }
  return v;
}

}  // namespace detail

double unbiased_estimate(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                         Rng& rng, detail::EstimatorValueCache& cache) {
  const std::uint64_t total_weight = oracle.total_weight();
  if (total_weight == 0) throw EmptySourceError("weighted oracle has zero total weight");
  const std::uint64_t k = params.k_override
                              ? *params.k_override
                              : sample_count_k(total_weight, params.p, params.epsilon, guess);
  long double sum = 0.0L;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += cache(oracle.sample(rng).magnitude);
  }
  return static_cast<double>(sum / static_cast<long double>(k));
}

double unbiased_estimate(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                         Rng& rng) {
  params.validate();
  detail::EstimatorValueCache cache(oracle.total_weight(), params.p);
  return unbiased_estimate(oracle, params, guess, rng, cache);
}

namespace {

double median_with_cache(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                         std::uint64_t trials, Rng& rng, detail::EstimatorValueCache& cache) {
  if (trials == 0) throw InvalidArgument("trial count must be at least 1");
  if (trials % 2 == 0) ++trials;
  std::vector<double> values;
  values.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng stream = rng.fork();
    values.push_back(unbiased_estimate(oracle, params, guess, stream, cache));
  }
  auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

}  // namespace

double median_estimate(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                       std::uint64_t trials, Rng& rng) {
  params.validate();
  detail::EstimatorValueCache cache(oracle.total_weight(), params.p);
  return median_with_cache(oracle, params, guess, trials, rng, cache);
}

EstimateReport count_stars(WeightedOracle& oracle, const EstimatorParams& params, Rng& rng) {
  params.validate();
  const std::uint64_t total_weight = oracle.total_weight();
  if (total_weight == 0) throw EmptySourceError("weighted oracle has zero total weight");
  const std::uint64_t n = oracle.item_count();

  EstimateReport report;
  report.params = params;
  if (params.epsilon_clamped) report.warnings.push_back("epsilon above 1/2 clamped to 1/2");

  const BigInt initial = BigInt(n) * binomial(oracle.magnitude_bound(), params.p);
  report.initial_guess = to_double(initial);
  if (!std::isfinite(report.initial_guess)) {
    throw InvalidArgument("initial guess n*C(n-1,p) exceeds double range");
  }
  report.iteration_cap = initial >= 1 ? ceil_log2(initial) + 1 : 0;

  std::uint64_t trials = amplification_count_l(std::max<std::uint64_t>(n, 4), params.p);
  if (trials % 2 == 0) ++trials;
  report.trials_per_round = trials;

  detail::EstimatorValueCache cache(total_weight, params.p);
  const QueryLedger start = oracle.ledger();
  double guess = report.initial_guess;
  double last = 0.0;
  bool certified = false;
  while (guess >= 1.0) {
    ++report.iterations;
    report.final_guess = guess;
    last = median_with_cache(oracle, params, guess, trials, rng, cache);
    if (last >= (1.0 - params.epsilon) * guess) {
      certified = true;
      break;
    }
    guess /= 2.0;
  }
  if (!certified) {
    report.warnings.push_back("guess fell below 1 without certification; returning last median");
  }
  report.estimate = last;
  report.ledger = oracle.ledger() - start;
  return report;
}

EstimateReport self_join_estimate(const TableColumn& table, EstimatorParams params, Rng& rng) {
  params.p = 2;
  auto oracle = as_weighted_oracle(table);
  return count_stars(*oracle, params, rng);
}

}  // namespace starcount
