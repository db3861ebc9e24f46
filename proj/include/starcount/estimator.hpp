#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcount/bigint.hpp"
#include "starcount/oracle.hpp"
#include "starcount/rng.hpp"
#include "starcount/table.hpp"

namespace starcount {

struct EstimatorParams {
  unsigned p = 2;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  // Replaces the computed per-call sample count k (testing only).
  std::optional<std::uint64_t> k_override;
  // Set when the requested epsilon exceeded 1/2 and was clamped.
  bool epsilon_clamped = false;

  // Validates p >= 2 and epsilon > 0; epsilon above 1/2 is clamped to 1/2.
  static EstimatorParams make(unsigned p, double epsilon, std::uint64_t seed = 0);
  void validate() const;
};

struct EstimateReport {
  double estimate = 0.0;
  std::uint64_t iterations = 0;
  // Largest iteration count the guess-halving loop can take: ceil(log2 G0) + 1.
  std::uint64_t iteration_cap = 0;
  double initial_guess = 0.0;
  double final_guess = 0.0;
  std::uint64_t trials_per_round = 0;
  QueryLedger ledger;
  EstimatorParams params;
  std::vector<std::string> warnings;
};

// Exact C(x, p); zero when x < p.
BigInt binomial(std::uint64_t x, std::uint64_t p);

// Y = (W/d) * C(d, p): the single-sample unbiased estimate of S_p given a
// magnitude-proportional draw with magnitude d out of total weight W.
double estimator_value(std::uint64_t magnitude, std::uint64_t total_weight, unsigned p);
Rational estimator_value_exact(std::uint64_t magnitude, std::uint64_t total_weight, unsigned p);

// k = max(1, ceil(18 W / (p eps^2 guess^(1/p)))), i.e. 36m/(p eps^2 guess^(1/p)) with W = 2m.
std::uint64_t sample_count_k(std::uint64_t total_weight, unsigned p, double epsilon, double guess);

// ceil(40 (log2 p + log2 log2 n)); requires n >= 4.
std::uint64_t amplification_count_l(std::uint64_t n, unsigned p);

namespace detail {

// Memo of estimator_value for one (W, p), indexed by magnitude.
class EstimatorValueCache {
 public:
  EstimatorValueCache(std::uint64_t total_weight, unsigned p) : total_weight_(total_weight), p_(p) {}
  double operator()(std::uint64_t magnitude);

 private:
  std::uint64_t total_weight_;
  unsigned p_;
  std::vector<double> values_;  // NaN = not yet computed
};

}  // namespace detail

// Mean of k independent Y values for the given guess of S_p.
double unbiased_estimate(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                         Rng& rng);
double unbiased_estimate(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                         Rng& rng, detail::EstimatorValueCache& cache);

// Median of `trials` unbiased_estimate calls, each on its own forked stream.
// An even trial count is raised to the next odd number.
double median_estimate(WeightedOracle& oracle, const EstimatorParams& params, double guess,
                       std::uint64_t trials, Rng& rng);

// Guess-halving driver: starts at n * C(bound, p) (bound = n-1 on graphs) and
// halves until the median estimate certifies the guess. If the guess would
// drop below 1 the last median is returned, which makes S_p = 0 inputs terminate.
EstimateReport count_stars(WeightedOracle& oracle, const EstimatorParams& params, Rng& rng);

// count_stars with p = 2 over the table oracle (the params' p is overridden).
EstimateReport self_join_estimate(const TableColumn& table, EstimatorParams params, Rng& rng);

}  // namespace starcount
