#pragma once

#include <boost/math/distributions/chi_squared.hpp>
#include <cstdint>
#include <vector>

namespace starcount::testing {

// Pearson chi-square goodness of fit; returns the upper-tail p-value.
// Cells with zero expected probability must have zero observations.
inline double chi_square_pvalue(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& probabilities) {
  std::uint64_t total = 0;
  for (auto o : observed) total += o;
  double stat = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probabilities[i] == 0.0) {
      if (observed[i] != 0) return 0.0;
      continue;
    }
    const double expected = probabilities[i] * static_cast<double>(total);
    const double diff = static_cast<double>(observed[i]) - expected;
    stat += diff * diff / expected;
    ++cells;
  }
  if (cells < 2) return 1.0;
  boost::math::chi_squared dist(cells - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace starcount::testing
