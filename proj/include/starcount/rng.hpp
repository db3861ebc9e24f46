#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace starcount {

std::uint64_t splitmix64(std::uint64_t x);

// Seedable, splittable generator. Every stochastic routine takes one of these
// explicitly; `fork()` derives an independent child stream deterministically.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  result_type operator()() { return engine_(); }
  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform in [0, 1).
  double uniform01();
  bool coin() { return (engine_() >> 63) != 0; }

  Rng fork();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Seed for the `index`-th derived stream of `base`, independent of any engine state.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace starcount
