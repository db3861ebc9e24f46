#include "starcount/rng.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace starcount {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(RngTest, DifferentSeedsDiffer) {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += a() == b();
  EXPECT_LT(same, 3);
}

TEST(RngTest, ForkIsDeterministicAndDistinct) {
  Rng a(7), b(7);
  Rng fa = a.fork();
  Rng fb = b.fork();
  EXPECT_EQ(fa(), fb());
  EXPECT_NE(a(), fa());
}

TEST(RngTest, UniformBelowStaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.uniform_below(7), 7u);
  EXPECT_EQ(rng.uniform_below(1), 0u);
}

TEST(RngTest, UniformBelowIsUniform) {
  // At level 0.01 about one seed in a hundred is rejected; allow a few.
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    std::vector<std::uint64_t> counts(10, 0);
    for (int i = 0; i < 20000; ++i) ++counts[rng.uniform_below(10)];
    rejected += testing::chi_square_pvalue(counts, std::vector<double>(10, 0.1)) < 0.01;
  }
  EXPECT_LE(rejected, 3);
}

TEST(RngTest, Uniform01InUnitInterval) {
  Rng rng(5);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(RngTest, DeriveSeedSpreadsIndices) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(0, i));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(derive_seed(9, 4), derive_seed(9, 4));
}

}  // namespace
}  // namespace starcount
