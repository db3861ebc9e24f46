#include "starcount/exact.hpp"

#include <gtest/gtest.h>

#include "starcount/errors.hpp"
#include "starcount/instances.hpp"

namespace starcount {
namespace {

TEST(ExactStarCountTest, SmallGraphs) {
  EXPECT_EQ(exact_star_count(gen_path(3), 2), BigInt(1));
  EXPECT_EQ(exact_star_count(gen_complete(4), 2), BigInt(12));
  std::vector<Edge> star;
  for (VertexId v = 1; v <= 5; ++v) star.push_back({0, v});
  EXPECT_EQ(exact_star_count(Graph::undirected(6, star), 3), BigInt(10));
  EXPECT_EQ(exact_star_count(gen_path(3), 3), BigInt(0));
  EXPECT_THROW(exact_star_count(gen_path(3), 1), InvalidArgument);
}

TEST(ExactStarCountTest, TablesAndMagnitudes) {
  std::vector<std::uint64_t> counts = {5, 1, 3};
  EXPECT_EQ(exact_star_count(std::span<const std::uint64_t>(counts), 2), BigInt(13));
  EXPECT_EQ(exact_star_count(TableColumn::from_counts(counts), 3), BigInt(11));
}

TEST(ExactStarCountTest, LargeValuesDoNotOverflow) {
  std::vector<std::uint64_t> big = {std::uint64_t{1} << 40};
  BigInt x = BigInt(1) << 40;
  EXPECT_EQ(exact_star_count(std::span<const std::uint64_t>(big), 3), x * (x - 1) * (x - 2) / 6);
}

TEST(ExactStarCountTest, EnumerationAgrees) {
  EXPECT_EQ(exact_star_count_by_enumeration(gen_complete(5), 2), BigInt(30));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_erdos_renyi(30, 60 + seed * 5, seed);
    for (unsigned p : {2u, 3u, 4u}) {
      EXPECT_EQ(exact_star_count(g, p), exact_star_count_by_enumeration(g, p)) << seed << " " << p;
    }
  }
  EXPECT_THROW(exact_star_count_by_enumeration(gen_complete(60), 4, 1000), InvalidArgument);
}

TEST(ExactStarCountTest, RelabelInvariant) {
  Graph g = gen_erdos_renyi(50, 200, 8);
  Graph h = relabel(g, random_permutation(50, 9));
  for (unsigned p : {2u, 3u}) EXPECT_EQ(exact_star_count(g, p), exact_star_count(h, p));
}

TEST(ExactPathTest, Examples) {
  EXPECT_EQ(exact_path2_count(gen_directed_cycle(7)), BigInt(7));
  EXPECT_EQ(exact_path2_count(gen_complete_bipartite_digraph(3, 4)), BigInt(0));
  EXPECT_EQ(exact_path2_count(gen_bipartite_backedge(12, true, VertexId{9}, VertexId{1})), BigInt(12));
  std::vector<DegreePair> pairs = {{2, 3}, {0, 5}, {4, 1}};
  EXPECT_EQ(exact_path2_count(std::span<const DegreePair>(pairs)), BigInt(10));
  EXPECT_THROW(exact_path2_count(gen_path(3)), InvalidArgument);
}

TEST(ExactJoinTest, Joins) {
  std::vector<std::string> la = {"a", "b"};
  std::vector<std::uint64_t> ca = {2, 3};
  std::vector<std::string> lb = {"b", "a", "c"};
  std::vector<std::uint64_t> cb = {4, 1, 7};
  auto a = TableColumn::from_labeled_counts(la, ca);
  auto b = TableColumn::from_labeled_counts(lb, cb);
  EXPECT_EQ(exact_join_cardinality(a, b), BigInt(14));
  std::vector<std::uint64_t> c = {3, 1};
  EXPECT_EQ(exact_self_join_cardinality(TableColumn::from_counts(c)), BigInt(10));
}

TEST(FallingBinomialTest, MatchesIntegerBinomial) {
  for (unsigned p = 2; p <= 5; ++p) {
    for (int z = 0; z <= 12; ++z) {
      Rational expected = 0;
      if (z >= static_cast<int>(p)) {
        BigInt c = 1;
        for (unsigned i = 0; i < p; ++i) c = c * (z - static_cast<int>(i)) / (i + 1);
        expected = Rational(c);
      }
      EXPECT_EQ(falling_binomial(Rational(z), p), expected) << z << " " << p;
    }
  }
  EXPECT_EQ(falling_binomial(Rational(5, 2), 2), Rational(15, 8));
}

TEST(JensenTest, CompleteGraphIsTight) {
  for (unsigned p : {2u, 3u}) {
    JensenReport r = validate_jensen_bounds(gen_complete(8), p);
    EXPECT_TRUE(r.all_passed());
    ASSERT_FALSE(r.checks.empty());
    EXPECT_TRUE(r.checks[0].applicable);
  }
}

TEST(JensenTest, RandomCorpusPasses) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_erdos_renyi(60, 40 + 20 * seed, seed);
    for (unsigned p : {2u, 3u, 4u}) {
      EXPECT_TRUE(validate_jensen_bounds(g, p).all_passed()) << seed << " " << p;
    }
  }
}

TEST(JensenTest, IsolatedEdgesTriggerFewStars) {
  Graph g = gen_star_matching(20, 0, 10);  // perfect matching, S_2 = 0
  JensenReport r = validate_jensen_bounds(g, 2);
  EXPECT_TRUE(r.all_passed());
  bool few = false;
  for (const auto& c : r.checks) few |= c.name == "few_stars" && c.applicable;
  EXPECT_TRUE(few);
}

TEST(ComputeExactCountsTest, GraphDigraphTable) {
  std::vector<unsigned> ps = {2, 3};
  ExactCounts g = compute_exact_counts(gen_complete(5), ps);
  EXPECT_EQ(g.source, "graph");
  EXPECT_EQ(g.star_counts[0], BigInt(30));
  EXPECT_EQ(g.star_counts[1], BigInt(20));
  EXPECT_EQ(g.histograms.at("degree").at(4), 5u);
  ExactCounts d = compute_exact_counts(gen_directed_cycle(4), ps);
  EXPECT_EQ(d.source, "digraph");
  EXPECT_EQ(*d.path2, BigInt(4));
  std::vector<std::uint64_t> counts = {3, 1};
  ExactCounts t = compute_exact_counts(TableColumn::from_counts(counts), ps);
  EXPECT_EQ(t.source, "table");
  EXPECT_EQ(t.star_counts[0], BigInt(3));
  EXPECT_EQ(*t.self_join, BigInt(10));
  EXPECT_EQ(t.m, 4u);
}

}  // namespace
}  // namespace starcount
