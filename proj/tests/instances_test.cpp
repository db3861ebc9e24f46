#include "starcount/instances.hpp"

#include <gtest/gtest.h>

#include <set>

#include "starcount/errors.hpp"
#include "starcount/estimator.hpp"

namespace starcount {
namespace {

// Independent count: sum over vertices of C(deg, p) with plain integers.
std::uint64_t stars_by_degree(const Graph& g, unsigned p, Side side = Side::kUndirected) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::uint64_t d = g.degree(v, side);
    std::uint64_t c = 1;
    for (unsigned i = 0; i < p; ++i) c = d < p ? 0 : c * (d - i) / (i + 1);
    total += d < p ? 0 : c;
  }
  return total;
}

std::uint64_t path2(const Graph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    total += g.degree(v, Side::kIn) * g.degree(v, Side::kOut);
  }
  return total;
}

TEST(CirculantTest, SmallCases) {
  Graph c5 = gen_circulant_regular(5, 2);
  EXPECT_EQ(c5.num_edges(), 5u);
  Graph odd = gen_circulant_regular(6, 3);
  for (VertexId v = 0; v < 6; ++v) {
    EXPECT_EQ(odd.degree(v), 3u);
    EXPECT_TRUE(odd.has_edge(v, (v + 3) % 6));
  }
  Graph k4 = gen_circulant_regular(4, 3);
  EXPECT_EQ(k4.num_edges(), 6u);
  EXPECT_THROW(gen_circulant_regular(5, 3), ConstraintViolation);
  EXPECT_THROW(gen_circulant_regular(4, 4), ConstraintViolation);
  EXPECT_THROW(gen_circulant_regular(4, 0), ConstraintViolation);
}

TEST(CirculantTest, RegularAndSimpleAcrossSizes) {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      if ((n * d) % 2) continue;
      Graph g = gen_circulant_regular(n, d);
      ASSERT_FALSE(g.check_invariants());
      for (VertexId v = 0; v < n; ++v) ASSERT_EQ(g.degree(v), d) << n << " " << d;
    }
  }
}

TEST(NearRegularTest, OneVertexShortWhenParityFails) {
  Graph g = gen_near_regular(7, 3);
  std::size_t short_vertices = 0;
  for (VertexId v = 0; v < 7; ++v) {
    EXPECT_GE(g.degree(v), 2u);
    short_vertices += g.degree(v) == 2;
  }
  EXPECT_EQ(short_vertices, 1u);
  EXPECT_FALSE(g.check_invariants());
}

TEST(StarHidingTest, DefaultExample) {
  auto pair = gen_star_hiding_pair(1000, 2, 100);
  EXPECT_EQ(pair.star_size, 10u);
  EXPECT_EQ(pair.star_count, BigInt(45));
  EXPECT_EQ(stars_by_degree(pair.without_stars, 2), 0u);
  EXPECT_EQ(stars_by_degree(pair.with_stars, 2), 45u);
  for (const Graph* g : {&pair.without_stars, &pair.with_stars}) {
    EXPECT_EQ(g->num_vertices(), 1000u);
    for (const Edge& e : g->edges()) {
      EXPECT_EQ(e.u <= pair.star_size, e.v <= pair.star_size) << "edge crosses S";
    }
  }
  // Identical outside S.
  std::set<std::pair<VertexId, VertexId>> a, b;
  for (const Edge& e : pair.without_stars.edges()) {
    if (e.u > pair.star_size) a.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  for (const Edge& e : pair.with_stars.edges()) {
    if (e.u > pair.star_size) b.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  EXPECT_EQ(a, b);
}

TEST(StarHidingTest, StrictModeRejectsParity) {
  StarHidingOptions strict;
  strict.strict_regular = true;
  EXPECT_THROW(gen_star_hiding_pair(1000, 2, 100, strict), ConstraintViolation);
  auto pair = gen_star_hiding_pair(1000, 3, 1000, strict);
  EXPECT_EQ(stars_by_degree(pair.without_stars, 3), 0u);
  EXPECT_EQ(BigInt(stars_by_degree(pair.with_stars, 3)), pair.star_count);
}

TEST(StarHidingTest, Constraints) {
  EXPECT_THROW(gen_star_hiding_pair(1000, 2, 9), ConstraintViolation);
  EXPECT_THROW(gen_star_hiding_pair(10, 2, 100), ConstraintViolation);
}

TEST(BipartiteBackedgeTest, PathCounts) {
  Graph without = gen_bipartite_backedge(10, false);
  EXPECT_EQ(path2(without), 0u);
  Graph with = gen_bipartite_backedge(10, true, VertexId{7}, VertexId{2});
  EXPECT_EQ(path2(with), 10u);
  EXPECT_EQ(with.degree(2, Side::kOut), 5u);
  EXPECT_EQ(with.degree(2, Side::kIn), 1u);
  EXPECT_EQ(with.degree(7, Side::kOut), 1u);
  EXPECT_EQ(with.degree(7, Side::kIn), 5u);
  EXPECT_THROW(gen_bipartite_backedge(9, false), ConstraintViolation);
  EXPECT_THROW(gen_bipartite_backedge(10, true, VertexId{2}, VertexId{2}), ConstraintViolation);
  EXPECT_THROW(gen_bipartite_backedge(10, true, VertexId{7}, VertexId{8}), ConstraintViolation);
}

TEST(BipartiteBackedgeTest, RandomEndpointsAreValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_bipartite_backedge(20, true, std::nullopt, std::nullopt, seed);
    EXPECT_EQ(path2(g), 20u);
    EXPECT_EQ(g.num_edges(), 101u);
  }
}

TEST(ErdosRenyiTest, ExactEdgeCountAndDeterminism) {
  Graph full = gen_erdos_renyi(10, 45, 3);
  EXPECT_EQ(full.num_edges(), 45u);
  EXPECT_EQ(stars_by_degree(full, 2), 10u * 36u);
  Graph a = gen_erdos_renyi(200, 700, 11);
  Graph b = gen_erdos_renyi(200, 700, 11);
  Graph c = gen_erdos_renyi(200, 700, 12);
  EXPECT_EQ(a.num_edges(), 700u);
  EXPECT_FALSE(a.check_invariants());
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
  EXPECT_FALSE(std::equal(a.edges().begin(), a.edges().end(), c.edges().begin(), c.edges().end()));
  Graph dense = gen_erdos_renyi(40, 700, 1);
  EXPECT_EQ(dense.num_edges(), 700u);
  EXPECT_THROW(gen_erdos_renyi(10, 46, 0), InvalidArgument);
}

TEST(StarMatchingTest, Shape) {
  Graph g = gen_star_matching(100, 20, 30);
  EXPECT_EQ(g.degree(0), 20u);
  EXPECT_EQ(g.num_edges(), 50u);
  EXPECT_EQ(stars_by_degree(g, 2), 190u);
  EXPECT_THROW(gen_star_matching(50, 20, 30), InvalidArgument);
}

TEST(HubGraphTest, HubDegrees) {
  Graph g = gen_hub_graph(500, 3, 100, 200, 5);
  EXPECT_FALSE(g.check_invariants());
  for (VertexId h = 0; h < 3; ++h) EXPECT_EQ(g.degree(h), 100u);
  EXPECT_EQ(g.num_edges(), 500u);
}

TEST(RatioDigraphTest, RatioHolds) {
  for (double r : {1.0, 2.0, 4.0}) {
    Graph g = gen_ratio_bounded_digraph(300, 3, 600, r, 9);
    EXPECT_FALSE(g.check_invariants());
    for (VertexId v = 0; v < 300; ++v) {
      const double in = static_cast<double>(g.degree(v, Side::kIn));
      const double out = static_cast<double>(g.degree(v, Side::kOut));
      EXPECT_LE(in, r * out + 1e-9);
      EXPECT_LE(out, r * in + 1e-9);
    }
  }
}

TEST(SimpleFamiliesTest, Counts) {
  EXPECT_EQ(gen_complete(6).num_edges(), 15u);
  EXPECT_EQ(gen_path(6).num_edges(), 5u);
  EXPECT_EQ(gen_cycle(6).num_edges(), 6u);
  EXPECT_EQ(path2(gen_directed_cycle(6)), 6u);
  Graph kab = gen_complete_bipartite_digraph(3, 4);
  EXPECT_EQ(kab.num_edges(), 12u);
  EXPECT_EQ(stars_by_degree(kab, 2, Side::kIn), 4u * 3u);
}

TEST(PermutationTest, IsPermutation) {
  auto perm = random_permutation(100, 4);
  std::set<VertexId> seen(perm.begin(), perm.end());
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(*seen.rbegin(), 99u);
}

TEST(GeneratorSpecTest, JsonRoundTripAndDispatch) {
  GeneratorSpec spec;
  spec.family = "erdos_renyi";
  spec.params = {{"n", 50}, {"m", 100}};
  spec.seed = 17;
  GeneratorSpec back = GeneratorSpec::from_json(nlohmann::json::parse(spec.to_json().dump()));
  EXPECT_EQ(back.family, spec.family);
  EXPECT_EQ(back.seed, 17u);
  Graph a = generate_graph(spec);
  Graph b = generate_graph(back);
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
  GeneratorSpec bad;
  bad.family = "nope";
  EXPECT_THROW(generate_graph(bad), InvalidArgument);
}

TEST(GeneratorSpecTest, EveryFamilyBuilds) {
  const std::vector<std::pair<std::string, nlohmann::ordered_json>> cases = {
      {"circulant", {{"n", 10}, {"d", 4}}},
      {"near_regular", {{"n", 9}, {"d", 3}}},
      {"erdos_renyi", {{"n", 20}, {"m", 30}}},
      {"star_matching", {{"n", 40}, {"star", 10}, {"matching", 5}}},
      {"hubs", {{"n", 100}, {"hubs", 2}, {"hub_degree", 20}, {"background", 30}}},
      {"complete", {{"n", 5}}},
      {"path", {{"n", 5}}},
      {"cycle", {{"n", 5}}},
      {"directed_cycle", {{"n", 5}}},
      {"complete_bipartite_digraph", {{"a", 2}, {"b", 3}}},
      {"ratio_digraph", {{"n", 30}, {"cycles", 2}, {"extra", 10}, {"r", 2.0}}},
      {"slab", {{"n1", 16}, {"d1", 4}, {"n2", 2}}},
      {"planted", {{"n1", 64}, {"d1", 8}, {"n2", 4}, {"d2", 16}, {"x", 3}, {"y", 2}}},
      {"star_hiding_without", {{"n", 100}, {"p", 2}, {"s", 50}}},
      {"star_hiding_with", {{"n", 100}, {"p", 2}, {"s", 50}}},
      {"bipartite_backedge", {{"n", 10}, {"backedge", true}}},
  };
  std::set<std::string> covered;
  for (const auto& [family, params] : cases) {
    GeneratorSpec spec;
    spec.family = family;
    spec.params = params;
    spec.seed = 1;
    Graph g;
    ASSERT_NO_THROW(g = generate_graph(spec)) << family;
    EXPECT_FALSE(g.check_invariants()) << family;
    covered.insert(family);
  }
  for (const auto& family : generator_families()) EXPECT_TRUE(covered.count(family)) << family;
}

}  // namespace
}  // namespace starcount
