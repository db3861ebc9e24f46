#include "starcount/oracle.hpp"

#include <gtest/gtest.h>

#include "starcount/errors.hpp"
#include "starcount/instances.hpp"
#include "test_support.hpp"

namespace starcount {
namespace {

Graph path3() {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  return Graph::undirected(3, edges);
}

TEST(GraphOracleTest, DegreeQueriesAreMetered) {
  Graph g = path3();
  GraphQueryOracle o(g);
  EXPECT_EQ(o.degree(1), 2u);
  EXPECT_EQ(o.degree(0), 1u);
  EXPECT_EQ(o.ledger().degree_queries, 2u);
  EXPECT_EQ(o.ledger().total(), 2u);
  EXPECT_THROW(o.degree(9), InvalidArgument);
}

TEST(GraphOracleTest, CompleteGraphDegrees) {
  Graph k4 = gen_complete(4);
  GraphQueryOracle o(k4);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(o.degree(v), 3u);
}

TEST(GraphOracleTest, NeighborQueryIsOneBased) {
  Graph g = path3();
  GraphQueryOracle o(g);
  EXPECT_EQ(o.neighbor(1, 1), VertexId{0});
  EXPECT_EQ(o.neighbor(0, 5), std::nullopt);
  EXPECT_THROW(o.neighbor(0, 0), InvalidArgument);
  EXPECT_EQ(o.ledger().neighbor_queries, 2u);
}

TEST(GraphOracleTest, DirectedNeighborSides) {
  std::vector<Edge> arcs{{0, 1}};
  Graph d = Graph::directed(2, arcs);
  GraphQueryOracle o(d);
  EXPECT_EQ(o.neighbor(0, 1, Side::kOut), VertexId{1});
  EXPECT_EQ(o.neighbor(0, 1, Side::kIn), std::nullopt);
}

TEST(GraphOracleTest, RandomEdgeUniformAndMetered) {
  Graph g = path3();
  GraphQueryOracle o(g);
  Rng rng(1);
  std::vector<std::uint64_t> counts(2, 0);
  for (int i = 0; i < 100000; ++i) {
    Edge e = o.random_edge(rng);
    ++counts[e.u == 0 || e.v == 0 ? 0 : 1];
  }
  EXPECT_EQ(o.ledger().random_edge_queries, 100000u);
  EXPECT_GT(testing::chi_square_pvalue(counts, {0.5, 0.5}), 0.01);
}

TEST(GraphOracleTest, RandomEdgeOnEmptyGraphThrows) {
  Graph g = Graph::undirected(3, std::vector<Edge>{});
  GraphQueryOracle o(g);
  Rng rng(1);
  EXPECT_THROW(o.random_edge(rng), EmptySourceError);
  EXPECT_THROW(as_weighted_oracle(g), EmptySourceError);
}

TEST(GraphOracleTest, WeightedVertexSampleOnPath) {
  Graph g = path3();
  GraphQueryOracle o(g);
  Rng rng(2);
  std::vector<std::uint64_t> counts(3, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    auto s = o.weighted_vertex_sample(rng);
    ASSERT_EQ(s.degree, g.degree(s.vertex));
    ++counts[s.vertex];
  }
  EXPECT_GT(testing::chi_square_pvalue(counts, {0.25, 0.5, 0.25}), 0.01);
  EXPECT_EQ(o.ledger().random_edge_queries, static_cast<std::uint64_t>(draws));
  EXPECT_EQ(o.ledger().degree_queries, static_cast<std::uint64_t>(draws));
  EXPECT_EQ(o.ledger().total(), 2u * draws);
}

TEST(GraphOracleTest, WeightedSampleOnRegularGraphIsUniform) {
  Graph g = gen_circulant_regular(12, 4);
  GraphQueryOracle o(g);
  Rng rng(3);
  std::vector<std::uint64_t> counts(12, 0);
  for (int i = 0; i < 100000; ++i) ++counts[o.weighted_vertex_sample(rng).vertex];
  EXPECT_GT(testing::chi_square_pvalue(counts, std::vector<double>(12, 1.0 / 12)), 0.01);
}

TEST(GraphOracleTest, DirectedSidesPickHeadOrTail) {
  Graph g = gen_complete_bipartite_digraph(2, 3);
  GraphQueryOracle o(g);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    EXPECT_LT(o.weighted_vertex_sample(rng, Side::kOut).vertex, 2u);
    EXPECT_GE(o.weighted_vertex_sample(rng, Side::kIn).vertex, 2u);
  }
  EXPECT_THROW(o.weighted_vertex_sample(rng), InvalidArgument);
}

TEST(TableOracleTest, SampleFrequenciesFollowCounts) {
  std::vector<std::uint64_t> counts{3, 1};
  TableColumn t = TableColumn::from_counts(counts);
  TableQueryOracle o(t);
  Rng rng(5);
  std::vector<std::uint64_t> seen(2, 0);
  for (int i = 0; i < 100000; ++i) {
    auto s = o.sample(rng);
    ASSERT_EQ(s.count, counts[s.label]);
    ++seen[s.label];
  }
  EXPECT_GT(testing::chi_square_pvalue(seen, {0.75, 0.25}), 0.01);
  EXPECT_EQ(o.ledger().row_samples, 100000u);
  EXPECT_EQ(o.ledger().magnitude_queries, 100000u);
}

TEST(TableOracleTest, SingleLabelAlwaysReturned) {
  std::vector<std::uint64_t> counts{7};
  TableColumn t = TableColumn::from_counts(counts);
  TableQueryOracle o(t);
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    auto s = o.sample(rng);
    EXPECT_EQ(s.label, 0u);
    EXPECT_EQ(s.count, 7u);
  }
}

TEST(TableOracleTest, EmptyTableThrows) {
  TableColumn t;
  TableQueryOracle o(t);
  Rng rng(1);
  EXPECT_THROW(o.sample(rng), EmptySourceError);
  EXPECT_THROW(as_weighted_oracle(t), EmptySourceError);
}

TEST(WeightedOracleTest, TotalWeights) {
  Graph p3 = path3();
  EXPECT_EQ(as_weighted_oracle(p3)->total_weight(), 4u);
  Graph k4 = gen_complete(4);
  EXPECT_EQ(as_weighted_oracle(k4)->total_weight(), 12u);
  std::vector<std::uint64_t> counts{3, 1};
  TableColumn t = TableColumn::from_counts(counts);
  auto o = as_weighted_oracle(t);
  EXPECT_EQ(o->total_weight(), 4u);
  EXPECT_EQ(o->item_count(), 2u);
  EXPECT_EQ(o->magnitude_bound(), 3u);
}

// Every backend with at most 50 items samples proportionally to magnitude.
TEST(WeightedOracleTest, ChiSquareAcrossBackends) {
  std::vector<Graph> graphs;
  graphs.push_back(gen_erdos_renyi(30, 80, 1));
  graphs.push_back(gen_hub_graph(40, 2, 15, 20, 2));
  graphs.push_back(gen_star_matching(20, 6, 5));
  for (const Graph& g : graphs) {
    auto o = as_weighted_oracle(g);
    Rng rng(9);
    std::vector<std::uint64_t> seen(g.num_vertices(), 0);
    for (int i = 0; i < 100000; ++i) ++seen[o->sample(rng).item];
    std::vector<double> probs;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      probs.push_back(static_cast<double>(g.degree(v)) / static_cast<double>(g.total_degree()));
    }
    EXPECT_GT(testing::chi_square_pvalue(seen, probs), 0.01);
  }
  std::vector<std::uint64_t> counts{1, 2, 3, 5, 8, 13, 21, 1, 1, 4};
  TableColumn t = TableColumn::from_counts(counts);
  auto o = as_weighted_oracle(t);
  Rng rng(10);
  std::vector<std::uint64_t> seen(counts.size(), 0);
  for (int i = 0; i < 100000; ++i) ++seen[o->sample(rng).item];
  std::vector<double> probs;
  for (auto c : counts) probs.push_back(static_cast<double>(c) / static_cast<double>(t.total_rows()));
  EXPECT_GT(testing::chi_square_pvalue(seen, probs), 0.01);
}

TEST(QueryLedgerTest, ArithmeticAndTotal) {
  QueryLedger a;
  a.degree_queries = 3;
  a.row_samples = 2;
  QueryLedger b;
  b.degree_queries = 1;
  b.random_edge_queries = 4;
  QueryLedger c = a + b;
  EXPECT_EQ(c.total(), 10u);
  EXPECT_EQ(c - a, b);
}

}  // namespace
}  // namespace starcount
