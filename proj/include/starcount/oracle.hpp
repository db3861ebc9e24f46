#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "starcount/graph.hpp"
#include "starcount/rng.hpp"
#include "starcount/table.hpp"

namespace starcount {

// Exact per-type query counts. Counters only ever grow; ledgers from separate
// runs are merged by summation.
struct QueryLedger {
  std::uint64_t degree_queries = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t random_edge_queries = 0;
  std::uint64_t magnitude_queries = 0;
  std::uint64_t row_samples = 0;

  std::uint64_t total() const {
    return degree_queries + neighbor_queries + random_edge_queries + magnitude_queries +
           row_samples;
  }

  QueryLedger& operator+=(const QueryLedger& other);
  friend QueryLedger operator+(QueryLedger a, const QueryLedger& b) { return a += b; }
  // Difference of two snapshots of the same ledger (later minus earlier).
  friend QueryLedger operator-(const QueryLedger& later, const QueryLedger& earlier);
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

struct VertexSample {
  VertexId vertex = 0;
  std::uint64_t degree = 0;
};

// Metered degree / neighbor / random-edge access to a graph. Holds a reference
// to the graph, which must outlive the oracle; each run owns its own oracle.
class GraphQueryOracle {
 public:
  explicit GraphQueryOracle(const Graph& graph) : graph_(&graph) {}

  std::uint64_t degree(VertexId v, Side side = Side::kUndirected);
  // `index` is 1-based; returns nullopt past the end of the list.
  std::optional<VertexId> neighbor(VertexId v, std::size_t index, Side side = Side::kUndirected);
  // Each edge with probability exactly 1/m; arcs keep their orientation.
  Edge random_edge(Rng& rng);

  // One random edge plus one degree query. Undirected: a fair endpoint, so v
  // is drawn with probability deg(v)/2m. Directed: kIn takes the head
  // (prob deg-(v)/m), kOut the tail (prob deg+(v)/m).
  VertexSample weighted_vertex_sample(Rng& rng, Side side = Side::kUndirected);

  const Graph& graph() const { return *graph_; }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  const Graph* graph_;
  QueryLedger ledger_;
};

struct LabelSample {
  std::size_t label = 0;
  std::uint64_t count = 0;
};

// Row sampling plus indexed count lookup over a table column.
class TableQueryOracle {
 public:
  explicit TableQueryOracle(const TableColumn& table) : table_(&table) {}

  // Uniform row -> its label, plus that label's count (one row sample and one
  // magnitude query).
  LabelSample sample(Rng& rng);
  std::uint64_t magnitude(std::size_t label);

  const TableColumn& table() const { return *table_; }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  const TableColumn* table_;
  QueryLedger ledger_;
};

struct WeightedSample {
  std::uint64_t item = 0;
  std::uint64_t magnitude = 0;
};

// The estimator-facing contract: items with nonnegative integer magnitudes
// summing to W, sampled with probability magnitude / W.
class WeightedOracle {
 public:
  virtual ~WeightedOracle() = default;

  virtual std::uint64_t total_weight() const = 0;
  // n: number of items (vertices, distinct labels).
  virtual std::uint64_t item_count() const = 0;
  // Largest magnitude any item could have given the source's shape: n-1 for a
  // simple graph, W-(n-1) for a table column.
  virtual std::uint64_t magnitude_bound() const = 0;
  virtual WeightedSample sample(Rng& rng) = 0;
  virtual std::uint64_t magnitude(std::uint64_t item) = 0;
  virtual const QueryLedger& ledger() const = 0;
};

// Graph backend: W = 2m (undirected) or m (one side of a digraph).
// Table backend: W = row count. Throws EmptySourceError on an empty source.
std::unique_ptr<WeightedOracle> as_weighted_oracle(const Graph& graph,
                                                   Side side = Side::kUndirected);
std::unique_ptr<WeightedOracle> as_weighted_oracle(const TableColumn& table);

}  // namespace starcount
