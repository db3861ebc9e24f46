#include "starcount/oracle.hpp"

#include "starcount/errors.hpp"

namespace starcount {

QueryLedger& QueryLedger::operator+=(const QueryLedger& other) {
  degree_queries += other.degree_queries;
  neighbor_queries += other.neighbor_queries;
  random_edge_queries += other.random_edge_queries;
  magnitude_queries += other.magnitude_queries;
  row_samples += other.row_samples;
  return *this;
}

QueryLedger operator-(const QueryLedger& later, const QueryLedger& earlier) {
  QueryLedger d;
  d.degree_queries = later.degree_queries - earlier.degree_queries;
  d.neighbor_queries = later.neighbor_queries - earlier.neighbor_queries;
  d.random_edge_queries = later.random_edge_queries - earlier.random_edge_queries;
  d.magnitude_queries = later.magnitude_queries - earlier.magnitude_queries;
  d.row_samples = later.row_samples - earlier.row_samples;
  return d;
}

std::uint64_t GraphQueryOracle::degree(VertexId v, Side side) {
  auto d = graph_->degree(v, side);
  ++ledger_.degree_queries;
  return d;
}

std::optional<VertexId> GraphQueryOracle::neighbor(VertexId v, std::size_t index, Side side) {
  if (index == 0) throw InvalidArgument("neighbor index is 1-based");
  auto row = graph_->neighbors(v, side);
  ++ledger_.neighbor_queries;
  if (index > row.size()) return std::nullopt;
  return row[index - 1];
}

Edge GraphQueryOracle::random_edge(Rng& rng) {
  auto edges = graph_->edges();
  if (edges.empty()) throw EmptySourceError("random edge query on a graph with no edges");
  ++ledger_.random_edge_queries;
  return edges[rng.uniform_below(edges.size())];
}

VertexSample GraphQueryOracle::weighted_vertex_sample(Rng& rng, Side side) {
  if (graph_->is_directed() == (side == Side::kUndirected)) {
    throw InvalidArgument(std::string("side '") + side_name(side) +
                          "' does not match the graph's directedness");
  }
  Edge e = random_edge(rng);
  VertexId v;
  switch (side) {
    case Side::kIn:
      v = e.v;
      break;
    case Side::kOut:
      v = e.u;
      break;
    default:
      v = rng.coin() ? e.v : e.u;
      break;
  }
  return VertexSample{v, degree(v, side)};
}

LabelSample TableQueryOracle::sample(Rng& rng) {
  const std::uint64_t rows = table_->total_rows();
  if (rows == 0) throw EmptySourceError("row sample on an empty table");
  ++ledger_.row_samples;
  std::size_t label = table_->label_of_row(rng.uniform_below(rows));
  return LabelSample{label, magnitude(label)};
}

std::uint64_t TableQueryOracle::magnitude(std::size_t label) {
  auto c = table_->count(label);
  ++ledger_.magnitude_queries;
  return c;
}

namespace {

class GraphWeightedOracle final : public WeightedOracle {
 public:
  GraphWeightedOracle(const Graph& graph, Side side) : oracle_(graph), side_(side) {}

  std::uint64_t total_weight() const override { return oracle_.graph().total_degree(); }
  std::uint64_t item_count() const override { return oracle_.graph().num_vertices(); }
  std::uint64_t magnitude_bound() const override {
    auto n = oracle_.graph().num_vertices();
    return n == 0 ? 0 : n - 1;
  }
  WeightedSample sample(Rng& rng) override {
    auto s = oracle_.weighted_vertex_sample(rng, side_);
    return WeightedSample{s.vertex, s.degree};
  }
  std::uint64_t magnitude(std::uint64_t item) override {
    if (item >= item_count()) throw InvalidArgument("unknown vertex id " + std::to_string(item));
    return oracle_.degree(static_cast<VertexId>(item), side_);
  }
  const QueryLedger& ledger() const override { return oracle_.ledger(); }

 private:
  GraphQueryOracle oracle_;
  Side side_;
};

class TableWeightedOracle final : public WeightedOracle {
 public:
  explicit TableWeightedOracle(const TableColumn& table) : oracle_(table) {}

  std::uint64_t total_weight() const override { return oracle_.table().total_rows(); }
  std::uint64_t item_count() const override { return oracle_.table().num_labels(); }
  std::uint64_t magnitude_bound() const override {
    return total_weight() - (item_count() - 1);
  }
  WeightedSample sample(Rng& rng) override {
    auto s = oracle_.sample(rng);
    return WeightedSample{s.label, s.count};
  }
  std::uint64_t magnitude(std::uint64_t item) override { return oracle_.magnitude(item); }
  const QueryLedger& ledger() const override { return oracle_.ledger(); }

 private:
  TableQueryOracle oracle_;
};

}  // namespace

std::unique_ptr<WeightedOracle> as_weighted_oracle(const Graph& graph, Side side) {
  if (graph.is_directed() == (side == Side::kUndirected)) {
    throw InvalidArgument(std::string("side '") + side_name(side) +
                          "' does not match the graph's directedness");
  }
  if (graph.num_edges() == 0) throw EmptySourceError("graph has no edges");
  return std::make_unique<GraphWeightedOracle>(graph, side);
}

std::unique_ptr<WeightedOracle> as_weighted_oracle(const TableColumn& table) {
  if (table.total_rows() == 0) throw EmptySourceError("table has no rows");
  return std::make_unique<TableWeightedOracle>(table);
}

}  // namespace starcount
