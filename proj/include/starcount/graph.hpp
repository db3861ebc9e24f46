#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace starcount {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Which adjacency a degree/neighbor request addresses. Undirected graphs only
// accept kUndirected; directed graphs accept kIn and kOut.
enum class Side { kUndirected, kIn, kOut };

const char* side_name(Side side);

// Immutable simple graph with 0-based dense vertex ids.
//
// Neighbor lists keep the insertion order of the construction routine, so the
// i-th neighbor of a vertex is deterministic. For directed graphs the in- and
// out-lists are kept separately and the edge index stores arcs as (tail, head).
//
// Accessors here are unmetered ground truth; algorithms under test go through
// the metered oracles in oracle.hpp.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument on out-of-range ids, self-loops or repeated edges.
  static Graph undirected(std::size_t n, std::span<const Edge> edges);
  static Graph directed(std::size_t n, std::span<const Edge> arcs);

  // Undirected graph from explicit per-vertex neighbor lists (used when
  // materializing port representations). Lists must be symmetric and simple.
  static Graph from_adjacency(const std::vector<std::vector<VertexId>>& adjacency);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_directed() const { return directed_; }

  std::size_t degree(VertexId v, Side side = Side::kUndirected) const;
  std::span<const VertexId> neighbors(VertexId v, Side side = Side::kUndirected) const;
  std::span<const Edge> edges() const { return edges_; }

  // Sum of degrees: 2m for undirected graphs, m for either side of a digraph.
  std::uint64_t total_degree() const;
  std::size_t max_degree(Side side = Side::kUndirected) const;
  bool has_edge(VertexId u, VertexId v) const;

  // Full scan of simplicity, symmetry and edge-index consistency. Returns a
  // description of the first problem found.
  std::optional<std::string> check_invariants() const;

 private:
  struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<VertexId> targets;

    std::size_t degree(VertexId v) const { return offsets[v + 1] - offsets[v]; }
    std::span<const VertexId> row(VertexId v) const {
      return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
  };

  static Csr build_csr(std::size_t n, const std::vector<std::vector<VertexId>>& lists);
  void check_vertex(VertexId v) const;
  const Csr& select(Side side) const;

  std::size_t n_ = 0;
  bool directed_ = false;
  Csr out_;  // the adjacency of an undirected graph
  Csr in_;   // directed graphs only
  std::vector<Edge> edges_;
};

// Relabels vertices: vertex v of `g` becomes perm[v]. Neighbor order is kept.
Graph relabel(const Graph& g, std::span<const VertexId> perm);

}  // namespace starcount
