#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcount/bigint.hpp"
#include "starcount/graph.hpp"

namespace starcount {

struct Port {
  VertexId vertex = 0;
  std::uint32_t slot = 0;  // 0-based

  friend bool operator==(const Port&, const Port&) = default;
};

// Adjacency list given as a perfect matching over ports (vertex, slot): if
// port (u, i) is matched to (v, j) then the i-th neighbor of u is v and the
// j-th neighbor of v is u.
class PortRepresentation {
 public:
  explicit PortRepresentation(std::vector<std::uint32_t> degrees);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::uint32_t degree(VertexId v) const;
  std::uint64_t num_ports() const { return mate_.size(); }

  // Throws InvalidArgument when either port is taken or a == b.
  void match(Port a, Port b);
  std::optional<Port> partner(Port p) const;
  bool complete() const;

  // Involution without fixed points, every port matched, no self-loops and
  // no two matched pairs joining the same vertex pair.
  std::optional<std::string> check_invariants() const;

  // Graph whose neighbor lists follow slot order. Throws InvalidArgument
  // when the invariants fail.
  Graph materialize() const;

 private:
  static constexpr std::uint64_t kUnmatched = static_cast<std::uint64_t>(-1);

  std::uint64_t index(Port p) const;
  Port port_at(std::uint64_t index) const;

  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint64_t> mate_;
};

// Throws ConstraintViolation naming the first failed condition among:
// all positive, d1 even, n2 even, n2 <= d1, d1 <= 2*d2, d1 + 2*d2 < n1.
void validate_planted_params(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                             std::uint64_t d2);

// Rows 0..n1-1 carry d1 ports each, vertices n1..n1+n2-1 none. In slab j
// (columns 2j-2, 2j-1, j = 1..d1/2) the left cell of row i is matched to the
// right cell of row (i + j) mod n1. Requires d1 even and d1 < n1.
PortRepresentation slab_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2);

// The slab table with an n2 x d2 block attached to vertices n1..n1+n2-1. The
// block is matched transposed into the d2 x n2 window of the slab table whose
// top-left cell is (x, 2y-1) (1-based, wrapping cyclically). In covered slabs
// the cells left unmatched by the window are paired at distance j + d2.
PortRepresentation planted_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                                          std::uint64_t d2, std::uint64_t x, std::uint64_t y);

// True when slab-table cell (row, column) lies in the window extended by
// d1/2 rows above and below, i.e. one of the (d1 + d2) * n2 cells that may
// differ between the two representations.
bool in_extended_window(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2, std::uint64_t d2,
                        std::uint64_t x, std::uint64_t y, std::uint64_t row, std::uint64_t column);

struct LowerBoundParams {
  std::uint64_t n1 = 0;
  std::uint64_t d1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t d2 = 0;
  BigInt s1;  // n1 * C(d1, p)
  BigInt s2;  // s1 + n2 * C(d2, p)
};

enum class StarRange {
  kMedium,  // s <= n^p: n1 ~ n, d1 ~ (s/n)^(1/p), n2 = O(1), d2 ~ s^(1/p)
  kLarge,   // s >= n^p: n1 ~ n, d1 ~ (s/n)^(1/p), n2 ~ s/n^p, d2 ~ n
};

// Concrete planted-construction parameters for a target star count s on n
// vertices. Throws ConstraintViolation when no feasible integers exist.
LowerBoundParams lower_bound_params(std::uint64_t n, unsigned p, const BigInt& s, StarRange range);

// Number of edges (as vertex pairs) present in both undirected graphs.
std::uint64_t shared_edge_count(const Graph& a, const Graph& b);

}  // namespace starcount
