#include "starcount/graph.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "starcount/errors.hpp"

namespace starcount {
namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

void check_endpoints(std::size_t n, const Edge& e) {
  if (e.u >= n || e.v >= n) {
    throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          ") references a vertex outside [0, " + std::to_string(n) + ")");
  }
  if (e.u == e.v) {
    throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
  }
}

}  // namespace

const char* side_name(Side side) {
  switch (side) {
    case Side::kUndirected:
      return "undirected";
    case Side::kIn:
      return "in";
    case Side::kOut:
      return "out";
  }
  return "?";
}

Graph::Csr Graph::build_csr(std::size_t n, const std::vector<std::vector<VertexId>>& lists) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) csr.offsets[v + 1] = csr.offsets[v] + lists[v].size();
  csr.targets.reserve(csr.offsets[n]);
  for (const auto& list : lists) csr.targets.insert(csr.targets.end(), list.begin(), list.end());
  return csr;
}

Graph Graph::undirected(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<VertexId>::max()) throw InvalidArgument("too many vertices");
  std::vector<std::vector<VertexId>> adj(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    check_endpoints(n, e);
    auto key = pair_key(std::min(e.u, e.v), std::max(e.u, e.v));
    if (!seen.insert(key).second) {
      throw InvalidArgument("parallel edge {" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + "}");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Graph g;
  g.n_ = n;
  g.directed_ = false;
  g.out_ = build_csr(n, adj);
  g.edges_.assign(edges.begin(), edges.end());
  return g;
}

Graph Graph::directed(std::size_t n, std::span<const Edge> arcs) {
  if (n > std::numeric_limits<VertexId>::max()) throw InvalidArgument("too many vertices");
  std::vector<std::vector<VertexId>> out(n);
  std::vector<std::vector<VertexId>> in(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(arcs.size() * 2);
  for (const Edge& e : arcs) {
    check_endpoints(n, e);
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw InvalidArgument("repeated arc (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ")");
    }
    out[e.u].push_back(e.v);
    in[e.v].push_back(e.u);
  }
  Graph g;
  g.n_ = n;
  g.directed_ = true;
  g.out_ = build_csr(n, out);
  g.in_ = build_csr(n, in);
  g.edges_.assign(arcs.begin(), arcs.end());
  return g;
}

Graph Graph::from_adjacency(const std::vector<std::vector<VertexId>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    std::unordered_set<VertexId> local;
    for (VertexId v : adjacency[u]) {
      check_endpoints(n, Edge{static_cast<VertexId>(u), v});
      if (!local.insert(v).second) {
        throw InvalidArgument("parallel edge {" + std::to_string(u) + ", " +
                              std::to_string(v) + "}");
      }
      if (u < v) edges.push_back(Edge{static_cast<VertexId>(u), v});
    }
  }
  Graph g;
  g.n_ = n;
  g.directed_ = false;
  g.out_ = build_csr(n, adjacency);
  g.edges_ = std::move(edges);
  if (auto problem = g.check_invariants()) throw InvalidArgument(*problem);
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw InvalidArgument("unknown vertex id " + std::to_string(v) + " (n = " +
                          std::to_string(n_) + ")");
  }
}

const Graph::Csr& Graph::select(Side side) const {
  if (directed_) {
    if (side == Side::kUndirected) {
      throw InvalidArgument("directed graph requires side 'in' or 'out'");
    }
    return side == Side::kIn ? in_ : out_;
  }
  if (side != Side::kUndirected) {
    throw InvalidArgument("undirected graph has no in/out side");
  }
  return out_;
}

std::size_t Graph::degree(VertexId v, Side side) const {
  const Csr& csr = select(side);
  check_vertex(v);
  return csr.degree(v);
}

std::span<const VertexId> Graph::neighbors(VertexId v, Side side) const {
  const Csr& csr = select(side);
  check_vertex(v);
  return csr.row(v);
}

std::uint64_t Graph::total_degree() const {
  return directed_ ? edges_.size() : 2 * static_cast<std::uint64_t>(edges_.size());
}

std::size_t Graph::max_degree(Side side) const {
  const Csr& csr = select(side);
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, csr.degree(static_cast<VertexId>(v)));
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto row = out_.row(u);
  return std::find(row.begin(), row.end(), v) != row.end();
}

std::optional<std::string> Graph::check_invariants() const {
  if (out_.offsets.size() != n_ + 1) return "adjacency offsets do not cover all vertices";
  std::unordered_set<std::uint64_t> arcs;
  for (std::size_t u = 0; u < n_; ++u) {
    for (VertexId v : out_.row(static_cast<VertexId>(u))) {
      if (v >= n_) return "neighbor id out of range at vertex " + std::to_string(u);
      if (v == u) return "self-loop at vertex " + std::to_string(u);
      if (!arcs.insert(pair_key(static_cast<VertexId>(u), v)).second) {
        return "parallel edge at vertex " + std::to_string(u);
      }
    }
  }
  if (directed_) {
    if (arcs.size() != edges_.size()) return "edge index length differs from sum of out-degrees";
    std::size_t in_total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      for (VertexId u : in_.row(static_cast<VertexId>(v))) {
        ++in_total;
        if (!arcs.count(pair_key(u, static_cast<VertexId>(v)))) {
          return "in-list of " + std::to_string(v) + " names a missing arc";
        }
      }
    }
    if (in_total != arcs.size()) return "in-lists and out-lists disagree";
    for (const Edge& e : edges_) {
      if (!arcs.count(pair_key(e.u, e.v))) return "edge index names a missing arc";
    }
    return std::nullopt;
  }
  for (std::uint64_t key : arcs) {
    auto u = static_cast<VertexId>(key >> 32);
    auto v = static_cast<VertexId>(key & 0xffffffffu);
    if (!arcs.count(pair_key(v, u))) {
      return "asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v);
    }
  }
  if (arcs.size() != 2 * edges_.size()) return "edge index length differs from half the degree sum";
  std::unordered_set<std::uint64_t> indexed;
  for (const Edge& e : edges_) {
    if (!arcs.count(pair_key(e.u, e.v))) return "edge index names a missing edge";
    if (!indexed.insert(pair_key(std::min(e.u, e.v), std::max(e.u, e.v))).second) {
      return "edge index repeats an edge";
    }
  }
  return std::nullopt;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  const std::size_t n = g.num_vertices();
  if (perm.size() != n) throw InvalidArgument("permutation size differs from vertex count");
  std::vector<char> hit(n, 0);
  for (VertexId p : perm) {
    if (p >= n || hit[p]) throw InvalidArgument("relabel map is not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v]});
  if (g.is_directed()) return Graph::directed(n, edges);
  // Rebuild lists so that each vertex keeps its original neighbor order.
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(static_cast<VertexId>(v))) adj[perm[v]].push_back(perm[w]);
  }
  return Graph::from_adjacency(adj);
}

}  // namespace starcount
