#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "starcount/bigint.hpp"
#include "starcount/graph.hpp"
#include "starcount/rng.hpp"
#include "starcount/table.hpp"

namespace starcount {

// d-regular circulant: i ~ i±1..i±floor(d/2) (mod n), plus i ~ i+n/2 when d
// is odd. Requires n > d >= 1 and n*d even.
Graph gen_circulant_regular(std::size_t n, std::size_t d);

// Like gen_circulant_regular, but when n*d is odd (no d-regular graph exists)
// one vertex is left at degree d-1 and all others have degree d.
Graph gen_near_regular(std::size_t n, std::size_t d);

struct StarHidingOptions {
  // Refuse (instead of leaving one vertex a degree short) when a regular part
  // has odd n*(p-1).
  bool strict_regular = false;
};

// Two graphs on n vertices that agree outside a set S of c+1 vertices,
// c = ceil(s^(1/p)), with no edges between S and the rest. The rest carries a
// (p-1)-regular graph in both. On S the first graph is (p-1)-regular too, so
// it has no p-stars; the second is a star with c leaves, giving C(c, p).
struct StarHidingPair {
  Graph without_stars;
  Graph with_stars;
  std::uint64_t star_size = 0;  // c; S = {0, ..., c}, center 0
  BigInt star_count;            // C(c, p)
};

StarHidingPair gen_star_hiding_pair(std::size_t n, unsigned p, const BigInt& s,
                                    StarHidingOptions options = {});

// Slab table of n1 rows of degree d1 plus n2 isolated vertices.
Graph gen_slab_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2);

// Slab table with n2 extra vertices of degree d2 planted at window offset
// (x, y), both 1-based.
Graph gen_planted_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                                 std::uint64_t d2, std::uint64_t x, std::uint64_t y);

// Directed: every vertex of S = [0, n/2) points to every vertex of
// T = [n/2, n). With a back arc (t, s), t in T and s in S, the graph has
// exactly n paths of length two; without it, none. Missing endpoints are drawn
// from `seed`.
Graph gen_bipartite_backedge(std::size_t n, bool with_backedge, std::optional<VertexId> t = {},
                             std::optional<VertexId> s = {}, std::uint64_t seed = 0);

// Uniform simple graph with exactly m edges.
Graph gen_erdos_renyi(std::size_t n, std::uint64_t m, std::uint64_t seed);

// Star with `star_leaves` leaves centered at 0 (leaves 1..star_leaves) plus a
// perfect matching of `matching_edges` edges on the following vertices.
Graph gen_star_matching(std::size_t n, std::size_t star_leaves, std::size_t matching_edges);

// `hubs` centers (vertices 0..hubs-1) each joined to `hub_degree` distinct
// random non-hub vertices, plus `background_edges` random edges among non-hubs.
Graph gen_hub_graph(std::size_t n, std::size_t hubs, std::size_t hub_degree,
                    std::uint64_t background_edges, std::uint64_t seed);

Graph gen_complete(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_directed_cycle(std::size_t n);

// Complete bipartite digraph: all arcs from [0, a) to [a, a + b).
Graph gen_complete_bipartite_digraph(std::size_t a, std::size_t b);

// Digraph whose vertices all satisfy 1/r <= deg-/deg+ <= r: the union of
// `cycles` random directed Hamiltonian cycles (parallel arcs retried), plus up to
// `extra_arcs` random arcs kept only while both endpoints stay within ratio r.
Graph gen_ratio_bounded_digraph(std::size_t n, std::size_t cycles, std::uint64_t extra_arcs,
                                double r, std::uint64_t seed);

TableColumn gen_table(std::span<const std::uint64_t> counts);

// Uniform random permutation of [0, n).
std::vector<VertexId> random_permutation(std::size_t n, std::uint64_t seed);

// Family name, parameters and seed of a generated instance; round-trips
// through JSON so runs can be reproduced.
struct GeneratorSpec {
  std::string family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;

  nlohmann::ordered_json to_json() const;
  static GeneratorSpec from_json(const nlohmann::json& j);
};

// Families: circulant, near_regular, erdos_renyi, star_matching, hubs,
// complete, path, cycle, directed_cycle, complete_bipartite_digraph,
// ratio_digraph, slab, planted, star_hiding_without, star_hiding_with,
// bipartite_backedge. Unknown family or bad parameters -> InvalidArgument.
Graph generate_graph(const GeneratorSpec& spec);
std::vector<std::string> generator_families();

}  // namespace starcount
