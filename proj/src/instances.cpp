#include "starcount/instances.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "starcount/errors.hpp"
#include "starcount/estimator.hpp"
#include "starcount/ports.hpp"

namespace starcount {
namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

Edge edge(std::size_t u, std::size_t v) {
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

void check_size(std::size_t n) {
  if (n > 0xffffffffu) throw InvalidArgument("too many vertices");
}

// Circulant edges of the given degree on vertices base..base+n-1. When n*d is
// odd the last vertex is left one short.
void append_near_regular(std::vector<Edge>& out, std::size_t base, std::size_t n, std::size_t d) {
  if (d == 0 || n == 0) return;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(edge(base + i, base + (i + k) % n));
  }
  if (d % 2 == 1) {
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) out.push_back(edge(base + i, base + i + half));
  }
}

void check_regular_args(std::size_t n, std::size_t d) {
  check_size(n);
  if (d < 1) throw ConstraintViolation("d >= 1", "d = " + num(d));
  if (n <= d) throw ConstraintViolation("n > d", "n = " + num(n) + ", d = " + num(d));
}

std::uint64_t param_u64(const nlohmann::ordered_json& params, const std::string& key) {
  if (!params.contains(key)) throw InvalidArgument("missing generator parameter '" + key + "'");
  const auto& v = params.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidArgument("generator parameter '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint64_t param_u64_or(const nlohmann::ordered_json& params, const std::string& key,
                           std::uint64_t fallback) {
  return params.contains(key) ? param_u64(params, key) : fallback;
}

double param_double(const nlohmann::ordered_json& params, const std::string& key) {
  if (!params.contains(key) || !params.at(key).is_number()) {
    throw InvalidArgument("generator parameter '" + key + "' must be a number");
  }
  return params.at(key).get<double>();
}

BigInt param_big(const nlohmann::ordered_json& params, const std::string& key) {
  if (!params.contains(key)) throw InvalidArgument("missing generator parameter '" + key + "'");
  const auto& v = params.at(key);
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidArgument("generator parameter '" + key + "' is not an integer");
    }
  }
  return BigInt(param_u64(params, key));
}

}  // namespace

Graph gen_circulant_regular(std::size_t n, std::size_t d) {
  check_regular_args(n, d);
  if ((n * d) % 2 != 0) {
    throw ConstraintViolation("n*d even", "n = " + num(n) + ", d = " + num(d));
  }
  std::vector<Edge> edges;
  append_near_regular(edges, 0, n, d);
  return Graph::undirected(n, edges);
}

Graph gen_near_regular(std::size_t n, std::size_t d) {
  check_regular_args(n, d);
  std::vector<Edge> edges;
  append_near_regular(edges, 0, n, d);
  return Graph::undirected(n, edges);
}

StarHidingPair gen_star_hiding_pair(std::size_t n, unsigned p, const BigInt& s,
                                    StarHidingOptions options) {
  check_size(n);
  if (p < 2) throw InvalidArgument("p must be at least 2");
  const BigInt floor_s = boost::multiprecision::pow(BigInt(p + 1), p);
  if (s <= floor_s) {
    throw ConstraintViolation("s > (p+1)^p", "s = " + s.str() + ", (p+1)^p = " + floor_s.str());
  }
  const BigInt c_big = integer_root_ceil(s, p);
  if (c_big + 1 > n) {
    throw ConstraintViolation("ceil(s^(1/p)) + 1 <= n", "c = " + c_big.str() + ", n = " + num(n));
  }
  const auto c = c_big.convert_to<std::size_t>();
  const std::size_t inside = c + 1;
  const std::size_t outside = n - inside;
  const std::size_t d = p - 1;
  if (outside != 0 && outside <= d) {
    throw ConstraintViolation("|V \\ S| = 0 or |V \\ S| > p-1",
                              "|V \\ S| = " + num(outside) + ", p = " + num(p));
  }
  if (options.strict_regular) {
    if ((inside * d) % 2 != 0) {
      throw ConstraintViolation("|S|*(p-1) even", "|S| = " + num(inside) + ", p = " + num(p));
    }
    if ((outside * d) % 2 != 0) {
      throw ConstraintViolation("|V \\ S|*(p-1) even",
                                "|V \\ S| = " + num(outside) + ", p = " + num(p));
    }
  }

  std::vector<Edge> rest;
  append_near_regular(rest, inside, outside, d);

  std::vector<Edge> first = rest;
  append_near_regular(first, 0, inside, d);
  std::vector<Edge> second = rest;
  for (std::size_t leaf = 1; leaf <= c; ++leaf) second.push_back(edge(0, leaf));

  return StarHidingPair{Graph::undirected(n, first), Graph::undirected(n, second), c,
                        binomial(c, p)};
}

Graph gen_slab_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2) {
  return slab_representation(n1, d1, n2).materialize();
}

Graph gen_planted_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                                 std::uint64_t d2, std::uint64_t x, std::uint64_t y) {
  return planted_representation(n1, d1, n2, d2, x, y).materialize();
}

Graph gen_bipartite_backedge(std::size_t n, bool with_backedge, std::optional<VertexId> t,
                             std::optional<VertexId> s, std::uint64_t seed) {
  check_size(n);
  if (n == 0 || n % 2 != 0) throw ConstraintViolation("n even and positive", "n = " + num(n));
  const std::size_t half = n / 2;
  std::vector<Edge> arcs;
  arcs.reserve(half * half + 1);
  for (std::size_t u = 0; u < half; ++u) {
    for (std::size_t v = half; v < n; ++v) arcs.push_back(edge(u, v));
  }
  if (with_backedge) {
    Rng rng(seed);
    const VertexId tail = t ? *t : static_cast<VertexId>(half + rng.uniform_below(half));
    const VertexId head = s ? *s : static_cast<VertexId>(rng.uniform_below(half));
    if (tail < half || tail >= n) {
      throw ConstraintViolation("t in T", "t = " + num(tail) + ", T = [" + num(half) + ", " +
                                              num(n) + ")");
    }
    if (head >= half) {
      throw ConstraintViolation("s in S", "s = " + num(head) + ", S = [0, " + num(half) + ")");
    }
    arcs.push_back(Edge{tail, head});
  }
  return Graph::directed(n, arcs);
}

Graph gen_erdos_renyi(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  check_size(n);
  const std::uint64_t total = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > total) throw InvalidArgument("m = " + num(m) + " exceeds C(n, 2) = " + num(total));
  Rng rng(seed);
  // Sample whichever of the edge set or its complement is smaller.
  const bool complement = m > total / 2;
  const std::uint64_t draws = complement ? total - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(draws * 2);
  std::vector<Edge> picked;
  picked.reserve(draws);
  while (picked.size() < draws) {
    const auto u = rng.uniform_below(n);
    const auto v = rng.uniform_below(n);
    if (u == v || !chosen.insert(pair_key(u, v)).second) continue;
    picked.push_back(edge(std::min(u, v), std::max(u, v)));
  }
  if (!complement) return Graph::undirected(n, picked);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!chosen.count(pair_key(u, v))) edges.push_back(edge(u, v));
    }
  }
  return Graph::undirected(n, edges);
}

Graph gen_star_matching(std::size_t n, std::size_t star_leaves, std::size_t matching_edges) {
  check_size(n);
  const std::size_t used = (star_leaves > 0 ? star_leaves + 1 : 0) + 2 * matching_edges;
  if (used > n) {
    throw InvalidArgument("star with " + num(star_leaves) + " leaves and " + num(matching_edges) +
                          " matching edges need " + num(used) + " vertices, n = " + num(n));
  }
  std::vector<Edge> edges;
  for (std::size_t leaf = 1; leaf <= star_leaves; ++leaf) edges.push_back(edge(0, leaf));
  const std::size_t base = star_leaves > 0 ? star_leaves + 1 : 0;
  for (std::size_t i = 0; i < matching_edges; ++i) {
    edges.push_back(edge(base + 2 * i, base + 2 * i + 1));
  }
  return Graph::undirected(n, edges);
}

Graph gen_hub_graph(std::size_t n, std::size_t hubs, std::size_t hub_degree,
                    std::uint64_t background_edges, std::uint64_t seed) {
  check_size(n);
  if (hubs > n) throw InvalidArgument("more hubs than vertices");
  const std::size_t others = n - hubs;
  if (hub_degree > others) {
    throw InvalidArgument("hub degree " + num(hub_degree) + " exceeds non-hub count " + num(others));
  }
  const std::uint64_t room = others < 2 ? 0 : static_cast<std::uint64_t>(others) * (others - 1) / 2;
  if (background_edges > room / 2) {
    throw InvalidArgument("background edge count " + num(background_edges) +
                          " exceeds half the non-hub pairs (" + num(room / 2) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> pool(others);
  std::iota(pool.begin(), pool.end(), static_cast<VertexId>(hubs));
  for (std::size_t h = 0; h < hubs; ++h) {
    // Partial Fisher-Yates: the first hub_degree entries are a uniform subset.
    for (std::size_t i = 0; i < hub_degree; ++i) {
      std::swap(pool[i], pool[i + rng.uniform_below(others - i)]);
      edges.push_back(edge(h, pool[i]));
    }
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(background_edges * 2);
  std::uint64_t added = 0;
  while (added < background_edges) {
    const auto u = hubs + rng.uniform_below(others);
    const auto v = hubs + rng.uniform_below(others);
    if (u == v || !seen.insert(pair_key(u, v)).second) continue;
    edges.push_back(edge(std::min(u, v), std::max(u, v)));
    ++added;
  }
  return Graph::undirected(n, edges);
}

Graph gen_complete(std::size_t n) {
  check_size(n);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back(edge(u, v));
  }
  return Graph::undirected(n, edges);
}

Graph gen_path(std::size_t n) {
  check_size(n);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) edges.push_back(edge(u, u + 1));
  return Graph::undirected(n, edges);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  check_size(n);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) edges.push_back(edge(u, (u + 1) % n));
  return Graph::undirected(n, edges);
}

Graph gen_directed_cycle(std::size_t n) {
  if (n < 2) throw InvalidArgument("a directed cycle needs at least 2 vertices");
  check_size(n);
  std::vector<Edge> arcs;
  for (std::size_t u = 0; u < n; ++u) arcs.push_back(edge(u, (u + 1) % n));
  return Graph::directed(n, arcs);
}

Graph gen_complete_bipartite_digraph(std::size_t a, std::size_t b) {
  check_size(a + b);
  std::vector<Edge> arcs;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) arcs.push_back(edge(u, v));
  }
  return Graph::directed(a + b, arcs);
}

Graph gen_ratio_bounded_digraph(std::size_t n, std::size_t cycles, std::uint64_t extra_arcs,
                                double r, std::uint64_t seed) {
  check_size(n);
  if (n < 3) throw InvalidArgument("ratio-bounded digraph needs n >= 3");
  if (cycles < 1) throw InvalidArgument("need at least one base cycle");
  if (cycles > (n - 1) / 2) throw InvalidArgument("too many base cycles for n = " + num(n));
  if (!(r >= 1.0)) throw InvalidArgument("ratio bound r must be >= 1");
  Rng rng(seed);
  std::unordered_set<std::uint64_t> arcs;
  std::vector<Edge> out;
  std::vector<std::uint64_t> in_deg(n, 0), out_deg(n, 0);
  auto key = [](std::uint64_t u, std::uint64_t v) { return (u << 32) | v; };
  auto clashes = [&](std::uint64_t u, std::uint64_t v) {
    return arcs.count(key(u, v)) || arcs.count(key(v, u));
  };

  std::vector<VertexId> order(n);
  for (std::size_t c = 0; c < cycles; ++c) {
    // Retry the permutation until the cycle avoids earlier arcs both ways.
    for (int attempt = 0;; ++attempt) {
      if (attempt == 1000) throw InvalidArgument("could not place base cycles; lower the count");
      std::iota(order.begin(), order.end(), VertexId{0});
      std::shuffle(order.begin(), order.end(), rng);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = !clashes(order[i], order[(i + 1) % n]);
      if (!ok) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const VertexId u = order[i];
        const VertexId v = order[(i + 1) % n];
        arcs.insert(key(u, v));
        out.push_back(Edge{u, v});
        ++out_deg[u];
        ++in_deg[v];
      }
      break;
    }
  }
  const std::uint64_t tries = extra_arcs * 20 + 100;
  std::uint64_t added = 0;
  for (std::uint64_t attempt = 0; attempt < tries && added < extra_arcs; ++attempt) {
    const auto u = rng.uniform_below(n);
    const auto v = rng.uniform_below(n);
    if (u == v || arcs.count(key(u, v))) continue;
    if (static_cast<double>(out_deg[u] + 1) > r * static_cast<double>(in_deg[u])) continue;
    if (static_cast<double>(in_deg[v] + 1) > r * static_cast<double>(out_deg[v])) continue;
    arcs.insert(key(u, v));
    out.push_back(edge(u, v));
    ++out_deg[u];
    ++in_deg[v];
    ++added;
  }
  return Graph::directed(n, out);
}

TableColumn gen_table(std::span<const std::uint64_t> counts) { return TableColumn::from_counts(counts); }

std::vector<VertexId> random_permutation(std::size_t n, std::uint64_t seed) {
  check_size(n);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
  return perm;
}

nlohmann::ordered_json GeneratorSpec::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["params"] = params;
  j["seed"] = seed;
  return j;
}

GeneratorSpec GeneratorSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("generator spec must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) {
    throw InvalidArgument("generator spec needs a string 'family'");
  }
  GeneratorSpec spec;
  spec.family = j.at("family").get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw InvalidArgument("'params' must be an object");
    spec.params = nlohmann::ordered_json::parse(j.at("params").dump());
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() &&
        !(j.at("seed").is_number_integer() && j.at("seed").get<std::int64_t>() >= 0)) {
      throw InvalidArgument("'seed' must be a nonnegative integer");
    }
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  return spec;
}

std::vector<std::string> generator_families() {
  return {"circulant",     "near_regular",      "erdos_renyi",
          "star_matching", "hubs",              "complete",
          "path",          "cycle",             "directed_cycle",
          "complete_bipartite_digraph",         "ratio_digraph",
          "slab",          "planted",           "star_hiding_without",
          "star_hiding_with",                   "bipartite_backedge"};
}

Graph generate_graph(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  const auto& f = spec.family;
  if (f == "circulant") return gen_circulant_regular(param_u64(p, "n"), param_u64(p, "d"));
  if (f == "near_regular") return gen_near_regular(param_u64(p, "n"), param_u64(p, "d"));
  if (f == "erdos_renyi") return gen_erdos_renyi(param_u64(p, "n"), param_u64(p, "m"), spec.seed);
  if (f == "star_matching") {
    return gen_star_matching(param_u64(p, "n"), param_u64(p, "star"), param_u64_or(p, "matching", 0));
  }
  if (f == "hubs") {
    return gen_hub_graph(param_u64(p, "n"), param_u64(p, "hubs"), param_u64(p, "hub_degree"),
                         param_u64_or(p, "background", 0), spec.seed);
  }
  if (f == "complete") return gen_complete(param_u64(p, "n"));
  if (f == "path") return gen_path(param_u64(p, "n"));
  if (f == "cycle") return gen_cycle(param_u64(p, "n"));
  if (f == "directed_cycle") return gen_directed_cycle(param_u64(p, "n"));
  if (f == "complete_bipartite_digraph") {
    return gen_complete_bipartite_digraph(param_u64(p, "a"), param_u64(p, "b"));
  }
  if (f == "ratio_digraph") {
    return gen_ratio_bounded_digraph(param_u64(p, "n"), param_u64_or(p, "cycles", 1),
                                     param_u64_or(p, "extra", 0), param_double(p, "r"), spec.seed);
  }
  if (f == "slab") return gen_slab_representation(param_u64(p, "n1"), param_u64(p, "d1"), param_u64(p, "n2"));
  if (f == "planted") {
    return gen_planted_representation(param_u64(p, "n1"), param_u64(p, "d1"), param_u64(p, "n2"),
                                      param_u64(p, "d2"), param_u64(p, "x"), param_u64(p, "y"));
  }
  if (f == "star_hiding_without" || f == "star_hiding_with") {
    StarHidingOptions options;
    if (p.contains("strict")) options.strict_regular = p.at("strict").get<bool>();
    auto pair = gen_star_hiding_pair(param_u64(p, "n"), static_cast<unsigned>(param_u64(p, "p")),
                                     param_big(p, "s"), options);
    return f == "star_hiding_with" ? std::move(pair.with_stars) : std::move(pair.without_stars);
  }
  if (f == "bipartite_backedge") {
    std::optional<VertexId> t, s;
    if (p.contains("t")) t = static_cast<VertexId>(param_u64(p, "t"));
    if (p.contains("s")) s = static_cast<VertexId>(param_u64(p, "s"));
    const bool back = p.contains("backedge") ? p.at("backedge").get<bool>() : true;
    return gen_bipartite_backedge(param_u64(p, "n"), back, t, s, spec.seed);
  }
  throw InvalidArgument("unknown generator family '" + f + "'");
}

}  // namespace starcount
