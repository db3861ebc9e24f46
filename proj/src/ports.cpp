#include "starcount/ports.hpp"

#include <algorithm>
#include <unordered_set>

#include "starcount/errors.hpp"
#include "starcount/estimator.hpp"

namespace starcount {
namespace {

std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

void check_slab_params(std::uint64_t n1, std::uint64_t d1) {
  if (d1 % 2 != 0) throw ConstraintViolation("d1 even", "d1 = " + num(d1));
  if (d1 >= n1) throw ConstraintViolation("d1 < n1", "d1 = " + num(d1) + ", n1 = " + num(n1));
}

std::vector<std::uint32_t> row_degrees(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                                       std::uint64_t d2) {
  if (n1 + n2 > 0xffffffffu) throw InvalidArgument("too many vertices");
  std::vector<std::uint32_t> degrees(n1 + n2, static_cast<std::uint32_t>(d2));
  std::fill(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(n1),
            static_cast<std::uint32_t>(d1));
  return degrees;
}

Port cell(std::uint64_t row, std::uint64_t column) {
  return Port{static_cast<VertexId>(row), static_cast<std::uint32_t>(column)};
}

}  // namespace

PortRepresentation::PortRepresentation(std::vector<std::uint32_t> degrees) {
  offsets_.assign(degrees.size() + 1, 0);
  for (std::size_t v = 0; v < degrees.size(); ++v) offsets_[v + 1] = offsets_[v] + degrees[v];
  mate_.assign(offsets_.back(), kUnmatched);
}

std::uint32_t PortRepresentation::degree(VertexId v) const {
  if (v >= num_vertices()) throw InvalidArgument("unknown vertex id " + num(v));
  return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

std::uint64_t PortRepresentation::index(Port p) const {
  if (p.slot >= degree(p.vertex)) {
    throw InvalidArgument("port (" + num(p.vertex) + ", " + num(p.slot) + ") does not exist");
  }
  return offsets_[p.vertex] + p.slot;
}

Port PortRepresentation::port_at(std::uint64_t i) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  auto v = static_cast<std::uint64_t>(it - offsets_.begin()) - 1;
  return Port{static_cast<VertexId>(v), static_cast<std::uint32_t>(i - offsets_[v])};
}

void PortRepresentation::match(Port a, Port b) {
  const auto ia = index(a);
  const auto ib = index(b);
  if (ia == ib) throw InvalidArgument("cannot match a port with itself");
  if (mate_[ia] != kUnmatched || mate_[ib] != kUnmatched) {
    throw InvalidArgument("port (" + num(a.vertex) + ", " + num(a.slot) + ") or (" +
                          num(b.vertex) + ", " + num(b.slot) + ") is already matched");
  }
  mate_[ia] = ib;
  mate_[ib] = ia;
}

std::optional<Port> PortRepresentation::partner(Port p) const {
  const auto m = mate_[index(p)];
  if (m == kUnmatched) return std::nullopt;
  return port_at(m);
}

bool PortRepresentation::complete() const {
  return std::none_of(mate_.begin(), mate_.end(), [](auto m) { return m == kUnmatched; });
}

std::optional<std::string> PortRepresentation::check_invariants() const {
  std::unordered_set<std::uint64_t> pairs;
  for (std::uint64_t i = 0; i < mate_.size(); ++i) {
    const auto m = mate_[i];
    const Port here = port_at(i);
    const std::string where = "port (" + num(here.vertex) + ", " + num(here.slot) + ")";
    if (m == kUnmatched) return where + " is unmatched";
    if (m == i) return where + " is matched to itself";
    if (m >= mate_.size() || mate_[m] != i) return where + ": matching is not an involution";
    const Port there = port_at(m);
    if (there.vertex == here.vertex) return where + " forms a self-loop";
    if (i < m && !pairs.insert(pair_key(here.vertex, there.vertex)).second) {
      return "parallel edge between " + num(here.vertex) + " and " + num(there.vertex);
    }
  }
  return std::nullopt;
}

Graph PortRepresentation::materialize() const {
  if (auto problem = check_invariants()) throw InvalidArgument(*problem);
  std::vector<std::vector<VertexId>> adj(num_vertices());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    adj[v].reserve(offsets_[v + 1] - offsets_[v]);
    for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) adj[v].push_back(port_at(mate_[i]).vertex);
  }
  return Graph::from_adjacency(adj);
}

void validate_planted_params(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                             std::uint64_t d2) {
  const std::string values =
      "n1 = " + num(n1) + ", d1 = " + num(d1) + ", n2 = " + num(n2) + ", d2 = " + num(d2);
  if (n1 == 0 || d1 == 0 || n2 == 0 || d2 == 0) throw ConstraintViolation("positive", values);
  if (d1 % 2 != 0) throw ConstraintViolation("d1 even", values);
  if (n2 % 2 != 0) throw ConstraintViolation("n2 even", values);
  if (n2 > d1) throw ConstraintViolation("n2 <= d1", values);
  if (d1 > 2 * d2) throw ConstraintViolation("d1 <= 2*d2", values);
  if (d1 + 2 * d2 >= n1) throw ConstraintViolation("d1 + 2*d2 < n1", values);
}

PortRepresentation slab_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2) {
  check_slab_params(n1, d1);
  PortRepresentation rep(row_degrees(n1, d1, n2, 0));
  for (std::uint64_t j = 1; j <= d1 / 2; ++j) {
    for (std::uint64_t i = 0; i < n1; ++i) rep.match(cell(i, 2 * j - 2), cell((i + j) % n1, 2 * j - 1));
  }
  return rep;
}

PortRepresentation planted_representation(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2,
                                          std::uint64_t d2, std::uint64_t x, std::uint64_t y) {
  validate_planted_params(n1, d1, n2, d2);
  if (x < 1 || x > n1) throw ConstraintViolation("1 <= x <= n1", "x = " + num(x));
  if (y < 1 || y > d1 / 2) throw ConstraintViolation("1 <= y <= d1/2", "y = " + num(y));
  PortRepresentation rep(row_degrees(n1, d1, n2, d2));
  const std::uint64_t top = x - 1;
  const std::uint64_t left = 2 * y - 2;

  // Slabs whose columns lie in the window; the window starts on an even
  // column and spans an even number of columns, so slabs are covered whole.
  std::vector<char> covered(d1 / 2, 0);
  for (std::uint64_t b = 0; b < n2; b += 2) covered[((left + b) % d1) / 2] = 1;

  for (std::uint64_t j = 1; j <= d1 / 2; ++j) {
    const std::uint64_t lc = 2 * j - 2;
    const std::uint64_t rc = 2 * j - 1;
    if (!covered[j - 1]) {
      for (std::uint64_t i = 0; i < n1; ++i) rep.match(cell(i, lc), cell((i + j) % n1, rc));
      continue;
    }
    // Rows outside the window, in cyclic order starting just below it. Shifting
    // by j along this sequence is distance j, or j + d2 when it skips the window.
    const std::uint64_t free_rows = n1 - d2;
    for (std::uint64_t t = 0; t < free_rows; ++t) {
      const std::uint64_t row = (top + d2 + t) % n1;
      const std::uint64_t mate = (top + d2 + (t + j) % free_rows) % n1;
      rep.match(cell(row, lc), cell(mate, rc));
    }
  }
  // Block cell (i, j) <-> window cell (j, i).
  for (std::uint64_t i = 0; i < n2; ++i) {
    for (std::uint64_t j = 0; j < d2; ++j) {
      rep.match(cell(n1 + i, j), cell((top + j) % n1, (left + i) % d1));
    }
  }
  return rep;
}

bool in_extended_window(std::uint64_t n1, std::uint64_t d1, std::uint64_t n2, std::uint64_t d2,
                        std::uint64_t x, std::uint64_t y, std::uint64_t row, std::uint64_t column) {
  const std::uint64_t left = 2 * y - 2;
  const std::uint64_t col_offset = (column + d1 - left % d1) % d1;
  if (col_offset >= n2) return false;
  const std::uint64_t start = (x - 1 + n1 - (d1 / 2) % n1) % n1;
  const std::uint64_t row_offset = (row + n1 - start) % n1;
  return row_offset < d2 + d1;
}

LowerBoundParams lower_bound_params(std::uint64_t n, unsigned p, const BigInt& s, StarRange range) {
  if (p < 2) throw InvalidArgument("p must be at least 2");
  if (s <= 0) throw InvalidArgument("target star count must be positive");
  const BigInt n_pow = boost::multiprecision::pow(BigInt(n), p);
  const std::string at = "n = " + num(n) + ", p = " + num(p) + ", s = " + s.str();

  auto even_at_least = [](BigInt v) {
    if (v < 2) v = 2;
    if (v % 2 != 0) v += 1;
    return v;
  };
  auto to_u64 = [&](const BigInt& v) {
    if (!fits_u64(v)) throw ConstraintViolation("feasible scale", at);
    return v.convert_to<std::uint64_t>();
  };

  LowerBoundParams out;
  // d1 ~ (s/n)^(1/p), at least p so the base family has stars at all.
  BigInt d1 = even_at_least(integer_root_ceil(s / n, p));
  if (d1 < p) d1 = even_at_least(BigInt(p));
  out.d1 = to_u64(d1);

  if (range == StarRange::kMedium) {
    if (s > n_pow) throw ConstraintViolation("s <= n^p", at);
    out.n2 = 2;
    if (n <= out.n2) throw ConstraintViolation("n > n2", at);
    out.n1 = n - out.n2;
    out.d2 = std::max<std::uint64_t>(to_u64(integer_root_ceil(s, p)), out.d1 / 2);
    if (out.d1 + 2 * out.d2 >= out.n1) {
      // Shrink d2 toward its floor d1/2 to fit d1 + 2*d2 < n1.
      const std::uint64_t room = out.n1 > out.d1 ? (out.n1 - out.d1 - 1) / 2 : 0;
      out.d2 = std::max(room, out.d1 / 2);
    }
  } else {
    if (s < n_pow) throw ConstraintViolation("s >= n^p", at);
    BigInt n2 = even_at_least(s / n_pow);
    if (n2 > d1) n2 = d1;
    out.n2 = to_u64(n2);
    if (n <= out.n2) throw ConstraintViolation("n > n2", at);
    out.n1 = n - out.n2;
    if (out.n1 <= out.d1 + 2) throw ConstraintViolation("d1 + 2*d2 < n1", at);
    out.d2 = (out.n1 - out.d1 - 1) / 2;
  }
  validate_planted_params(out.n1, out.d1, out.n2, out.d2);
  out.s1 = BigInt(out.n1) * binomial(out.d1, p);
  out.s2 = out.s1 + BigInt(out.n2) * binomial(out.d2, p);
  if (out.s2 <= out.s1) {
    throw ConstraintViolation("s2 > s1", at + " gives s1 = s2 = " + out.s1.str());
  }
  return out;
}

std::uint64_t shared_edge_count(const Graph& a, const Graph& b) {
  if (a.is_directed() || b.is_directed()) throw InvalidArgument("shared edges need undirected graphs");
  std::unordered_set<std::uint64_t> in_a;
  in_a.reserve(a.num_edges() * 2);
  for (const Edge& e : a.edges()) in_a.insert(pair_key(e.u, e.v));
  std::uint64_t shared = 0;
  for (const Edge& e : b.edges()) shared += in_a.count(pair_key(e.u, e.v));
  return shared;
}

}  // namespace starcount
