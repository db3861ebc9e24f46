#include "starcount/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "starcount/errors.hpp"

namespace starcount {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_id(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "'" + token + "' is not a nonnegative integer");
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

// Prefixes the path to parse errors raised while reading a file.
template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  bool directed = false;
  bool saw_edge = false;
  std::optional<std::uint64_t> declared_n;
  std::uint64_t max_id = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text[0] == '#') {
      std::istringstream header(text.substr(1));
      std::string word;
      header >> word;
      if (word == "directed") {
        if (saw_edge) throw ParseError(line, "'#directed' must precede the edges");
        directed = true;
      } else if (word == "vertices") {
        std::string count, extra;
        header >> count >> extra;
        if (count.empty() || !extra.empty()) throw ParseError(line, "expected '#vertices N'");
        declared_n = parse_id(count, line);
      }
      continue;
    }
    std::istringstream fields(text);
    std::string a, b, extra;
    fields >> a >> b >> extra;
    if (b.empty() || !extra.empty()) throw ParseError(line, "expected two vertex ids, got '" + text + "'");
    const auto u = parse_id(a, line);
    const auto v = parse_id(b, line);
    if (u > 0xfffffffeu || v > 0xfffffffeu) throw ParseError(line, "vertex id too large");
    if (u == v) throw ParseError(line, "self-loop at vertex " + a);
    const auto lo = directed ? u : std::min(u, v);
    const auto hi = directed ? v : std::max(u, v);
    if (!seen.insert((lo << 32) | hi).second) {
      throw ParseError(line, std::string(directed ? "repeated arc " : "repeated edge ") + a + " " + b);
    }
    if (declared_n && (u >= *declared_n || v >= *declared_n)) {
      throw ParseError(line, "vertex id outside the declared " + std::to_string(*declared_n) + " vertices");
    }
    max_id = std::max({max_id, u, v});
    saw_edge = true;
    edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  const std::uint64_t n = declared_n ? *declared_n : (saw_edge ? max_id + 1 : 0);
  return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

Graph load_edge_list(const std::string& path) {
  auto in = open_input(path);
  return with_path(path, [&] { return parse_edge_list(in); });
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  if (graph.is_directed()) out << "#directed\n";
  out << "#vertices " << graph.num_vertices() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace {

// Splits one CSV record, reading more lines while a quoted field is open.
// Returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
  fields.clear();
  std::string raw;
  if (!std::getline(in, raw)) return false;
  ++line;
  const std::size_t start_line = line;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i == raw.size()) {
      if (!quoted) break;
      std::string next;
      if (!std::getline(in, next)) throw ParseError(start_line, "unterminated quoted field");
      ++line;
      field += '\n';
      raw = std::move(next);
      i = 0;
      continue;
    }
    const char c = raw[i++];
    if (quoted) {
      if (c == '"') {
        if (i < raw.size() && raw[i] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      if (!trim(field).empty()) throw ParseError(line, "quote inside an unquoted field");
      field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else if (c == '\r' && i == raw.size()) {
      // CRLF line ending
    } else {
      if (was_quoted && c != ' ' && c != '\t') {
        throw ParseError(line, "text after a closing quote");
      }
      if (!was_quoted) field += c;
    }
  }
  fields.push_back(was_quoted ? field : trim(field));
  return true;
}

}  // namespace

TableColumn parse_csv(std::istream& in, const std::string& column) {
  std::vector<std::string> fields;
  std::size_t line = 0;
  if (!read_record(in, fields, line)) throw ParseError(1, "empty CSV (no header row)");
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == column) {
      index = i;
      break;
    }
  }
  if (!index) throw ParseError(1, "no column named '" + column + "' in the header");
  const std::size_t width = fields.size();
  std::vector<std::string> cells;
  while (true) {
    const std::size_t record_line = line + 1;
    if (!read_record(in, fields, line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != width) {
      throw ParseError(record_line, "expected " + std::to_string(width) + " fields, got " +
                                        std::to_string(fields.size()));
    }
    if (!fields[*index].empty()) cells.push_back(std::move(fields[*index]));
  }
  return TableColumn::from_cells(cells);
}

TableColumn load_csv(const std::string& path, const std::string& column) {
  auto in = open_input(path);
  return with_path(path, [&] { return parse_csv(in, column); });
}

void write_csv(const TableColumn& table, std::ostream& out, const std::string& column) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos && s == trim(s)) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  out << quote(column) << '\n';
  for (std::size_t i = 0; i < table.num_labels(); ++i) {
    const std::string cell = quote(table.label(i));
    for (std::uint64_t k = 0; k < table.count(i); ++k) out << cell << '\n';
  }
}

}  // namespace starcount
