#pragma once

#include <iosfwd>
#include <string>

#include "starcount/graph.hpp"
#include "starcount/table.hpp"

namespace starcount {

// Edge-list text: one "u v" pair per line (0-based ids, whitespace separated).
// A "#directed" line marks a digraph and "#vertices N" fixes the vertex count
// (otherwise max id + 1). Other lines starting with '#' and blank lines are
// skipped. Self-loops, repeated edges and junk raise ParseError with the line.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

// Writes the "#directed" (digraphs only) and "#vertices" headers, then the edges.
void write_edge_list(const Graph& graph, std::ostream& out);

// CSV with a header row; every non-empty cell of `column` is a label. Quoted
// fields ("a,b", "say ""hi""") may span lines.
TableColumn parse_csv(std::istream& in, const std::string& column);
TableColumn load_csv(const std::string& path, const std::string& column);

// One-column CSV with header `column`, rows grouped by label.
void write_csv(const TableColumn& table, std::ostream& out, const std::string& column = "label");

}  // namespace starcount
