#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/coloured_graph.hpp"

namespace flagcert {

// Text format: a header line "n k", then n lines of n colours separated by
// single spaces with 0 on the diagonal. Blank lines between graphs are ignored.

void write_graph(std::ostream& os, const ColouredGraph& g);
std::string to_text(const ColouredGraph& g);

/// Reads one graph; throws ParseError (with line numbers) or StructureError.
ColouredGraph read_graph(std::istream& is, std::string_view source = "<input>");
ColouredGraph read_graph_file(const std::string& path);

/// Graph blocks separated by blank lines, closed by a "COUNT <n>" line.
void write_graph_list(std::ostream& os, const std::vector<ColouredGraph>& graphs);
std::vector<ColouredGraph> read_graph_list(std::istream& is, std::string_view source = "<input>");

}  // namespace flagcert
