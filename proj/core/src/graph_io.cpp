#include "flagcert/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "flagcert/error.hpp"

namespace flagcert {
namespace {

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

std::vector<long> parse_ints(const std::string& line, std::string_view source, std::size_t line_no) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    const std::string token = line.substr(start, pos - start);
    try {
      std::size_t used = 0;
      const long v = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(source), line_no, start + 1, "expected an integer, got '" + token + "'");
    }
  }
  return out;
}

struct LineReader {
  std::istream& is;
  std::string_view source;
  std::size_t line_no = 0;

  bool next(std::string& line) {
    while (std::getline(is, line)) {
      ++line_no;
      if (!is_blank(line)) return true;
    }
    return false;
  }
};

ColouredGraph read_graph_body(LineReader& reader, const std::string& header_line) {
  const auto header = parse_ints(header_line, reader.source, reader.line_no);
  if (header.size() != 2) {
    throw ParseError(std::string(reader.source), reader.line_no, 0, "header must be 'n k'");
  }
  const long n = header[0];
  const long k = header[1];
  if (n < 0 || k < 1 || k > 255) {
    throw ParseError(std::string(reader.source), reader.line_no, 0, "invalid order or colour count");
  }
  std::vector<std::vector<int>> matrix(static_cast<std::size_t>(n));
  std::string line;
  for (long i = 0; i < n; ++i) {
    if (!reader.next(line)) {
      throw ParseError(std::string(reader.source), reader.line_no + 1, 0,
                       "unexpected end of input: expected row " + std::to_string(i + 1) + " of " + std::to_string(n));
    }
    const auto row = parse_ints(line, reader.source, reader.line_no);
    if (static_cast<long>(row.size()) != n) {
      throw ParseError(std::string(reader.source), reader.line_no, 0,
                       "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    for (long v : row) matrix[static_cast<std::size_t>(i)].push_back(static_cast<int>(v));
  }
  try {
    return ColouredGraph::from_matrix(matrix, static_cast<int>(k));
  } catch (const StructureError& e) {
    throw StructureError(std::string(reader.source) + ": " + e.what());
  }
}

}  // namespace

void write_graph(std::ostream& os, const ColouredGraph& g) {
  os << g.order() << ' ' << g.num_colours() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) os << ' ';
      os << static_cast<int>(g.colour(i, j));
    }
    os << '\n';
  }
}

std::string to_text(const ColouredGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

ColouredGraph read_graph(std::istream& is, std::string_view source) {
  LineReader reader{is, source};
  std::string line;
  if (!reader.next(line)) throw ParseError(std::string(source), 1, 0, "empty input");
  return read_graph_body(reader, line);
}

ColouredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in, path);
}

void write_graph_list(std::ostream& os, const std::vector<ColouredGraph>& graphs) {
  for (const auto& g : graphs) {
    write_graph(os, g);
    os << '\n';
  }
  os << "COUNT " << graphs.size() << '\n';
}

std::vector<ColouredGraph> read_graph_list(std::istream& is, std::string_view source) {
  LineReader reader{is, source};
  std::vector<ColouredGraph> out;
  std::string line;
  while (reader.next(line)) {
    if (line.rfind("COUNT", 0) == 0) {
      const auto rest = parse_ints(line.substr(5), source, reader.line_no);
      if (rest.size() != 1 || rest[0] != static_cast<long>(out.size())) {
        throw ParseError(std::string(source), reader.line_no, 0, "COUNT line does not match number of graphs");
      }
      return out;
    }
    out.push_back(read_graph_body(reader, line));
  }
  throw ParseError(std::string(source), reader.line_no, 0, "missing COUNT line");
}

}  // namespace flagcert
