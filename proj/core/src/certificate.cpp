#include "flagcert/certificate.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "flagcert/error.hpp"

namespace flagcert {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

class Reader {
 public:
  Reader(std::istream& is, std::string_view source) : is_(is), source_(source) {}

  // Next non-blank, non-comment line as tokens; empty at end of input.
  std::vector<Token> next() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      auto tokens = tokenize(line);
      if (!tokens.empty() && tokens.front().text[0] != '#') return tokens;
    }
    ++line_no_;
    return {};
  }

  std::vector<Token> expect_line(const std::string& what) {
    auto tokens = next();
    if (tokens.empty()) fail(0, "unexpected end of input, expected " + what);
    return tokens;
  }

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(source_, line_no_, column, message);
  }

  long parse_int(const Token& t) const {
    try {
      std::size_t used = 0;
      const long v = std::stol(t.text, &used);
      if (used == t.text.size()) return v;
    } catch (const std::exception&) {
    }
    fail(t.column, "expected an integer, got '" + t.text + "'");
  }

  Rational parse_rational(const Token& t) const {
    try {
      return Rational::parse(t.text);
    } catch (const std::exception&) {
      fail(t.column, "expected a rational, got '" + t.text + "'");
    }
  }

  void expect_keyword(const std::vector<Token>& tokens, const std::string& keyword, std::size_t arity) const {
    if (tokens.front().text != keyword) {
      fail(tokens.front().column, "expected '" + keyword + "', got '" + tokens.front().text + "'");
    }
    if (tokens.size() != arity + 1) {
      fail(0, "'" + keyword + "' takes " + std::to_string(arity) + " argument(s)");
    }
  }

  void expect_count(const std::vector<Token>& tokens, std::size_t n, const std::string& what) const {
    if (tokens.size() != n) {
      fail(0, "expected " + std::to_string(n) + " " + what + ", got " + std::to_string(tokens.size()));
    }
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& is_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::string block_label(std::size_t block) { return "block " + std::to_string(block); }

}  // namespace

CertificateBlock make_block(const TypeSigma& type, std::vector<ColourVector> vectors, SymMatrix q,
                            std::size_t block_number) {
  if (type.size() != 3) throw StructureError(block_label(block_number) + ": type must have 3 vertices");
  if (q.dim() != vectors.size()) {
    throw StructureError(block_label(block_number) + ": Q is " + std::to_string(q.dim()) + "x" +
                         std::to_string(q.dim()) + " but there are " + std::to_string(vectors.size()) + " flags");
  }
  CertificateBlock block{type, std::move(vectors), {}, std::move(q)};
  std::set<ColourVector> seen;
  for (std::size_t i = 0; i < block.vectors.size(); ++i) {
    const auto& v = block.vectors[i];
    for (Colour c : v) {
      if (c < 1 || c > type.graph().num_colours()) {
        throw StructureError(block_label(block_number) + " flag " + std::to_string(i + 1) + ": colour " +
                             std::to_string(c) + " outside 1.." + std::to_string(type.graph().num_colours()));
      }
    }
    // Only the fourth vertex is unlabelled, so distinct vectors are distinct classes.
    if (!seen.insert(v).second) {
      throw StructureError(block_label(block_number) + " flag " + std::to_string(i + 1) +
                           ": duplicates an earlier flag");
    }
    block.flags.push_back(flag_from_vector(type, v));
  }
  return block;
}

Certificate load_certificate(std::istream& is, std::string_view source) {
  Reader reader(is, source);
  auto header = reader.expect_line("header");
  reader.expect_keyword(header, "FLAGCERT", 1);
  if (header[1].text != "1") reader.fail(header[1].column, "unsupported format version '" + header[1].text + "'");

  auto bound_line = reader.expect_line("BOUND");
  reader.expect_keyword(bound_line, "BOUND", 1);
  Certificate cert;
  cert.bound = reader.parse_rational(bound_line[1]);

  for (auto tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
    const std::size_t number = cert.blocks.size() + 1;
    reader.expect_keyword(tokens, "TYPE", 1);
    if (reader.parse_int(tokens[1]) != static_cast<long>(number)) {
      reader.fail(tokens[1].column, "expected TYPE " + std::to_string(number));
    }
    std::vector<std::vector<int>> matrix;
    for (int i = 0; i < 3; ++i) {
      auto row = reader.expect_line("type row");
      reader.expect_count(row, 3, "type entries");
      matrix.emplace_back();
      for (const auto& t : row) matrix.back().push_back(static_cast<int>(reader.parse_int(t)));
    }
    TypeSigma type;
    try {
      type = TypeSigma(ColouredGraph::from_matrix(matrix));
    } catch (const StructureError& e) {
      throw StructureError(block_label(number) + " type: " + e.what());
    }

    auto flags_line = reader.expect_line("FLAGS");
    reader.expect_keyword(flags_line, "FLAGS", 1);
    const long num_flags = reader.parse_int(flags_line[1]);
    if (num_flags < 1) reader.fail(flags_line[1].column, "flag count must be positive");
    std::vector<ColourVector> vectors;
    for (long i = 0; i < num_flags; ++i) {
      auto row = reader.expect_line("flag vector");
      reader.expect_count(row, 3, "flag colours");
      ColourVector v{};
      for (std::size_t j = 0; j < 3; ++j) {
        const long c = reader.parse_int(row[j]);
        if (c < 1 || c > 3) {
          throw StructureError(block_label(number) + " flag " + std::to_string(i + 1) + ": colour " +
                               std::to_string(c) + " outside 1..3");
        }
        v[j] = static_cast<Colour>(c);
      }
      vectors.push_back(v);
    }

    auto q_line = reader.expect_line("Q");
    reader.expect_keyword(q_line, "Q", 1);
    if (reader.parse_int(q_line[1]) != num_flags) {
      reader.fail(q_line[1].column, "Q dimension must equal the flag count " + std::to_string(num_flags));
    }
    std::vector<std::vector<Rational>> rows;
    for (long i = 0; i < num_flags; ++i) {
      auto row = reader.expect_line("Q row");
      reader.expect_count(row, static_cast<std::size_t>(num_flags), "Q entries");
      rows.emplace_back();
      for (const auto& t : row) rows.back().push_back(reader.parse_rational(t));
    }
    SymMatrix q;
    try {
      q = SymMatrix::from_rows(rows);
    } catch (const StructureError& e) {
      throw StructureError(block_label(number) + " Q: " + e.what());
    }
    cert.blocks.push_back(make_block(type, std::move(vectors), std::move(q), number));
  }
  if (cert.blocks.empty()) throw ParseError(std::string(source), reader.line(), 0, "certificate has no blocks");
  return cert;
}

Certificate load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open certificate '" + path + "'");
  return load_certificate(in, path);
}

void write_certificate(std::ostream& os, const Certificate& cert) {
  os << "FLAGCERT 1\n";
  os << "BOUND " << cert.bound << '\n';
  for (std::size_t r = 0; r < cert.blocks.size(); ++r) {
    const auto& block = cert.blocks[r];
    os << "TYPE " << r + 1 << '\n';
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) os << (j ? " " : "") << static_cast<int>(block.type.graph().colour(i, j));
      os << '\n';
    }
    os << "FLAGS " << block.vectors.size() << '\n';
    for (const auto& v : block.vectors) {
      os << static_cast<int>(v[0]) << ' ' << static_cast<int>(v[1]) << ' ' << static_cast<int>(v[2]) << '\n';
    }
    os << "Q " << block.q.dim() << '\n';
    for (std::size_t i = 0; i < block.q.dim(); ++i) {
      for (std::size_t j = 0; j < block.q.dim(); ++j) os << (j ? " " : "") << block.q(i, j);
      os << '\n';
    }
  }
}

}  // namespace flagcert
