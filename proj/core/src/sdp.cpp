#include "flagcert/sdp.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "flagcert/density.hpp"
#include "flagcert/error.hpp"
#include "flagcert/reconstruct.hpp"

namespace flagcert {
namespace {

bool is_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '"' || line[pos] == '*';
}

// Whitespace tokens, with the brace/comma/paren decoration some writers use removed.
std::vector<std::string> split(const std::string& line) {
  std::string cleaned = line;
  for (char& ch : cleaned) {
    if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ',') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

class LineSource {
 public:
  LineSource(std::istream& is, std::string_view source) : is_(is), source_(source) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (is_comment(line)) continue;
      tokens = split(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail("unexpected end of input, expected " + what, line_no_ + 1);
    return tokens;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t line = 0) const {
    throw ParseError(source_, line ? line : line_no_, 0, message);
  }

  long to_int(const std::string& t) const {
    try {
      std::size_t used = 0;
      const long v = std::stol(t, &used);
      if (used == t.size()) return v;
    } catch (const std::exception&) {
    }
    fail("expected an integer, got '" + t + "'");
  }

  Rational to_rational(const std::string& t) const {
    try {
      return Rational::parse(t);
    } catch (const std::exception&) {
      fail("expected a number, got '" + t + "'");
    }
  }

 private:
  std::istream& is_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::string decimal(const Rational& x, int digits) { return x.is_zero() ? "0" : x.to_decimal(digits); }

}  // namespace

SdpProblem build_sdp(const CoefficientTable& table) {
  SdpProblem p;
  const int m = static_cast<int>(table.num_models());
  const int slack_block = static_cast<int>(table.num_blocks()) + 1;
  const int bound_index = m + 1;
  p.num_constraints = m;
  for (std::size_t r = 0; r < table.num_blocks(); ++r) p.block_sizes.push_back(static_cast<int>(table.block_dim(r)));
  p.block_sizes.push_back(-(m + 1));

  p.entries.push_back({0, slack_block, bound_index, bound_index, Rational(1)});
  for (int k = 0; k < m; ++k) {
    const auto& model = table.models()[static_cast<std::size_t>(k)];
    p.rhs.emplace_back(BigInt(static_cast<unsigned long>(mono_triangles(model).total)), binomial(model.order(), 3));
    for (std::size_t r = 0; r < table.num_blocks(); ++r) {
      const std::size_t d = table.block_dim(r);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
          if (table.count(r, static_cast<std::size_t>(k), i, j) == 0) continue;
          p.entries.push_back({k + 1, static_cast<int>(r) + 1, static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                               table.at(r, static_cast<std::size_t>(k), i, j)});
        }
      }
    }
    p.entries.push_back({k + 1, slack_block, k + 1, k + 1, Rational(1)});
    p.entries.push_back({k + 1, slack_block, bound_index, bound_index, Rational(1)});
  }
  return p;
}

void write_sdp(std::ostream& os, const SdpProblem& problem, int digits) {
  os << "\"flagcert triangle-density SDP: " << problem.num_constraints << " constraints\n";
  os << problem.num_constraints << '\n';
  os << problem.block_sizes.size() << '\n';
  for (std::size_t b = 0; b < problem.block_sizes.size(); ++b) os << (b ? " " : "") << problem.block_sizes[b];
  os << '\n';
  for (std::size_t k = 0; k < problem.rhs.size(); ++k) os << (k ? " " : "") << decimal(problem.rhs[k], digits);
  os << '\n';
  for (const auto& e : problem.entries) {
    os << e.matno << ' ' << e.block << ' ' << e.i << ' ' << e.j << ' ' << decimal(e.value, digits) << '\n';
  }
}

void export_sdp(const CoefficientTable& table, const std::string& path, int digits) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_sdp(out, build_sdp(table), digits);
  if (!out) throw Error("write to '" + path + "' failed");
}

SdpProblem parse_sdp(std::istream& is, std::string_view source) {
  LineSource in(is, source);
  SdpProblem p;
  auto tokens = in.require("constraint count");
  p.num_constraints = static_cast<int>(in.to_int(tokens.at(0)));
  tokens = in.require("block count");
  const long nblocks = in.to_int(tokens.at(0));
  std::vector<std::string> pending;
  while (static_cast<long>(p.block_sizes.size()) < nblocks) {
    if (pending.empty()) pending = in.require("block sizes");
    p.block_sizes.push_back(static_cast<int>(in.to_int(pending.front())));
    pending.erase(pending.begin());
  }
  if (!pending.empty()) in.fail("too many block sizes");
  while (static_cast<int>(p.rhs.size()) < p.num_constraints) {
    if (pending.empty()) pending = in.require("right-hand side");
    p.rhs.push_back(in.to_rational(pending.front()));
    pending.erase(pending.begin());
  }
  if (!pending.empty()) in.fail("too many right-hand side values");
  while (in.next(tokens)) {
    if (tokens.size() != 5) in.fail("entry line needs 5 fields, got " + std::to_string(tokens.size()));
    SdpEntry e;
    e.matno = static_cast<int>(in.to_int(tokens[0]));
    e.block = static_cast<int>(in.to_int(tokens[1]));
    e.i = static_cast<int>(in.to_int(tokens[2]));
    e.j = static_cast<int>(in.to_int(tokens[3]));
    e.value = in.to_rational(tokens[4]);
    if (e.matno < 0 || e.matno > p.num_constraints || e.block < 1 || e.block > nblocks) {
      in.fail("entry refers to a matrix or block that does not exist");
    }
    p.entries.push_back(std::move(e));
  }
  return p;
}

NumericSolution parse_solution(std::istream& is, std::string_view source, const SolutionLayout& layout) {
  LineSource in(is, source);
  auto y = in.require("y vector");
  if (static_cast<int>(y.size()) != layout.num_constraints) {
    in.fail("y vector has " + std::to_string(y.size()) + " entries, expected " + std::to_string(layout.num_constraints));
  }
  for (const auto& t : y) in.to_rational(t);

  const std::size_t nblocks = layout.flag_block_dims.size();
  // Raw entries per block, keyed by (i, j) as given.
  std::vector<std::map<std::pair<int, int>, Rational>> raw(nblocks);
  Rational bound;
  std::size_t primal_entries = 0;
  std::vector<std::string> tokens;
  while (in.next(tokens)) {
    if (tokens.size() != 5) in.fail("entry line needs 5 fields, got " + std::to_string(tokens.size()));
    const long matno = in.to_int(tokens[0]);
    const long block = in.to_int(tokens[1]);
    const long i = in.to_int(tokens[2]);
    const long j = in.to_int(tokens[3]);
    const Rational value = in.to_rational(tokens[4]);
    if (matno != 1 && matno != 2) in.fail("matno must be 1 or 2");
    if (matno != 2) continue;
    ++primal_entries;
    if (block == layout.slack_block()) {
      if (i == layout.bound_index() && j == layout.bound_index()) bound = value;
      continue;
    }
    if (block < 1 || block > static_cast<long>(nblocks)) {
      throw DimensionError("solution entry refers to block " + std::to_string(block) + " outside the layout");
    }
    const long dim = layout.flag_block_dims[static_cast<std::size_t>(block - 1)];
    if (i < 1 || j < 1 || i > dim || j > dim) {
      throw DimensionError("solution entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside block " +
                           std::to_string(block) + " of size " + std::to_string(dim));
    }
    raw[static_cast<std::size_t>(block - 1)][{static_cast<int>(i - 1), static_cast<int>(j - 1)}] = value;
  }
  if (primal_entries == 0) in.fail("no primal (matno 2) entries");

  NumericSolution out;
  out.bound = bound;
  for (std::size_t b = 0; b < nblocks; ++b) {
    const auto dim = static_cast<std::size_t>(layout.flag_block_dims[b]);
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i; j < dim; ++j) {
        const auto upper = raw[b].find({static_cast<int>(i), static_cast<int>(j)});
        const auto lower = raw[b].find({static_cast<int>(j), static_cast<int>(i)});
        Rational v;
        if (upper != raw[b].end() && lower != raw[b].end() && i != j) {
          v = (upper->second + lower->second) / Rational(2);
        } else if (upper != raw[b].end()) {
          v = upper->second;
        } else if (lower != raw[b].end()) {
          v = lower->second;
        }
        m[i][j] = v;
        m[j][i] = v;
      }
    }
    out.blocks.push_back(std::move(m));
  }
  return out;
}

NumericSolution parse_solution_file(const std::string& path, const SolutionLayout& layout) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open solution '" + path + "'");
  return parse_solution(in, path, layout);
}

void write_solution(std::ostream& os, const NumericSolution& solution, const SolutionLayout& layout, int digits) {
  for (int k = 0; k < layout.num_constraints; ++k) os << (k ? " " : "") << '0';
  os << '\n';
  for (std::size_t b = 0; b < solution.blocks.size(); ++b) {
    const auto& m = solution.blocks[b];
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i; j < m.size(); ++j) {
        if (m[i][j].is_zero()) continue;
        os << "2 " << b + 1 << ' ' << i + 1 << ' ' << j + 1 << ' ' << decimal(m[i][j], digits) << '\n';
      }
    }
  }
  os << "2 " << layout.slack_block() << ' ' << layout.bound_index() << ' ' << layout.bound_index() << ' '
     << decimal(solution.bound, digits) << '\n';
}

Certificate round_solution(const Certificate& template_cert, const NumericSolution& solution, const BigInt& max_den,
                           RoundingMode mode) {
  if (max_den < 1) throw DimensionError("max_den must be positive");
  if (solution.blocks.size() != template_cert.blocks.size()) {
    throw DimensionError("solution has " + std::to_string(solution.blocks.size()) + " blocks, template has " +
                         std::to_string(template_cert.blocks.size()));
  }
  Certificate out;
  out.bound = Rational(1, 25);
  for (std::size_t r = 0; r < solution.blocks.size(); ++r) {
    const auto& numeric = solution.blocks[r];
    const auto& tmpl = template_cert.blocks[r];
    if (numeric.size() != tmpl.vectors.size()) {
      throw DimensionError("block " + std::to_string(r + 1) + " has dimension " + std::to_string(numeric.size()) +
                           ", expected " + std::to_string(tmpl.vectors.size()));
    }
    SymMatrix q(numeric.size());
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      if (numeric[i].size() != numeric.size()) throw DimensionError("block " + std::to_string(r + 1) + " is not square");
      for (std::size_t j = i; j < numeric.size(); ++j) {
        // Symmetric by construction; read the upper triangle.
        const Rational& x = numeric[i][j];
        q.set(i, j, mode == RoundingMode::kGrid ? round_to_grid(x, max_den) : rational_reconstruct(x, max_den));
      }
    }
    out.blocks.push_back(make_block(tmpl.type, tmpl.vectors, std::move(q), r + 1));
  }
  return out;
}

}  // namespace flagcert
