#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/certificate.hpp"
#include "flagcert/coefficient_table.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// Problem in the sparse SDPA/CSDP layout: maximise tr(C X) subject to
// tr(A_k X) = a_k, X PSD. Blocks 1..10 hold Q^1..Q^10; the last block is
// diagonal and holds one slack per model followed by the bound b, so each
// constraint reads Σ_r <Q^r, A[r][k]> + s_k + b = p(mono triangle, M_k).

/// One "matno blkno i j value" line (all indices 1-based, i <= j).
struct SdpEntry {
  int matno = 0;
  int block = 0;
  int i = 0;
  int j = 0;
  Rational value;

  friend bool operator==(const SdpEntry&, const SdpEntry&) = default;
};

struct SdpProblem {
  int num_constraints = 0;
  /// Negative sizes mark diagonal blocks.
  std::vector<int> block_sizes;
  std::vector<Rational> rhs;
  std::vector<SdpEntry> entries;
};

/// Exact problem data; constraints follow the table's model order (canonical key order).
SdpProblem build_sdp(const CoefficientTable& table);

/// Writes values as decimals with `digits` significant digits.
void write_sdp(std::ostream& os, const SdpProblem& problem, int digits = 40);
void export_sdp(const CoefficientTable& table, const std::string& path, int digits = 40);

/// Parses the problem file; decimals are read exactly. Throws ParseError.
SdpProblem parse_sdp(std::istream& is, std::string_view source = "<input>");

struct SolutionLayout {
  int num_constraints = 792;
  std::vector<int> flag_block_dims = std::vector<int>(10, 27);
  /// Slack block number and the bound's position inside it.
  int slack_block() const { return static_cast<int>(flag_block_dims.size()) + 1; }
  int bound_index() const { return num_constraints + 1; }
};

struct NumericSolution {
  std::vector<std::vector<std::vector<Rational>>> blocks;
  Rational bound;
};

/// Reads solver output: the y vector on the first line, then entry lines
/// "matno blkno i j value"; matno 2 entries form the primal X. Off-diagonal
/// entries given in both triangles are averaged, otherwise mirrored.
/// Throws ParseError naming the line, DimensionError for indices outside the layout.
NumericSolution parse_solution(std::istream& is, std::string_view source = "<input>",
                               const SolutionLayout& layout = {});
NumericSolution parse_solution_file(const std::string& path, const SolutionLayout& layout = {});

/// Writes a solution in the same format (zero y vector, X upper triangles).
void write_solution(std::ostream& os, const NumericSolution& solution, const SolutionLayout& layout = {},
                    int digits = 40);

enum class RoundingMode {
  kGrid,        // nearest multiple of 1/max_den
  kConvergent,  // last continued-fraction convergent with denominator <= max_den
};

/// Rounds every block entry and packages the result with the template's types
/// and flags and the bound 1/25. The output is structurally valid but unverified.
Certificate round_solution(const Certificate& template_cert, const NumericSolution& solution, const BigInt& max_den,
                           RoundingMode mode = RoundingMode::kGrid);

}  // namespace flagcert
