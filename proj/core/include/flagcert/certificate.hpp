#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/flags.hpp"
#include "flagcert/rational.hpp"
#include "flagcert/sym_matrix.hpp"

namespace flagcert {

struct CertificateBlock {
  TypeSigma type;
  std::vector<ColourVector> vectors;  // flag i is vectors[i] over `type`
  std::vector<Flag> flags;
  SymMatrix q;
};

struct Certificate {
  Rational bound;
  std::vector<CertificateBlock> blocks;
};

/// Builds a block from a type, colour vectors and Q, checking that the vectors
/// are distinct, in range, and match Q's dimension. `block_number` (1-based)
/// only labels error messages.
CertificateBlock make_block(const TypeSigma& type, std::vector<ColourVector> vectors, SymMatrix q,
                            std::size_t block_number);

/// Reads the "FLAGCERT 1" text format. Malformed text raises ParseError with
/// line and column; structural problems raise StructureError naming the
/// block, flag or entry.
Certificate load_certificate(std::istream& is, std::string_view source = "<input>");
Certificate load_certificate_file(const std::string& path);

void write_certificate(std::ostream& os, const Certificate& cert);

}  // namespace flagcert
