#pragma once

#include <string>
#include <string_view>

namespace flagcert {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Digest of a file's bytes; throws flagcert::Error if it cannot be read.
std::string sha256_file(const std::string& path);

}  // namespace flagcert
