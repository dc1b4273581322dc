#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "flagcert/rational.hpp"
#include "flagcert/sdp.hpp"

namespace flagcert::tools {

/// Exit code 0 iff the command's core assertion held; the report is what the
/// command prints.
struct CommandResult {
  int exit_code = 0;
  std::string report;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitError = 2;

CommandResult cmd_enumerate(int order, int colours, const std::string& out_path);
CommandResult cmd_verify(const std::string& cert_path, const std::string& report_path, unsigned threads);
CommandResult cmd_extremal(int n, int colours, const std::string& out_path);
CommandResult cmd_check_gn(const std::string& graph_path);
CommandResult cmd_count(const std::string& graph_path);
CommandResult cmd_brute(int n, int colours);
CommandResult cmd_goodman(int n);
CommandResult cmd_sdp_export(const std::string& cert_path, const std::string& out_path, unsigned threads);
CommandResult cmd_sdp_round(const std::string& solution_path, const std::string& cert_path, const BigInt& max_den,
                            RoundingMode mode, const std::string& out_path, unsigned threads);
CommandResult cmd_properties(std::uint64_t seed, int trials);

/// Parses arguments, dispatches, prints the report; I/O and parse failures exit 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagcert::tools
