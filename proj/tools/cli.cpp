#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "flagcert/checksum.hpp"
#include "flagcert/density.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/error.hpp"
#include "flagcert/extremal.hpp"
#include "flagcert/formulas.hpp"
#include "flagcert/graph_io.hpp"
#include "flagcert/verify.hpp"
#include "flagcert/version.hpp"
#include "random_flags.hpp"

namespace flagcert::tools {
namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::string header(const std::string& command) {
  return "version=" + std::string(kVersion) + "\ncommand=" + command + "\n";
}

std::string input_line(const std::string& label, const std::string& path) {
  return "input." + label + "=" + path + "\ninput." + label + ".sha256=" + sha256_file(path) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

// "checksum.pinned=match|mismatch" when a "<path>.sha256" file sits next to the input.
std::string pinned_checksum_line(const std::string& path) {
  std::ifstream pin(path + ".sha256");
  if (!pin) return "";
  std::string expected;
  pin >> expected;
  return std::string("checksum.pinned=") + (expected == sha256_file(path) ? "match" : "mismatch") + "\n";
}

const char* colour_name(int c) {
  switch (c) {
    case 1: return "red";
    case 2: return "blue";
    case 3: return "green";
    default: return "colour";
  }
}

}  // namespace

CommandResult cmd_enumerate(int order, int colours, const std::string& out_path) {
  const auto models = enumerate_models(order, colours);
  const auto polya = count_models_polya(order, colours);
  std::ostringstream list;
  write_graph_list(list, models);
  if (!out_path.empty()) write_file(out_path, list.str());
  const bool ok = BigInt(static_cast<unsigned long>(models.size())) == polya;
  std::ostringstream os;
  os << header("enumerate") << "order=" << order << "\ncolours=" << colours << "\nmodels=" << models.size()
     << " polya=" << polya.get_str() << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
  if (out_path.empty()) os << list.str();
  return {ok ? kExitOk : kExitFailed, os.str()};
}

CommandResult cmd_verify(const std::string& cert_path, const std::string& report_path, unsigned threads) {
  const auto cert = load_certificate_file(cert_path);
  const auto report = verify(cert, threads);
  const std::string inputs = input_line("cert", cert_path) + pinned_checksum_line(cert_path);
  if (!report_path.empty()) write_file(report_path, header("verify") + inputs + render_structured(report));
  return {report.verified() ? kExitOk : kExitFailed, header("verify") + inputs + render_text(report)};
}

CommandResult cmd_extremal(int n, int colours, const std::string& out_path) {
  const auto g = build_gex(n, colours);
  const auto triangles = mono_triangles(g).total;
  const auto formula = corollary_value(n);
  if (!out_path.empty()) write_file(out_path, to_text(g));
  std::ostringstream os;
  os << header("extremal") << "n=" << n << "\ntriangles=" << triangles << " formula=" << formula << ' '
     << (static_cast<std::int64_t>(triangles) == formula ? "OK" : "MISMATCH") << '\n';
  if (out_path.empty()) os << to_text(g);
  return {static_cast<std::int64_t>(triangles) == formula ? kExitOk : kExitFailed, os.str()};
}

CommandResult cmd_check_gn(const std::string& graph_path) {
  const auto g = read_graph_file(graph_path);
  const auto result = is_member_gn(g);
  std::ostringstream os;
  os << header("check-gn") << input_line("graph", graph_path) << "n=" << g.order() << '\n';
  os << "member=" << (result.member ? "yes" : "no") << '\n';
  if (!result.complete) os << "search=incomplete\n";
  if (result.partition) {
    os << "clique_colour=" << colour_name(result.partition->colour) << '\n';
    for (std::size_t i = 0; i < result.partition->classes.size(); ++i) {
      os << "class." << i + 1 << '=';
      for (std::size_t j = 0; j < result.partition->classes[i].size(); ++j) {
        os << (j ? "," : "") << result.partition->classes[i][j];
      }
      os << '\n';
    }
    os << "recoloured_edges=" << result.recoloured.size() << '\n';
    for (const auto& [u, v] : result.recoloured) os << "recoloured=" << u << ',' << v << '\n';
  }
  return {result.member ? kExitOk : kExitFailed, os.str()};
}

CommandResult cmd_count(const std::string& graph_path) {
  const auto g = read_graph_file(graph_path);
  const auto t = mono_triangles(g);
  std::ostringstream os;
  os << header("count") << input_line("graph", graph_path) << "n=" << g.order() << '\n';
  for (std::size_t c = 0; c < t.by_colour.size(); ++c) {
    os << colour_name(static_cast<int>(c) + 1) << '=' << t.by_colour[c] << '\n';
  }
  os << "total=" << t.total;
  if (g.order() >= 5) os << " formula=" << corollary_value(g.order());
  os << '\n';
  return {kExitOk, os.str()};
}

CommandResult cmd_brute(int n, int colours) {
  const auto result = brute_min_mono(n, colours);
  std::ostringstream os;
  os << header("brute") << "n=" << n << "\ncolours=" << colours << "\nminimum=" << result.minimum;
  bool ok = true;
  if (colours == 2) {
    const auto formula = goodman(n);
    ok = static_cast<std::int64_t>(result.minimum) == formula;
    os << " formula=" << formula << ' ' << (ok ? "OK" : "MISMATCH");
  }
  os << "\nminimisers=" << result.minimisers.size() << '\n';
  for (std::size_t i = 0; i < result.minimisers.size(); ++i) {
    os << "minimiser=" << result.minimisers[i].hex() << '\n' << to_text(result.representatives[i]);
  }
  return {ok ? kExitOk : kExitFailed, os.str()};
}

CommandResult cmd_goodman(int n) {
  const auto formula = goodman(n);
  std::ostringstream os;
  os << header("goodman") << "n=" << n << '\n';
  if (n <= 7) {
    const auto brute = brute_min_mono(n, 2).minimum;
    const bool ok = static_cast<std::int64_t>(brute) == formula;
    os << "formula=" << formula << " brute=" << brute << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
    return {ok ? kExitOk : kExitFailed, os.str()};
  }
  os << "formula=" << formula << " brute=n/a\n";
  return {kExitOk, os.str()};
}

CommandResult cmd_sdp_export(const std::string& cert_path, const std::string& out_path, unsigned threads) {
  if (out_path.empty()) throw Error("sdp-export needs --out");
  const auto cert = load_certificate_file(cert_path);
  const auto table = coefficient_table(cert, threads);
  export_sdp(table, out_path);
  std::ostringstream os;
  os << header("sdp-export") << input_line("cert", cert_path) << "constraints=" << table.num_models()
     << "\nblocks=" << table.num_blocks() + 1 << "\noutput=" << out_path << '\n';
  return {kExitOk, os.str()};
}

CommandResult cmd_sdp_round(const std::string& solution_path, const std::string& cert_path, const BigInt& max_den,
                            RoundingMode mode, const std::string& out_path, unsigned threads) {
  const auto tmpl = load_certificate_file(cert_path);
  SolutionLayout layout;
  layout.flag_block_dims.clear();
  for (const auto& b : tmpl.blocks) layout.flag_block_dims.push_back(static_cast<int>(b.vectors.size()));
  const auto solution = parse_solution_file(solution_path, layout);
  const auto rounded = round_solution(tmpl, solution, max_den, mode);
  if (!out_path.empty()) {
    std::ostringstream text;
    write_certificate(text, rounded);
    write_file(out_path, text.str());
  }
  const auto report = verify(rounded, threads);
  std::ostringstream os;
  os << header("sdp-round") << input_line("solution", solution_path) << input_line("template", cert_path)
     << "max_den=" << max_den.get_str() << "\nmode=" << (mode == RoundingMode::kGrid ? "grid" : "convergent")
     << "\nsolution.bound=" << solution.bound.to_decimal(12) << '\n'
     << render_text(report);
  return {report.verified() ? kExitOk : kExitFailed, os.str()};
}

CommandResult cmd_properties(std::uint64_t seed, int trials) {
  const auto summary = run_chain_rule_trials(seed, trials);
  std::ostringstream os;
  os << header("properties") << "seed=" << seed << "\nchain_rule.trials=" << summary.trials
     << "\nchain_rule.passed=" << summary.passed << '\n';
  return {summary.passed == summary.trials ? kExitOk : kExitFailed, os.str()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact flag-algebra certificate verifier for monochromatic triangle densities", "flagcert"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int order = 5;
  int colours = 3;
  int n = 11;
  unsigned threads = 1;
  std::uint64_t seed = kDefaultSeed;
  int trials = 100;
  std::string cert_path = FLAGCERT_DEFAULT_CERT;
  std::string out_path;
  std::string input_path;
  std::string max_den_text = "10000000";
  std::string mode_text = "grid";

  auto* enumerate = app.add_subcommand("enumerate", "List 3-coloured (or k-coloured) K_n up to isomorphism");
  enumerate->add_option("--n", order, "Order")->required();
  enumerate->add_option("--k", colours, "Number of colours");
  enumerate->add_option("--out", out_path, "Output graph list");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate exactly");
  verify_cmd->add_option("--cert", cert_path, "Certificate file");
  verify_cmd->add_option("--out", out_path, "Structured report path");
  verify_cmd->add_option("--threads", threads, "Worker threads for the coefficient table");

  auto* extremal = app.add_subcommand("extremal", "Build G_ex(n)");
  extremal->add_option("--n", n, "Order")->required();
  extremal->add_option("--k", colours, "Number of colours");
  extremal->add_option("--out", out_path, "Output graph file");

  auto* check_gn = app.add_subcommand("check-gn", "Test membership in G_n");
  check_gn->add_option("graph", input_path, "Graph file")->required();

  auto* count = app.add_subcommand("count", "Count monochromatic triangles");
  count->add_option("graph", input_path, "Graph file")->required();

  auto* brute = app.add_subcommand("brute", "Exhaustive minimum number of monochromatic triangles");
  brute->add_option("--n", n, "Order")->required();
  brute->add_option("--k", colours, "Number of colours");

  auto* goodman_cmd = app.add_subcommand("goodman", "Goodman's formula against exhaustive search");
  goodman_cmd->add_option("--n", n, "Order")->required();

  auto* sdp_export = app.add_subcommand("sdp-export", "Write the SDP in sparse SDPA format");
  sdp_export->add_option("--cert", cert_path, "Certificate supplying types and flags");
  sdp_export->add_option("--out", out_path, "Problem file")->required();
  sdp_export->add_option("--threads", threads, "Worker threads for the coefficient table");

  auto* sdp_round = app.add_subcommand("sdp-round", "Round a solver solution and verify it");
  sdp_round->add_option("solution", input_path, "Solution file")->required();
  sdp_round->add_option("--cert", cert_path, "Certificate supplying types and flags");
  sdp_round->add_option("--max-den", max_den_text, "Denominator bound");
  sdp_round->add_option("--mode", mode_text, "grid or convergent")->check(CLI::IsMember({"grid", "convergent"}));
  sdp_round->add_option("--out", out_path, "Rounded certificate path");
  sdp_round->add_option("--threads", threads, "Worker threads for the coefficient table");

  auto* properties = app.add_subcommand("properties", "Seeded chain-rule property trials");
  properties->add_option("--seed", seed, "Random seed");
  properties->add_option("--trials", trials, "Number of random triples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    CommandResult result;
    if (*enumerate) {
      result = cmd_enumerate(order, colours, out_path);
    } else if (*verify_cmd) {
      result = cmd_verify(cert_path, out_path, threads);
    } else if (*extremal) {
      result = cmd_extremal(n, colours, out_path);
    } else if (*check_gn) {
      result = cmd_check_gn(input_path);
    } else if (*count) {
      result = cmd_count(input_path);
    } else if (*brute) {
      result = cmd_brute(n, colours);
    } else if (*goodman_cmd) {
      result = cmd_goodman(n);
    } else if (*sdp_export) {
      result = cmd_sdp_export(cert_path, out_path, threads);
    } else if (*sdp_round) {
      BigInt max_den;
      if (max_den.set_str(max_den_text, 10) != 0 || max_den < 1) throw Error("--max-den must be a positive integer");
      const auto mode = mode_text == "grid" ? RoundingMode::kGrid : RoundingMode::kConvergent;
      result = cmd_sdp_round(input_path, cert_path, max_den, mode, out_path, threads);
    } else if (*properties) {
      result = cmd_properties(seed, trials);
    }
    out << result.report;
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace flagcert::tools
