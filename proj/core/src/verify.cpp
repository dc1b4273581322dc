#include "flagcert/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "flagcert/bad_family.hpp"
#include "flagcert/density.hpp"
#include "flagcert/error.hpp"
#include "flagcert/extremal.hpp"

namespace flagcert {

std::map<CanonicalKey, Rational> lambda_vector(const Certificate& cert, const CoefficientTable& table) {
  if (table.num_blocks() != cert.blocks.size()) throw DimensionError("table does not match the certificate");
  std::map<CanonicalKey, Rational> out;
  for (std::size_t k = 0; k < table.num_models(); ++k) {
    const auto& m = table.models()[k];
    Rational lambda(BigInt(static_cast<unsigned long>(mono_triangles(m).total)), binomial(m.order(), 3));
    lambda -= cert.bound;
    for (std::size_t r = 0; r < cert.blocks.size(); ++r) lambda -= table.pair_sum(r, k, cert.blocks[r].q);
    out.emplace(table.keys()[k], std::move(lambda));
  }
  return out;
}

bool VerificationReport::all_psd() const {
  for (const auto& b : blocks) {
    if (!b.verdict.psd) return false;
  }
  return true;
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) {
    if (b.verdict.psd) continue;
    std::ostringstream line;
    line << "psd: block " << b.block << " is not positive semidefinite";
    if (b.verdict.failure) {
      line << " (pivot " << b.verdict.failure->pivot + 1 << ", "
           << (b.verdict.failure->kind == LdlFailureKind::kNegativePivot ? "negative pivot" : "zero pivot with nonzero row")
           << ")";
    }
    out.push_back(line.str());
  }
  for (const auto& key : negative_lambdas) {
    out.push_back("lambda: model " + key.hex() + " has lambda " + lambda.at(key).str() + " < 0");
  }
  for (const auto& v : h_violations) {
    out.push_back("h-condition: bad graph " + v.bad_graph.hex() + " occurs in model " + v.model.hex() +
                  " with lambda " + v.lambda.str());
  }
  return out;
}

VerificationReport verify(const Certificate& cert, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const auto table = coefficient_table(cert, threads);
  auto report = verify(cert, table);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(const Certificate& cert, const CoefficientTable& table) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.bound = cert.bound;
  for (std::size_t r = 0; r < cert.blocks.size(); ++r) report.blocks.push_back({r + 1, psd_check(cert.blocks[r].q)});

  report.lambda = lambda_vector(cert, table);
  bool first = true;
  for (const auto& [key, lambda] : report.lambda) {
    if (first || lambda < report.min_lambda) {
      report.min_lambda = lambda;
      report.argmin_lambda = key;
      first = false;
    }
    if (lambda.is_zero()) ++report.zero_lambdas;
    if (lambda.sign() < 0) report.negative_lambdas.push_back(key);
  }

  std::set<CanonicalKey> bad;
  for (const auto& h : bad_family()) bad.insert(canonical_key(h));
  for (std::size_t k = 0; k < table.num_models(); ++k) {
    const auto& lambda = report.lambda.at(table.keys()[k]);
    if (lambda.sign() > 0) continue;
    for (const auto& [key, count] : induced_counts(table.models()[k], 4)) {
      if (bad.contains(key)) report.h_violations.push_back({key, table.keys()[k], lambda});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "bound: " << report.bound << '\n';
  for (const auto& b : report.blocks) {
    os << "block " << b.block << ": " << (b.verdict.psd ? "PSD" : "NOT PSD") << '\n';
  }
  os << "models: " << report.lambda.size() << '\n';
  os << "min lambda: " << report.min_lambda << " at " << report.argmin_lambda.hex() << '\n';
  os << "zero lambdas: " << report.zero_lambdas << '\n';
  os << "negative lambdas: " << report.negative_lambdas.size() << '\n';
  os << "bad-graph violations: " << report.h_violations.size() << '\n';
  for (const auto& f : report.failures()) os << "FAIL " << f << '\n';
  os << "time: " << report.seconds << " s\n";
  os << "result: " << (report.verified() ? "VERIFIED" : "FAILED") << '\n';
  return os.str();
}

std::string render_structured(const VerificationReport& report) {
  std::ostringstream os;
  os << "bound=" << report.bound << '\n';
  os << "blocks=" << report.blocks.size() << '\n';
  for (const auto& b : report.blocks) os << "block." << b.block << ".psd=" << (b.verdict.psd ? "true" : "false") << '\n';
  os << "models=" << report.lambda.size() << '\n';
  os << "lambda.min=" << report.min_lambda << '\n';
  os << "lambda.argmin=" << report.argmin_lambda.hex() << '\n';
  os << "lambda.zero=" << report.zero_lambdas << '\n';
  os << "lambda.negative=" << report.negative_lambdas.size() << '\n';
  os << "h_condition=" << (report.h_condition() ? "true" : "false") << '\n';
  os << "h_violations=" << report.h_violations.size() << '\n';
  const auto failures = report.failures();
  for (std::size_t i = 0; i < failures.size(); ++i) os << "failure." << i + 1 << '=' << failures[i] << '\n';
  os << "VERDICT " << (report.verified() ? "VERIFIED" : "FAILED") << '\n';
  return os.str();
}

std::vector<ExtremalZeroEntry> extremal_zero_report(const Certificate& cert, const CoefficientTable& table,
                                                    int gex_order) {
  const auto lambda = lambda_vector(cert, table);
  const auto occurring = induced_counts(build_gex(gex_order), 5);
  std::vector<ExtremalZeroEntry> out;
  out.reserve(table.num_models());
  for (const auto& key : table.keys()) out.push_back({key, lambda.at(key), occurring.contains(key)});
  return out;
}

}  // namespace flagcert
