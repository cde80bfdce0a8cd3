#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kummer/identity.hpp"

namespace kummer::cli {

enum class Command { Verify, Sweep, Eval, Forensics };
enum class Format { Json, Csv };

/// One case as text. Cases are kept unparsed so they can be re-read at a
/// different precision (the forensics oracle runs 20 digits higher).
struct CaseText {
  std::string theorem = "T21";
  std::string rho = "0.5";
  long i = 0;
  std::string x = "0.25";
  std::string delta = "const:1";
  std::string mode = "corrected";

  friend bool operator==(const CaseText&, const CaseText&) = default;
};

struct RunConfig {
  Command command = Command::Verify;
  std::vector<CaseText> cases;
  /// Sweep only: path of the JSON grid file.
  std::string grid_path;
  std::optional<int> digits;
  std::optional<int> max_terms;
  Format format = Format::Json;
  /// Empty means standard output.
  std::string output_path;
  /// Forensics only: restrict to these rows (kst2, T22, T23, C32) and
  /// optionally override Delta for the rows that have one.
  std::vector<std::string> only;
  std::optional<std::string> delta_override;
};

/// Exit codes.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;

/// 2 when `verdicts` is empty or every entry is DomainError; otherwise,
/// ignoring DomainError rows: 1 if any Fail, else 3 if any Inconclusive, else 0.
int aggregate_exit_code(const std::vector<Verdict>& verdicts);

PrecisionContext context_for(const RunConfig& config, int default_digits = 50);

/// Parses a CaseText at the context's precision. Throws ParseError or
/// ConfigError on malformed fields.
IdentityCase parse_case(const CaseText& text, const PrecisionContext& ctx);

/// Grid file contents:
///   {"theorems": [...], "rho": [...], "i": [...], "x": [...], "delta": [...],
///    "mode": "corrected", "digits": 50, "max_terms": 400}
/// Scalars may be JSON strings or numbers. Expansion order is theorem, i,
/// rho, x, delta; values are canonicalized at the context's precision and
/// duplicates (including those created by normalization, e.g. i for C31)
/// are dropped. Throws ConfigError on a malformed grid.
std::vector<CaseText> expand_grid(const nlohmann::json& grid, const PrecisionContext& ctx);

/// Grid-level digits / max_terms, if present.
std::optional<int> grid_digits(const nlohmann::json& grid);
std::optional<int> grid_max_terms(const nlohmann::json& grid);

nlohmann::ordered_json report_to_json(const VerificationReport& report,
                                      const PrecisionContext& ctx);

/// CSV header plus one row per report:
/// theorem,rho,i,x,delta,lhs,rhs,rel_error,verdict
std::string reports_to_csv(const std::vector<VerificationReport>& reports,
                           const PrecisionContext& ctx);

struct ForensicsRow {
  std::string misprint;
  std::string description;
  Scalar as_printed;
  Scalar corrected;
  Scalar oracle;
  Real as_printed_rel_error;
  Real corrected_rel_error;
  /// "as-printed", "corrected" or "inconclusive".
  std::string verdict;
};

/// The four suspected misprints (kst2 prefactor, T22 sign, T23 gamma offset,
/// C32 Delta index), filtered by config.only, each adjudicated against an
/// oracle evaluated at digits+20 with twice the term budget. A mode matches
/// when its rel_error <= 10^-(digits-20) while the other's exceeds 1e-6.
std::vector<ForensicsRow> forensics_rows(const RunConfig& config);

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_forensics(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kummer::cli
