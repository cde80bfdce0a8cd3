#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <tuple>

#include "kummer/errors.hpp"
#include "kummer/hypergeometric.hpp"
#include "kummer/summation.hpp"

namespace kummer::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string render(const Scalar& z, const PrecisionContext& ctx) {
  return to_string(z, ctx.digits());
}

std::string render(const Real& r, const PrecisionContext& ctx) {
  return to_decimal(r, ctx.digits());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Writes to config.output_path when set, otherwise to `out`.
void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot write '" + config.output_path + "'");
  file << text;
}

std::string scalar_text(const json& value, const char* field) {
  if (value.is_string()) return value.get<std::string>();
  // dump() renders a JSON double as its shortest round-trip decimal.
  if (value.is_number()) return value.dump();
  throw ConfigError(std::string("grid field '") + field + "' must hold numbers or strings");
}

const json& grid_list(const json& grid, const char* field) {
  if (!grid.contains(field)) throw ConfigError(std::string("grid is missing '") + field + "'");
  const json& list = grid.at(field);
  if (!list.is_array()) throw ConfigError(std::string("grid field '") + field + "' must be a list");
  return list;
}

Theorem theorem_or_throw(const std::string& text) {
  const auto t = parse_theorem(text);
  if (!t) throw ConfigError("unknown theorem '" + text + "'");
  return *t;
}

Mode mode_or_throw(const std::string& text) {
  const auto m = parse_mode(text);
  if (!m) throw ConfigError("unknown mode '" + text + "' (expected as-printed or corrected)");
  return *m;
}

std::string verdicts_csv_header() { return "theorem,rho,i,x,delta,lhs,rhs,rel_error,verdict\n"; }

int reports_exit_code(const std::vector<VerificationReport>& reports) {
  std::vector<Verdict> verdicts;
  verdicts.reserve(reports.size());
  for (const auto& r : reports) verdicts.push_back(r.verdict);
  return aggregate_exit_code(verdicts);
}

int emit_reports(const RunConfig& config, const std::vector<VerificationReport>& reports,
                 const PrecisionContext& ctx, std::ostream& out, std::ostream& err) {
  for (const auto& r : reports) {
    if (!r.diagnostic.empty()) {
      err << to_string(r.identity.theorem) << ": " << r.diagnostic << "\n";
    }
  }
  if (config.format == Format::Csv) {
    emit(config, reports_to_csv(reports, ctx), out);
  } else {
    ordered_json array = ordered_json::array();
    for (const auto& r : reports) array.push_back(report_to_json(r, ctx));
    emit(config, array.dump(2) + "\n", out);
  }
  return reports_exit_code(reports);
}

// Runs `body`, mapping configuration and parse failures to exit code 2.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace

int aggregate_exit_code(const std::vector<Verdict>& verdicts) {
  bool any_fail = false;
  bool any_inconclusive = false;
  bool any_evaluated = false;
  for (Verdict v : verdicts) {
    if (v == Verdict::DomainError) continue;
    any_evaluated = true;
    any_fail = any_fail || v == Verdict::Fail;
    any_inconclusive = any_inconclusive || v == Verdict::Inconclusive;
  }
  if (!any_evaluated) return kExitError;
  if (any_fail) return kExitFail;
  if (any_inconclusive) return kExitInconclusive;
  return kExitPass;
}

PrecisionContext context_for(const RunConfig& config, int default_digits) {
  const PrecisionContext base = make_context(config.digits.value_or(default_digits));
  return config.max_terms ? base.with_max_terms(*config.max_terms) : base;
}

IdentityCase parse_case(const CaseText& text, const PrecisionContext& ctx) {
  if (text.i < 0) throw ConfigError("i must be a nonnegative integer");
  return normalized(IdentityCase{theorem_or_throw(text.theorem), parse_scalar(text.rho, ctx),
                                 text.i, parse_scalar(text.x, ctx),
                                 parse_delta_spec(text.delta, ctx), mode_or_throw(text.mode)});
}

std::optional<int> grid_digits(const json& grid) {
  if (!grid.is_object() || !grid.contains("digits")) return std::nullopt;
  return grid.at("digits").get<int>();
}

std::optional<int> grid_max_terms(const json& grid) {
  if (!grid.is_object() || !grid.contains("max_terms")) return std::nullopt;
  return grid.at("max_terms").get<int>();
}

std::vector<CaseText> expand_grid(const json& grid, const PrecisionContext& ctx) {
  if (!grid.is_object()) throw ConfigError("grid must be a JSON object");
  const std::string mode = grid.value("mode", std::string("corrected"));
  mode_or_throw(mode);

  std::vector<std::string> theorems;
  for (const auto& t : grid_list(grid, "theorems")) {
    if (!t.is_string()) throw ConfigError("grid field 'theorems' must hold strings");
    theorems.push_back(t.get<std::string>());
  }
  std::vector<long> shifts;
  for (const auto& i : grid_list(grid, "i")) {
    if (!i.is_number_integer()) throw ConfigError("grid field 'i' must hold integers");
    shifts.push_back(i.get<long>());
  }
  std::vector<std::string> rhos;
  for (const auto& r : grid_list(grid, "rho")) rhos.push_back(scalar_text(r, "rho"));
  std::vector<std::string> xs;
  for (const auto& x : grid_list(grid, "x")) xs.push_back(scalar_text(x, "x"));
  std::vector<std::string> deltas;
  if (grid.contains("delta")) {
    for (const auto& d : grid_list(grid, "delta")) {
      if (!d.is_string()) throw ConfigError("grid field 'delta' must hold strings");
      deltas.push_back(d.get<std::string>());
    }
  } else {
    deltas.emplace_back("const:1");
  }

  std::vector<CaseText> cases;
  std::set<std::tuple<std::string, long, std::string, std::string, std::string>> seen;
  for (const auto& t : theorems) {
    for (long i : shifts) {
      for (const auto& rho : rhos) {
        for (const auto& x : xs) {
          for (const auto& delta : deltas) {
            const IdentityCase c = parse_case(CaseText{t, rho, i, x, delta, mode}, ctx);
            CaseText canonical{t, render(c.rho, ctx), c.i, render(c.x, ctx),
                               c.delta.spec(ctx.digits()), mode};
            if (seen.emplace(canonical.theorem, canonical.i, canonical.rho, canonical.x,
                             canonical.delta)
                    .second) {
              cases.push_back(std::move(canonical));
            }
          }
        }
      }
    }
  }
  return cases;
}

ordered_json report_to_json(const VerificationReport& r, const PrecisionContext& ctx) {
  const IdentityCase& c = r.identity;
  ordered_json j;
  j["theorem"] = std::string(to_string(c.theorem));
  j["rho"] = render(c.rho, ctx);
  j["i"] = c.i;
  j["x"] = render(c.x, ctx);
  j["delta"] = c.delta.spec(ctx.digits());
  j["mode"] = std::string(to_string(c.mode));
  j["digits"] = ctx.digits();
  j["lhs"] = render(r.lhs, ctx);
  j["rhs"] = render(r.rhs, ctx);
  j["abs_error"] = render(r.abs_error, ctx);
  j["rel_error"] = render(r.rel_error, ctx);
  j["lhs_tail"] = render(r.lhs_tail, ctx);
  j["rhs_tail"] = render(r.rhs_tail, ctx);
  j["verdict"] = std::string(to_string(r.verdict));
  j["terms_used_lhs"] = r.terms_used_lhs;
  j["terms_used_rhs"] = r.terms_used_rhs;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  if (r.other_mode_rel_error) j["other_mode_rel_error"] = render(*r.other_mode_rel_error, ctx);
  return j;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports,
                           const PrecisionContext& ctx) {
  std::string out = verdicts_csv_header();
  for (const auto& r : reports) {
    const IdentityCase& c = r.identity;
    out += std::string(to_string(c.theorem)) + ",";
    out += csv_field(render(c.rho, ctx)) + ",";
    out += std::to_string(c.i) + ",";
    out += csv_field(render(c.x, ctx)) + ",";
    out += csv_field(c.delta.spec(ctx.digits())) + ",";
    out += csv_field(render(r.lhs, ctx)) + ",";
    out += csv_field(render(r.rhs, ctx)) + ",";
    out += render(r.rel_error, ctx) + ",";
    out += std::string(to_string(r.verdict)) + "\n";
  }
  return out;
}

std::vector<ForensicsRow> forensics_rows(const RunConfig& config) {
  const PrecisionContext ctx = context_for(config);
  const PrecisionContext oracle_ctx = ctx.elevated(20, 2);
  const Real match_tol = ctx.pow10(-(ctx.digits() - 20));
  const Real mismatch = ctx.pow10(-6);
  const auto wanted = [&](const std::string& name) {
    return config.only.empty() ||
           std::find(config.only.begin(), config.only.end(), name) != config.only.end();
  };
  const auto adjudicate = [&](std::string misprint, std::string description, Scalar printed,
                              Scalar corrected, Scalar oracle) {
    Real printed_err = relative_error(printed, oracle);
    Real corrected_err = relative_error(corrected, oracle);
    std::string verdict = "inconclusive";
    if (printed_err <= match_tol && corrected_err > mismatch) verdict = "as-printed";
    if (corrected_err <= match_tol && printed_err > mismatch) verdict = "corrected";
    return ForensicsRow{std::move(misprint), std::move(description), std::move(printed),
                        std::move(corrected), std::move(oracle), std::move(printed_err),
                        std::move(corrected_err), std::move(verdict)};
  };

  std::vector<ForensicsRow> rows;
  if (wanted("kst2")) {
    // 2F1(a, b; 1+a-b-i; -1) at a = 3, b = 1/2, i = 1.
    const auto input = [](const PrecisionContext& c, Mode mode) {
      return KummerInput{parse_scalar("3", c), parse_scalar("0.5", c), 1, mode};
    };
    const KummerInput oracle_in = input(oracle_ctx, Mode::Corrected);
    const Scalar lower = oracle_in.a - oracle_in.b + (1 - oracle_in.i);
    rows.push_back(adjudicate(
        "kst2", "2F1(3, 1/2; 5/2; -1)",
        kummer_general_minus(input(ctx, Mode::AsPrinted), ctx),
        kummer_general_minus(input(ctx, Mode::Corrected), ctx),
        hyp2f1_minus_one(oracle_in.a, oracle_in.b, lower, oracle_ctx).value));
  }

  const auto theorem_row = [&](const std::string& name, CaseText text) {
    if (config.delta_override) text.delta = *config.delta_override;
    IdentityCase c = parse_case(text, ctx);
    const IdentityCase oracle_case = parse_case(text, oracle_ctx);
    const std::string description = name + " rho=" + text.rho + " i=" + std::to_string(text.i) +
                                    " x=" + text.x + " delta=" + c.delta.spec(ctx.digits());
    const Scalar oracle = lhs_double_series(oracle_case, oracle_ctx).value;
    const auto rhs = [&](Mode mode) {
      c.mode = mode;
      if (c.theorem == Theorem::C32) return rhs_corollary_32(c.rho, c.x, c.delta, mode, ctx).value;
      return rhs_theorem(c, ctx).value;
    };
    Scalar printed = rhs(Mode::AsPrinted);
    Scalar corrected = rhs(Mode::Corrected);
    rows.push_back(adjudicate(name, description, std::move(printed), std::move(corrected),
                              oracle));
  };
  if (wanted("T22")) theorem_row("T22", CaseText{"T22", "1.3", 2, "0.5", "harmonic", "corrected"});
  if (wanted("T23")) theorem_row("T23", CaseText{"T23", "1.3", 2, "0.5", "harmonic", "corrected"});
  if (wanted("C32")) theorem_row("C32", CaseText{"C32", "0.7", 0, "0.3", "geom:0.5", "corrected"});
  return rows;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.cases.empty()) throw ConfigError("no case given");
    const PrecisionContext ctx = context_for(config);
    std::vector<VerificationReport> reports;
    for (const auto& text : config.cases) reports.push_back(verify(parse_case(text, ctx), ctx));
    return emit_reports(config, reports, ctx, out, err);
  });
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream file(config.grid_path);
    if (!file) throw ConfigError("cannot read grid '" + config.grid_path + "'");
    const json grid = json::parse(file);
    RunConfig effective = config;
    if (!effective.digits) effective.digits = grid_digits(grid);
    if (!effective.max_terms) effective.max_terms = grid_max_terms(grid);
    const PrecisionContext ctx = context_for(effective);
    const std::vector<CaseText> cases = expand_grid(grid, ctx);
    if (cases.empty()) throw ConfigError("grid expands to no cases");
    std::vector<VerificationReport> reports;
    reports.reserve(cases.size());
    for (const auto& text : cases) reports.push_back(verify(parse_case(text, ctx), ctx));
    return emit_reports(config, reports, ctx, out, err);
  });
}

int run_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.cases.size() != 1) throw ConfigError("eval takes exactly one case");
    const PrecisionContext ctx = context_for(config);
    const IdentityCase c = parse_case(config.cases.front(), ctx);
    std::vector<Scalar> terms;
    SeriesResult result = [&] {
      switch (c.theorem) {
        case Theorem::C31:
        case Theorem::B11:
          return rhs_corollary_31(c.rho, c.x, c.delta, ctx, &terms);
        case Theorem::C32:
        case Theorem::B12:
          return rhs_corollary_32(c.rho, c.x, c.delta, c.mode, ctx);
        default:
          return rhs_theorem(c, ctx, &terms);
      }
    }();

    if (config.format == Format::Csv) {
      std::string csv = "m,term\n";
      for (size_t m = 0; m < terms.size(); ++m) {
        csv += std::to_string(m) + "," + csv_field(render(terms[m], ctx)) + "\n";
      }
      emit(config, csv, out);
      return kExitPass;
    }
    ordered_json j;
    j["theorem"] = std::string(to_string(c.theorem));
    j["rho"] = render(c.rho, ctx);
    j["i"] = c.i;
    j["x"] = render(c.x, ctx);
    j["delta"] = c.delta.spec(ctx.digits());
    j["mode"] = std::string(to_string(c.mode));
    j["digits"] = ctx.digits();
    j["value"] = render(result.value, ctx);
    j["tail"] = render(result.tail_estimate, ctx);
    j["terms_used"] = result.terms_used;
    ordered_json list = ordered_json::array();
    for (const auto& t : terms) list.push_back(render(t, ctx));
    j["terms"] = std::move(list);
    emit(config, j.dump(2) + "\n", out);
    return kExitPass;
  });
}

int run_forensics(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PrecisionContext ctx = context_for(config);
    const std::vector<ForensicsRow> rows = forensics_rows(config);
    if (rows.empty()) throw ConfigError("no forensics rows selected");
    std::vector<Verdict> verdicts;
    for (const auto& row : rows) {
      verdicts.push_back(row.verdict == "inconclusive" ? Verdict::Inconclusive : Verdict::Pass);
    }

    if (config.format == Format::Csv) {
      std::string csv =
          "misprint,case,as_printed,corrected,oracle,as_printed_rel_error,"
          "corrected_rel_error,verdict\n";
      for (const auto& row : rows) {
        csv += row.misprint + "," + csv_field(row.description) + "," +
               csv_field(render(row.as_printed, ctx)) + "," +
               csv_field(render(row.corrected, ctx)) + "," + csv_field(render(row.oracle, ctx)) +
               "," + render(row.as_printed_rel_error, ctx) + "," +
               render(row.corrected_rel_error, ctx) + "," + row.verdict + "\n";
      }
      emit(config, csv, out);
    } else {
      ordered_json array = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json j;
        j["misprint"] = row.misprint;
        j["case"] = row.description;
        j["digits"] = ctx.digits();
        j["as_printed"] = render(row.as_printed, ctx);
        j["corrected"] = render(row.corrected, ctx);
        j["oracle"] = render(row.oracle, ctx);
        j["as_printed_rel_error"] = render(row.as_printed_rel_error, ctx);
        j["corrected_rel_error"] = render(row.corrected_rel_error, ctx);
        j["verdict"] = row.verdict;
        array.push_back(std::move(j));
      }
      emit(config, array.dump(2) + "\n", out);
    }
    return aggregate_exit_code(verdicts);
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Verify: return run_verify(config, out, err);
    case Command::Sweep: return run_sweep(config, out, err);
    case Command::Eval: return run_eval(config, out, err);
    case Command::Forensics: return run_forensics(config, out, err);
  }
  return kExitError;
}

}  // namespace kummer::cli
