#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using kummer::cli::CaseText;
using kummer::cli::Command;
using kummer::cli::Format;
using kummer::cli::RunConfig;

struct Flags {
  CaseText text;
  int digits = 50;
  int max_terms = 400;
  std::string format = "json";
  std::string out;
};

// Flags shared by every subcommand; the case flags only where a case is read.
void add_common(CLI::App* app, Flags& flags, CLI::Option*& digits, CLI::Option*& max_terms) {
  digits = app->add_option("--digits", flags.digits, "Significant decimal digits (>= 20)");
  max_terms = app->add_option("--max-terms", flags.max_terms, "Truncation depth per series");
  app->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", flags.out, "Output file (default: stdout)");
}

void add_case(CLI::App* app, Flags& flags) {
  app->add_option("--theorem", flags.text.theorem, "T21 T22 T23 T24 C31 C32 B11 B12");
  app->add_option("--rho", flags.text.rho, "rho (scalar)");
  app->add_option("--i", flags.text.i, "Shift i >= 0");
  app->add_option("--x", flags.text.x, "x (scalar)");
  app->add_option("--delta", flags.text.delta,
                  "const:<c> | geom:<q> | harmonic | table:<v0,v1,...;default>");
  app->add_option("--mode", flags.text.mode, "as-printed | corrected");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify generalized Kummer-type double-series identities"};
  app.require_subcommand(1);

  Flags flags;
  std::string grid;
  std::vector<std::string> only;
  std::string delta_override;
  std::map<CLI::App*, std::pair<CLI::Option*, CLI::Option*>> common;

  const auto subcommand = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    CLI::Option* digits = nullptr;
    CLI::Option* max_terms = nullptr;
    add_common(sub, flags, digits, max_terms);
    common[sub] = {digits, max_terms};
    return sub;
  };

  CLI::App* verify = subcommand("verify", "Verify one case");
  add_case(verify, flags);
  CLI::App* sweep = subcommand("sweep", "Verify every case of a JSON grid");
  sweep->add_option("--grid", grid, "Grid file")->required();
  CLI::App* eval = subcommand("eval", "Evaluate a closed-form series with per-term output");
  add_case(eval, flags);
  CLI::App* forensics = subcommand("forensics", "Adjudicate printed against corrected forms");
  forensics->add_option("--only", only, "Rows to run: kst2 T22 T23 C32")->delimiter(',');
  CLI::Option* delta_opt =
      forensics->add_option("--delta", delta_override, "Delta for the T22/T23/C32 rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kummer::cli::kExitError;
  }

  RunConfig config;
  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == verify) config.command = Command::Verify;
  if (chosen == sweep) config.command = Command::Sweep;
  if (chosen == eval) config.command = Command::Eval;
  if (chosen == forensics) config.command = Command::Forensics;

  const auto [digits, max_terms] = common[chosen];
  if (digits->count() > 0) config.digits = flags.digits;
  if (max_terms->count() > 0) config.max_terms = flags.max_terms;
  config.format = flags.format == "csv" ? Format::Csv : Format::Json;
  config.output_path = flags.out;
  config.grid_path = grid;
  config.only = only;
  if (delta_opt->count() > 0) config.delta_override = delta_override;
  if (chosen == verify || chosen == eval) config.cases.push_back(flags.text);

  return kummer::cli::run(config, std::cout, std::cerr);
}
