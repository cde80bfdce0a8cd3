// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "draws.hpp"
#include "kummer/errors.hpp"
#include "kummer/gamma.hpp"
#include "kummer/hypergeometric.hpp"
#include "kummer/identity.hpp"
#include "kummer/summation.hpp"
#include "schema_check.hpp"

namespace {

using namespace kummer;
using kummer::testing::Draws;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed sub-check; keeps the first message.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(const Real& r) { return to_decimal(r, 3); }

Scalar S(const std::string& text, const PrecisionContext& ctx) { return parse_scalar(text, ctx); }

Scalar random_complex(Draws& d, double lo, double hi, double im, const PrecisionContext& ctx) {
  return Scalar(S(d.non_integer(lo, hi), ctx).re(), S(d.decimal(-im, im), ctx).re());
}

// 1. Delta = 1, i = 0, rho = 1/2, x = 1/4: four evaluations agree pairwise.
Outcome bailey_reduction() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto ctx = make_context(50);
  const Real tol = ctx.pow10(-35);
  const IdentityCase c{Theorem::T21, S("0.5", ctx), 0, S("0.25", ctx),
                       DeltaSequence::constant(S("1", ctx)), Mode::Corrected};
  const Real one(1, ctx.working_bits());
  const std::vector<Scalar> values{lhs_double_series(c, ctx).value, rhs_theorem(c, ctx).value,
                                   rhs_corollary_31(c.rho, c.x, c.delta, ctx).value,
                                   Scalar(cosh(one) * cos(one))};
  Real worst(ctx.working_bits());
  for (size_t a = 0; a < values.size(); ++a) {
    for (size_t b = a + 1; b < values.size(); ++b) {
      worst = max(worst, relative_error(values[a], values[b]));
    }
  }
  o.require(worst <= tol, "pairwise rel_error " + sci(worst));
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "max pairwise rel_error " + sci(worst);
  return o;
}

// 2. Kummer's theorem at (1, 1/2) against pi/4 and the hypergeometric series.
Outcome kummer_classical_value() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto ctx = make_context(50);
  const Scalar quarter_pi(Real::pi(ctx.working_bits()) / 4L);
  const Scalar value = kummer_classical(S("1", ctx), S("0.5", ctx), ctx);
  const Real err = relative_error(value, quarter_pi);
  o.require(err <= ctx.pow10(-(ctx.digits() - 5)), "vs pi/4 rel_error " + sci(err));

  // The series stops at 10^-(digits-10), so the tight comparison runs it at
  // elevated precision; the direct series must land within its own tail.
  const auto fine = ctx.elevated(20, 2);
  const SeriesResult transformed =
      hyp2f1_minus_one(S("1", fine), S("0.5", fine), S("1.5", fine), fine);
  const Real series_err = relative_error(value, transformed.value);
  o.require(series_err <= ctx.pow10(-(ctx.digits() - 5)), "vs series rel_error " + sci(series_err));
  const SeriesResult direct =
      pfq({{S("1", ctx), S("0.5", ctx)}, {S("1.5", ctx)}, S("-1", ctx)}, ctx);
  o.require(abs(direct.value - value) <= direct.tail_estimate, "direct series outside its tail");

  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "rel_error vs pi/4 " + sci(err) + ", vs series " + sci(series_err);
  return o;
}

// 3. Corrected-mode verify over the full T21..T24 grid.
Outcome oracle_gate() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto ctx = make_context(50);
  const nlohmann::json grid = nlohmann::json::parse(R"({
    "theorems": ["T21", "T22", "T23", "T24"], "i": [0, 1, 2, 3, 4, 5],
    "rho": ["0.3", "0.7", "1.3", "2.6"], "x": ["0.5", "-0.5", "2", "-2"],
    "delta": ["const:1", "geom:0.5", "harmonic"], "mode": "corrected"})");
  const auto cases = cli::expand_grid(grid, ctx);
  long passed = 0;
  long rejected = 0;
  Real worst(ctx.working_bits());
  for (const auto& text : cases) {
    const VerificationReport r = verify(cli::parse_case(text, ctx), ctx);
    if (r.verdict == Verdict::DomainError) {
      ++rejected;
      continue;
    }
    worst = max(worst, r.rel_error);
    if (r.verdict == Verdict::Pass && r.rel_error <= ctx.pow10(-35)) {
      ++passed;
    } else {
      o.require(false, text.theorem + " rho=" + text.rho + " i=" + std::to_string(text.i) +
                           " x=" + text.x + " delta=" + text.delta + ": " +
                           std::string(to_string(r.verdict)));
    }
  }
  const double t = seconds_since(start);
  o.require(cases.size() == 1152, "grid expanded to " + std::to_string(cases.size()) + " cases");
  o.require(t < 300.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << passed << "/" << cases.size() - rejected << " pass (" << rejected
      << " rejected by the domain guard), max rel_error " << sci(worst);
    o.detail = s.str();
  }
  return o;
}

// 4. Terminating instances a = -2m against the finite sum.
Outcome kummer_generalization() {
  Outcome o;
  const auto ctx = make_context(50);
  const Real tol = ctx.pow10(-(ctx.digits() - 10));
  Draws d(0xacce0004);
  Real worst(ctx.working_bits());
  long checked = 0;
  for (long i = 0; i <= 5; ++i) {
    for (int k = 0; k < 50; ++k) {
      const long m = d.integer(0, 10);
      const Scalar a(-2 * m, ctx.working_bits());
      const Scalar b = random_complex(d, -5, 5, 1, ctx);
      const Real plus = relative_error(kummer_general_plus({a, b, i, Mode::Corrected}, ctx),
                                       f21_terminating(2 * m, b, a - b + (1 + i), ctx));
      const Real minus = relative_error(kummer_general_minus({a, b, i, Mode::Corrected}, ctx),
                                        f21_terminating(2 * m, b, a - b + (1 - i), ctx));
      worst = max(worst, max(plus, minus));
      checked += 2;
    }
  }
  o.require(worst <= tol, "max rel_error " + sci(worst));
  if (o.pass) o.detail = std::to_string(checked) + " evaluations, max rel_error " + sci(worst);
  return o;
}

// 5. Six invariant suites, 50 or more random instances each.
Outcome invariant_suites() {
  Outcome o;
  const auto ctx = make_context(50);
  const Real tight = ctx.pow10(-45);
  const Scalar one(1, ctx.working_bits());
  Draws d(0xacce0005);
  int instances = 0;

  for (int k = 0; k < 50; ++k, ++instances) {
    const Scalar alpha = random_complex(d, -6, 6, 1, ctx);
    const long m = d.integer(0, 30);
    const long n = d.integer(0, m);
    const Scalar lhs = pochhammer(alpha, m - n, ctx) * pochhammer(one - alpha - m, n, ctx);
    const Scalar base = pochhammer(alpha, m, ctx);
    o.require(approx_equal(lhs, n % 2 == 0 ? base : -base, tight), "Pochhammer shift");
  }
  for (long m = 0; m <= 30; ++m) {
    for (long n = 0; n <= m; ++n, ++instances) {
      const Scalar lhs = gamma(Scalar(m - n + 1, ctx.working_bits()), ctx) *
                         pochhammer(Scalar(-m, ctx.working_bits()), n, ctx);
      const Scalar fact = gamma(Scalar(m + 1, ctx.working_bits()), ctx);
      o.require(lhs == (n % 2 == 0 ? fact : -fact), "factorial shift");
    }
  }
  const Real pi = Real::pi(ctx.working_bits());
  for (int k = 0; k < 100; ++k, ++instances) {
    const Scalar z = random_complex(d, -10, 10, 2, ctx);
    o.require(approx_equal(gamma(z, ctx) * gamma(one - z, ctx) * sin(z * pi) / pi, one, tight),
              "gamma reflection");
    o.require(relative_error(gamma(z + 1L, ctx), z * gamma(z, ctx)) <= tight, "gamma recurrence");
  }

  const char* theorems[] = {"T21", "T22", "T23", "T24", "C31", "C32"};
  const Real sym = ctx.pow10(-45);
  for (int k = 0; k < 50; ++k, ++instances) {
    const Theorem t = *parse_theorem(theorems[d.integer(0, 5)]);
    const Scalar rho = random_complex(d, 0.1, 3, 1, ctx);
    const Scalar x(S(d.decimal(-1.5, 1.5), ctx).re(), S(d.decimal(-0.5, 0.5), ctx).re());
    const DeltaSequence delta =
        DeltaSequence::geometric(Scalar(S(d.decimal(-0.6, 0.6), ctx).re(),
                                        S(d.decimal(-0.6, 0.6), ctx).re()));
    const IdentityCase c = normalized(IdentityCase{t, rho, d.integer(0, 4), x, delta,
                                                   Mode::Corrected});
    o.require(diagonal_reindex_check(c, ctx), "diagonal re-indexing");

    const IdentityCase cc{c.theorem, conj(c.rho), c.i, conj(c.x), c.delta.conjugated(), c.mode};
    const VerificationReport r = verify(c, ctx);
    const VerificationReport rc = verify(cc, ctx);
    o.require(r.verdict == Verdict::Pass && rc.verdict == Verdict::Pass, "verify on random case");
    o.require(approx_equal(rc.lhs, conj(r.lhs), sym) && approx_equal(rc.rhs, conj(r.rhs), sym),
              "conjugation symmetry");

    const Scalar factor = random_complex(d, -3, 3, 3, ctx);
    IdentityCase scaled = c;
    scaled.delta = c.delta.scaled(factor);
    const VerificationReport rs = verify(scaled, ctx);
    o.require(approx_equal(rs.lhs, factor * r.lhs, sym) && approx_equal(rs.rhs, factor * r.rhs, sym),
              "Delta scaling");
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances across six suites";
  return o;
}

// 6. Forensics names exactly one matching mode per suspected misprint.
Outcome forensics_determinism() {
  Outcome o;
  cli::RunConfig config;
  config.command = cli::Command::Forensics;
  config.digits = 50;
  const auto ctx = make_context(50);
  const auto rows = cli::forensics_rows(config);
  o.require(rows.size() == 4, "expected 4 rows");
  std::string summary;
  for (const auto& row : rows) {
    const bool printed_ok = row.as_printed_rel_error <= ctx.pow10(-30);
    const bool corrected_ok = row.corrected_rel_error <= ctx.pow10(-30);
    const bool printed_off = row.as_printed_rel_error > ctx.pow10(-6);
    const bool corrected_off = row.corrected_rel_error > ctx.pow10(-6);
    o.require((printed_ok && corrected_off) || (corrected_ok && printed_off),
              row.misprint + " does not single out one mode");
    o.require(row.verdict != "inconclusive", row.misprint + " inconclusive");
    summary += (summary.empty() ? "" : ", ") + row.misprint + "=" + row.verdict;
  }
  config.only = {"C32"};
  config.delta_override = "const:1";
  const auto degenerate = cli::forensics_rows(config);
  o.require(degenerate.size() == 1 && degenerate[0].verdict == "inconclusive",
            "C32 with constant Delta should be inconclusive");

  std::ostringstream first, second, sink;
  config.only.clear();
  config.delta_override.reset();
  cli::run(config, first, sink);
  cli::run(config, second, sink);
  o.require(first.str() == second.str(), "forensics output differs between runs");
  if (o.pass) o.detail = summary + "; C32 with const:1 inconclusive";
  return o;
}

// 7. i = 0: T21 term 2k equals corollary term k, odd terms vanish.
Outcome termwise_reduction() {
  Outcome o;
  const auto ctx = make_context(50);
  const Real tol = ctx.pow10(-(ctx.digits() + 5));
  Draws d(0xacce0007);
  long compared = 0;
  for (int k = 0; k < 20; ++k) {
    const Scalar rho = random_complex(d, -3.5, 4, 0.5, ctx);
    const Scalar x(S(d.decimal(-3, 3), ctx).re(), S(d.decimal(-1, 1), ctx).re());
    std::vector<Scalar> table;
    for (int j = 0; j < 6; ++j) table.push_back(random_complex(d, -2, 2, 2, ctx));
    const DeltaSequence delta = DeltaSequence::table(table, random_complex(d, -1, 1, 1, ctx));
    std::vector<Scalar> theorem_terms;
    std::vector<Scalar> corollary_terms;
    rhs_theorem(IdentityCase{Theorem::T21, rho, 0, x, delta, Mode::Corrected}, ctx,
                &theorem_terms);
    rhs_corollary_31(rho, x, delta, ctx, &corollary_terms);
    const size_t n = std::min(theorem_terms.size() / 2, corollary_terms.size());
    o.require(n > 3, "too few terms to compare");
    for (size_t m = 0; m < n; ++m, ++compared) {
      o.require(approx_equal(theorem_terms[2 * m], corollary_terms[m], tol),
                "term " + std::to_string(m) + " differs");
      o.require(theorem_terms[2 * m + 1].is_zero(), "odd term nonzero");
    }
  }
  if (o.pass) o.detail = "20 cases, " + std::to_string(compared) + " coefficient pairs";
  return o;
}

// 8. Repeated sweeps are byte-identical and every report fits the schema.
Outcome determinism_and_schema() {
  Outcome o;
  const std::string grid_path = std::string(KUMMER_SOURCE_DIR) + "/docs/grids/smoke.json";
  cli::RunConfig config;
  config.command = cli::Command::Sweep;
  config.grid_path = grid_path;
  std::ostringstream a, b, err;
  const int code = cli::run(config, a, err);
  cli::run(config, b, err);
  o.require(a.str() == b.str(), "JSON sweep output differs between runs");
  o.require(code == cli::kExitPass || code == cli::kExitFail, "sweep exit " + std::to_string(code));

  config.format = cli::Format::Csv;
  std::ostringstream c1, c2;
  cli::run(config, c1, err);
  cli::run(config, c2, err);
  o.require(c1.str() == c2.str(), "CSV sweep output differs between runs");

  const auto reports = nlohmann::json::parse(a.str());
  const auto errors = kummer::testing::schema_errors(reports);
  o.require(errors.empty(), errors.empty() ? "" : "schema: " + errors.front());

  cli::RunConfig single;
  single.command = cli::Command::Verify;
  single.cases.push_back({"T22", "1.3", 2, "0.5", "harmonic", "as-printed"});
  std::ostringstream v;
  cli::run(single, v, err);
  const auto single_errors = kummer::testing::schema_errors(nlohmann::json::parse(v.str()));
  o.require(single_errors.empty(), "schema (verify): " +
                                       (single_errors.empty() ? "" : single_errors.front()));
  if (o.pass) {
    o.detail = std::to_string(reports.size()) + " reports, identical JSON and CSV across runs";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Bailey reduction", bailey_reduction},
      {2, "Kummer classical", kummer_classical_value},
      {3, "generalized-theorem oracle gate", oracle_gate},
      {4, "Kummer generalization oracle", kummer_generalization},
      {5, "invariant suites", invariant_suites},
      {6, "forensics determinism", forensics_determinism},
      {7, "i=0 termwise reduction", termwise_reduction},
      {8, "determinism and schema", determinism_and_schema},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(start);
    if (!outcome.pass) ++failures;
    std::printf("[%s] %d %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), t);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
