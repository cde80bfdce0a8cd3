#include <gtest/gtest.h>

#include "kummer/delta.hpp"
#include "kummer/errors.hpp"
#include "test_support.hpp"

namespace kummer {
namespace {

using testing::Draws;
using testing::S;

TEST(PrecisionContext, DefaultsFollowDigits) {
  const auto ctx = make_context(50);
  EXPECT_EQ(ctx.digits(), 50);
  EXPECT_EQ(ctx.max_terms(), 400);
  EXPECT_EQ(ctx.consecutive_small(), 5);
  EXPECT_EQ(ctx.tail_epsilon(), Real::pow10(-40, ctx.working_bits()));

  const auto low = make_context(20);
  EXPECT_EQ(low.tail_epsilon(), Real::pow10(-10, low.working_bits()));
  EXPECT_GT(ctx.working_bits(), low.working_bits());
}

TEST(PrecisionContext, RejectsTooFewDigits) {
  EXPECT_THROW(make_context(5), ConfigError);
  EXPECT_THROW(make_context(19), ConfigError);
  EXPECT_THROW(make_context(50).with_max_terms(3), ConfigError);
}

TEST(PrecisionContext, ElevatedAddsDigitsAndDepth) {
  const auto ctx = make_context(50);
  const auto up = ctx.elevated(20, 2);
  EXPECT_EQ(up.digits(), 70);
  EXPECT_EQ(up.max_terms(), 800);
  EXPECT_EQ(up.tail_epsilon(), Real::pow10(-60, up.working_bits()));
}

TEST(ParseScalar, AcceptsTheGrammar) {
  const auto ctx = make_context(50);
  const Scalar half = S("0.5", ctx);
  EXPECT_EQ(half.re(), Real(1, ctx.working_bits()) / 2L);
  EXPECT_TRUE(half.is_real());

  const Scalar z = S("1.5-2i", ctx);
  EXPECT_EQ(z.re(), Real(3, ctx.working_bits()) / 2L);
  EXPECT_EQ(z.im(), -Real(2, ctx.working_bits()));

  EXPECT_EQ(S("2i", ctx).im(), Real(2, ctx.working_bits()));
  EXPECT_EQ(S("-0.5i", ctx).im(), -half.re());
  EXPECT_EQ(S("+3", ctx).re(), Real(3, ctx.working_bits()));
  EXPECT_EQ(S("1e-3", ctx).re(), Real::pow10(-3, ctx.working_bits()));
  EXPECT_EQ(S("2.5E+1+1e0i", ctx), Scalar(Real(25, ctx.working_bits()), Real(1, ctx.working_bits())));
}

TEST(ParseScalar, RejectsMalformedText) {
  const auto ctx = make_context(50);
  for (const char* bad : {"abc", "", "1..2", "1+", "1+2", "i", "1.5-2j", "0.5 ", "--1", "1+2i3"}) {
    EXPECT_THROW(S(bad, ctx), ParseError) << bad;
  }
}

TEST(ParseScalar, DecimalIsCorrectlyRounded) {
  const auto ctx = make_context(50);
  Real expected(ctx.working_bits());
  mpfr_set_str(expected.get(), "0.3", 10, MPFR_RNDN);
  EXPECT_EQ(S("0.3", ctx).re(), expected);
}

TEST(Rendering, RoundTripsAtContextDigits) {
  const auto ctx = make_context(50);
  Draws draws(0x5eed0001);
  const Real tol = ctx.pow10(-49);
  for (int k = 0; k < 100; ++k) {
    const Scalar z(Real::from_double(draws.uniform(-1e6, 1e6), ctx.working_bits()) / 7L,
                   Real::from_double(draws.uniform(-1e-6, 1e-6), ctx.working_bits()) / 3L);
    const std::string text = to_string(z, ctx.digits());
    const Scalar back = S(text, ctx);
    EXPECT_TRUE(approx_equal(back, z, tol)) << text;
    EXPECT_EQ(to_string(back, ctx.digits()), text);
  }
}

TEST(Rendering, FixedForms) {
  const auto ctx = make_context(20);
  EXPECT_EQ(to_string(S("0", ctx), 20), "0.0");
  EXPECT_EQ(to_string(S("7", ctx), 20), "7.0");
  EXPECT_EQ(to_string(S("-0.25+3i", ctx), 20), "-0.25+3.0i");
  EXPECT_EQ(to_string(S("1.2e-45-7i", ctx), 20), "1.2e-45-7.0i");
}

TEST(Arithmetic, RenderingIsDeterministic) {
  const auto ctx = make_context(60);
  const Scalar a = S("1.25-0.75i", ctx);
  const Scalar b = S("0.3+2i", ctx);
  const auto compute = [&] { return to_string(exp(log(a * b / (a + b))) + sin(a), 60); };
  EXPECT_EQ(compute(), compute());
}

TEST(Arithmetic, ComplexIdentities) {
  const auto ctx = make_context(50);
  const Real tol = ctx.pow10(-55);
  const Scalar z = S("0.7-1.9i", ctx);
  EXPECT_TRUE(approx_equal(exp(log(z)), z, tol));
  EXPECT_TRUE(approx_equal(z * conj(z), Scalar(abs(z) * abs(z)), tol));
  EXPECT_TRUE(approx_equal(pow(z, 5) * pow(z, -5), Scalar(1, ctx.working_bits()), tol));
  EXPECT_TRUE(approx_equal(pow(Real(2, ctx.working_bits()), Scalar(3, ctx.working_bits())),
                           Scalar(8, ctx.working_bits()), tol));
  EXPECT_THROW(z / Scalar(ctx.working_bits()), DomainError);
}

TEST(ApproxEqual, MixedTolerance) {
  const auto ctx = make_context(50);
  EXPECT_TRUE(approx_equal(S("1.0", ctx), S("1.0", ctx), ctx.pow10(-30)));
  EXPECT_FALSE(approx_equal(S("1.0", ctx), S("2.0", ctx), ctx.pow10(-30)));
  EXPECT_TRUE(approx_equal(S("0", ctx), S("1e-45", ctx), ctx.pow10(-40)));
}

TEST(DeltaSequence, Kinds) {
  const auto ctx = make_context(50);
  const Real tol = ctx.pow10(-60);
  const auto c = parse_delta_spec("const:2.5", ctx);
  EXPECT_EQ(c.at(17, ctx), S("2.5", ctx));
  EXPECT_TRUE(c.is_constant());

  const auto g = parse_delta_spec("geom:0.5", ctx);
  EXPECT_EQ(g.at(3, ctx), S("0.125", ctx));
  EXPECT_FALSE(g.is_constant());

  const auto h = parse_delta_spec("harmonic", ctx);
  EXPECT_TRUE(approx_equal(h.at(2, ctx), Scalar(Real(1, ctx.working_bits()) / 3L), tol));

  const auto t = parse_delta_spec("table:1,2,3;0.5", ctx);
  EXPECT_EQ(t.at(1, ctx), S("2", ctx));
  EXPECT_EQ(t.at(3, ctx), S("0.5", ctx));
  EXPECT_EQ(t.at(400, ctx), S("0.5", ctx));

  const auto scaled = parse_delta_spec("2i*geom:0.5", ctx);
  EXPECT_EQ(scaled.at(1, ctx), S("1i", ctx));
}

TEST(DeltaSequence, SpecRoundTrips) {
  const auto ctx = make_context(50);
  for (const char* spec : {"const:1.0", "geom:0.5", "harmonic", "table:1.0,-2.0;0.0",
                           "3.0*harmonic", "const:1.0+2.0i"}) {
    const auto d = parse_delta_spec(spec, ctx);
    EXPECT_EQ(d.spec(50), spec);
    EXPECT_EQ(parse_delta_spec(d.spec(50), ctx).spec(50), spec);
  }
}

TEST(DeltaSequence, RejectsBadSpecs) {
  const auto ctx = make_context(50);
  EXPECT_THROW(parse_delta_spec("geom:1.5", ctx), DomainError);
  EXPECT_THROW(parse_delta_spec("table:1,2", ctx), ParseError);
  EXPECT_THROW(parse_delta_spec("table:1,;0", ctx), ParseError);
  EXPECT_THROW(parse_delta_spec("poly:3", ctx), ParseError);
  EXPECT_THROW(parse_delta_spec("harmonics", ctx), ParseError);
  EXPECT_THROW(parse_delta_spec("const:x", ctx), ParseError);
}

TEST(DeltaSequence, ConjugatedAndScaled) {
  const auto ctx = make_context(50);
  const auto d = parse_delta_spec("table:1+1i,2-3i;0.5i", ctx);
  const Scalar c = S("0.25-2i", ctx);
  for (long m = 0; m < 5; ++m) {
    EXPECT_EQ(d.conjugated().at(m, ctx), conj(d.at(m, ctx)));
    EXPECT_EQ(d.scaled(c).at(m, ctx), c * d.at(m, ctx));
  }
}

}  // namespace
}  // namespace kummer
