#include <gtest/gtest.h>

#include "helpers.hpp"
#include "polardeg/report.hpp"

using namespace polardeg;
using testing_helpers::Q;
using testing_helpers::random_poly;

namespace {

PolyQ build(std::initializer_list<std::pair<std::vector<unsigned>, long>> terms, std::size_t nvars = 3) {
  std::vector<PolyQ::Term> ts;
  for (const auto& [e, c] : terms) ts.push_back({Monomial::from_exponents(e), mpq_class(c)});
  return PolyQ::from_terms(RationalField{}, nvars, std::move(ts));
}

}  // namespace

TEST(ParsePoly, CurvesFromTheCorpus) {
  EXPECT_EQ(Q("x0^2 + x1^2 + x2^2"), build({{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}));
  EXPECT_EQ(Q("x0*x1*x2"), build({{{1, 1, 1}, 1}}));
  EXPECT_EQ(Q("x2*(x1^2 - x0*x2)"), build({{{0, 2, 1}, 1}, {{1, 0, 2}, -1}}));
}

TEST(ParsePoly, RationalCoefficientsAndSigns) {
  EXPECT_EQ(Q("-x0 + 3/6*x1"), Q("x1*1/2 - x0"));
  EXPECT_EQ(Q("(x0 - x1)^2"), Q("x0^2 - 2*x0*x1 + x1^2"));
  EXPECT_EQ(Q("x0^0"), Q("1"));
  EXPECT_EQ(Q("  x0 *  x1\n + 2 "), Q("x0*x1 + 2"));
}

TEST(ParsePoly, OverPrimeField) {
  const PrimeField f(1000000007);
  const auto p = parse_poly("1/2*x0 + 1000000008*x1", 2, f);
  EXPECT_EQ(p.terms()[0].coeff, f.inv(2));
  EXPECT_EQ(p.terms()[1].coeff, 1u);
  EXPECT_THROW(parse_poly("x0/1000000007", 2, f), Error);
}

TEST(ParsePoly, Aliases) {
  const VariableAliases xyz = {{"x", 0}, {"y", 1}, {"z", 2}};
  EXPECT_EQ(parse_poly_q("y*z - x^2", 3, xyz), Q("x1*x2 - x0^2"));
}

TEST(ParsePoly, ErrorsCarryPositions) {
  try {
    Q("x0 x1");
    FAIL() << "juxtaposition accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
    EXPECT_NE(std::string(e.what()).find("missing '*'"), std::string::npos);
  }
  try {
    Q("x0 +\n  x1^^2");
    FAIL() << "bad exponent accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Q("x0^-1"), ParseError);
  EXPECT_THROW(Q("x3"), ParseError);
  EXPECT_THROW(Q("x0/0"), ParseError);
  EXPECT_THROW(Q("(x0 + x1"), ParseError);
  EXPECT_THROW(Q(""), ParseError);
  EXPECT_THROW(Q("x0 + y"), ParseError);
}

TEST(ParsePoly, InferVariableCount) {
  EXPECT_EQ(infer_nvars("x0*x1*x2"), 3u);
  EXPECT_EQ(infer_nvars("x3 + x0"), 4u);
  EXPECT_EQ(infer_nvars("7"), 1u);
}

TEST(Properties, PrintParseRoundTrip) {
  SeedStream s(3);
  for (int round = 0; round < 50; ++round) {
    mpq_class c(round + 1, 7);
    c.canonicalize();
    const auto p = random_poly(RationalField{}, 4, 4, s).scaled(c);
    EXPECT_EQ(Q(to_string(p), 4), p) << to_string(p);
    const auto pp = random_poly(PrimeField{}, 4, 4, s);
    EXPECT_EQ(parse_poly(to_string(pp), 4, PrimeField{}), pp) << to_string(pp);
  }
  EXPECT_EQ(to_string(Q("0")), "0");
}

TEST(ParseWeights, Examples) {
  const std::vector<mpq_class> ones = {1, 1, 1};
  EXPECT_EQ(parse_weights("1,1,1"), ones);
  const std::vector<mpq_class> resonant = {1, -1, 1};
  EXPECT_EQ(parse_weights("1,-1,1"), resonant);
  const std::vector<mpq_class> fractions = {mpq_class(1, 2), mpq_class(-2, 3)};
  EXPECT_EQ(parse_weights(" 1/2 , -2/3"), fractions);
  EXPECT_THROW(parse_weights("1,0"), ParseError);
  EXPECT_THROW(parse_weights("1,,2"), ParseError);
  EXPECT_THROW(parse_weights("1/0"), ParseError);
  EXPECT_THROW(parse_weights("a"), ParseError);
}

// ---- reports ----

namespace {

ReportInput conic_input() {
  ReportInput in;
  in.command = "polar";
  in.polys = {"x0^2 + x1^2 + x2^2"};
  in.weights = {"1"};
  in.nvars = 3;
  in.field = FieldSpec::prime(kDefaultPrime);
  return in;
}

TrialOutcome good(long long v, u64 seed) { return {seed, v, true, true}; }

}  // namespace

TEST(Report, MajorityVote) {
  auto r = DegreeReport::from_trials(0, {good(2, 1), good(2, 2), good(3, 3)});
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 2);
  EXPECT_FALSE(r.stable);
  EXPECT_EQ(r.status(), "unstable");

  r = DegreeReport::from_trials(0, {good(2, 1), good(3, 2)});
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.status(), "error");

  r = DegreeReport::from_trials(0, {good(5, 1), good(5, 2), {3, -1, false, false}});
  EXPECT_EQ(r.value, 5);
  EXPECT_FALSE(r.stable);
}

TEST(Report, ProfileOfTheConic) {
  const std::vector<DegreeReport> rs = {DegreeReport::from_trials(0, {good(1, 10), good(1, 11)}),
                                        DegreeReport::from_trials(1, {good(1, 12), good(1, 13)})};
  const auto j = nlohmann::json::parse(emit_profile(rs, conic_input()));
  EXPECT_EQ(j["degrees"], nlohmann::json::array({1, 1}));
  EXPECT_EQ(j["stable"], true);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["command"], "polar");
  EXPECT_EQ(j["field"]["kind"], "prime-field");
  EXPECT_EQ(j["field"]["prime"], kDefaultPrime);
  EXPECT_EQ(j["input"]["nvars"], 3);
  EXPECT_EQ(j["trials"].size(), 4u);
}

TEST(Report, EmptyTrialListIsAnError) {
  const auto j = nlohmann::json::parse(emit_report(DegreeReport::from_trials(0, {}), conic_input()));
  EXPECT_EQ(j["status"], "error");
  EXPECT_TRUE(j.contains("message"));
  EXPECT_FALSE(j.contains("value"));
}

TEST(Report, MixedTrialsAreListedAndUnstable) {
  const auto r = DegreeReport::from_trials(1, {good(4, 1), good(4, 2), good(3, 3)});
  const auto j = nlohmann::json::parse(emit_report(r, conic_input()));
  EXPECT_EQ(j["stable"], false);
  EXPECT_EQ(j["status"], "unstable");
  ASSERT_EQ(j["trials"].size(), 3u);
  EXPECT_EQ(j["trials"][2]["value"], 3);
  EXPECT_EQ(j["trials"][2]["seed"], 3);
  EXPECT_EQ(j["i"], 1);
}

TEST(Report, KeysInSchemaOrder) {
  const auto r = DegreeReport::from_trials(0, {good(1, 1)});
  const std::string text = emit_report(r, conic_input());
  const std::vector<std::string> keys = {"\"command\"", "\"input\"", "\"field\"", "\"i\"",
                                         "\"value\"",   "\"trials\"", "\"stable\"", "\"status\""};
  std::size_t pos = 0;
  for (const auto& k : keys) {
    const auto at = text.find(k, pos);
    ASSERT_NE(at, std::string::npos) << k;
    pos = at;
  }
}
