#include <gtest/gtest.h>

#include <radring/errors.hpp>
#include <radring/json.hpp>

#include "radring_cli/commands.hpp"
#include "radring_cli/verify.hpp"

using namespace radring;

TEST(Json, FieldSpecRoundTrip) {
  for (const auto& spec :
       {gfq::FieldSpec::prime(13), gfq::FieldSpec::galois(3, 2, 4), gfq::FieldSpec::galois(2, 5)}) {
    const json j = spec;
    EXPECT_EQ(j.get<gfq::FieldSpec>(), spec);
  }
  EXPECT_EQ(json(gfq::FieldSpec::prime(7)).dump(), R"({"k":1,"modulus":[0,1],"p":7})");
}

TEST(Json, ElementFormDependsOnDegree) {
  EXPECT_EQ(json(gfq::FqElement::from_integer(gfq::FieldSpec::prime(7), -1)), json(6));
  const auto f9 = gfq::FieldSpec::galois(3, 2);
  const auto x = gfq::FqElement::from_index(f9, 5);
  const json j = x;
  EXPECT_TRUE(j.is_array());
  EXPECT_EQ(gfq::element_from_json(f9, j), x);
}

TEST(Json, RingElementRoundTrip) {
  const auto a = ring::RingElement::from_signed(ring::make_params(13, 3, 5), {1, -2, 7});
  const json j = a;
  EXPECT_EQ(j.at("coeffs"), json({1, 11, 7}));
  EXPECT_EQ(j.get<ring::RingElement>(), a);
  json bad = j;
  bad["r"] = 13;
  EXPECT_THROW(bad.get<ring::RingElement>(), DomainError);
}

TEST(Json, FactorizationRoundTrip) {
  const auto spec = gfq::FieldSpec::galois(2, 3);
  const auto rep = factor::factor_monic(factor::Poly::binomial(7, gfq::one(spec)));
  const json j = rep;
  const auto back = j.get<factor::FactorizationReport>();
  EXPECT_EQ(back.input, rep.input);
  EXPECT_EQ(back.factors, rep.factors);
  EXPECT_EQ(back.unit, rep.unit);
  EXPECT_EQ(json(back), j);
}

TEST(Json, StructureRoundTrip) {
  const auto v = structure::is_field(5, 2, -1);
  EXPECT_EQ(json(v).get<structure::FieldVerdict>(), v);
  const auto c = structure::count_irreducible(gfq::FieldSpec::prime(13), 3);
  EXPECT_EQ(json(c).get<structure::CountReport>(), c);
  const auto d = structure::ring_decomposition(
      gfq::FieldSpec::prime(13), 3, gfq::FqElement::from_integer(gfq::FieldSpec::prime(13), 5));
  EXPECT_EQ(json(d).get<structure::Decomposition>(), d);
  const auto f9 = gfq::FieldSpec::galois(3, 2);
  const auto s = structure::splitting_type(f9, 4, gfq::FqElement::from_index(f9, 4));
  EXPECT_EQ(json(s).get<structure::SplittingType>(), s);
}

TEST(Json, VerifyReportRoundTrip) {
  cli::VerifyOptions opts;
  opts.max_p = 7;
  opts.max_m = 2;
  for (const auto& rep : cli::run_suite("counting", opts)) {
    EXPECT_EQ(json(rep).get<cli::VerifyReport>(), rep);
  }
  cli::VerifyReport r{"s", "t", {{"n", 1}}, 1, 3, {{{{"n", 2}}, 1, 2}}};
  EXPECT_EQ(json(r).get<cli::VerifyReport>(), r);
  EXPECT_FALSE(r.ok());
}

TEST(Json, CliReportsParseBack) {
  cli::Options opts;
  const auto e = cli::cmd_element(5, 2, -1, {3, 4}, std::nullopt, opts);
  const auto j = json::parse(e.report.dump());
  EXPECT_EQ(j.at("det"), 0);
  EXPECT_EQ(j.at("zero_divisor").at("witness"), json({3, 1}));
  const auto a = cli::cmd_analyze(13, 3, 5, opts);
  const auto ja = json::parse(a.report.dump());
  EXPECT_EQ(ja.at("verdict").get<structure::FieldVerdict>(), structure::is_field(13, 3, 5));
  EXPECT_EQ(ja.at("factorization").get<factor::FactorizationReport>().factors.size(), 3u);
  EXPECT_EQ(ja.at("unit_count"), 1728);
}
