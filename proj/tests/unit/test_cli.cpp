#include <gtest/gtest.h>

#include <radring/errors.hpp>

#include "radring_cli/commands.hpp"
#include "radring_cli/verify.hpp"

using namespace radring;
using namespace radring::cli;

namespace {

std::vector<std::string> factor_texts(const json& fac) {
  std::vector<std::string> out;
  for (const auto& f : fac.at("factors")) out.push_back(f.at("text"));
  return out;
}

}  // namespace

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(parse_coeffs("3, -1,0"), (std::vector<std::int64_t>{3, -1, 0}));
  EXPECT_THROW(parse_coeffs("3,a"), DomainError);
  EXPECT_EQ(parse_field("13", 0), gfq::FieldSpec::prime(13));
  EXPECT_EQ(parse_field("3^2", 0).q(), 9u);
  EXPECT_THROW(parse_field("12", 0), DomainError);
  EXPECT_THROW(parse_field("x", 0), DomainError);
}

TEST(Cli, ElementZeroDivisor) {
  const auto r = cmd_element(5, 2, -1, {3, 4}, std::vector<std::int64_t>{3, 1}, {});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report.at("det"), 0);
  EXPECT_EQ(r.report.at("is_unit"), false);
  EXPECT_EQ(r.report.at("zero_divisor").at("status"), "found");
  EXPECT_EQ(r.report.at("zero_divisor").at("product"), json({0, 0}));
  EXPECT_EQ(r.report.at("product"), json({0, 0}));
  EXPECT_EQ(r.report.at("sum"), json({1, 0}));
}

TEST(Cli, ElementInverse) {
  const auto r = cmd_element(7, 2, 3, {2, 3}, std::nullopt, {});
  EXPECT_EQ(r.report.at("det"), 5);
  EXPECT_EQ(r.report.at("inverse"), json({6, 5}));
  EXPECT_EQ(r.report.at("zero_divisor").at("status"), "unit");
  EXPECT_THROW(cmd_element(7, 2, 3, {2, 3, 4}, std::nullopt, {}), DomainError);
}

TEST(Cli, Analyze) {
  auto r = cmd_analyze(5, 2, -1, {});
  EXPECT_EQ(factor_texts(r.report.at("factorization")), (std::vector<std::string>{"x+2", "x+3"}));
  EXPECT_EQ(r.report.at("unit_count"), 16);
  EXPECT_EQ(r.report.at("verdict").at("is_field"), false);
  r = cmd_analyze(3, 2, 2, {});
  EXPECT_EQ(r.report.at("verdict").at("is_field"), true);
  EXPECT_EQ(r.report.at("unit_count"), 8);
  r = cmd_analyze(12, 2, 5, {});
  EXPECT_EQ(r.report.at("crt_split"), json({4, 3}));
  EXPECT_EQ(r.report.at("verdict").at("reasons").at(0).at("code"), "COMPOSITE_N");
  EXPECT_NE(r.text.find("Z_12[x]/(x^2-5)"), std::string::npos);
}

TEST(Cli, Factor) {
  auto r = cmd_factor("13", 3, 5, {});
  EXPECT_EQ(r.report.at("prediction").at("status"), "MATCH");
  EXPECT_EQ(r.exit_code, kExitOk);
  r = cmd_factor("7", 3, 2, {});
  EXPECT_EQ(r.report.at("prediction").at("status"), "MATCH");
  EXPECT_EQ(r.report.at("factorization").at("factors").size(), 1u);
  r = cmd_factor("5", 3, 2, {});
  EXPECT_EQ(r.report.at("certificate").at("d"), 3);
  EXPECT_EQ(r.report.at("certificate").at("b"), 3);
  EXPECT_EQ(r.report.at("certificate").at("divides"), true);
  r = cmd_factor("3^2", 4, 2, {});
  EXPECT_EQ(r.report.at("prediction").at("status"), "MATCH");
  r = cmd_factor_poly("5", "1,1,1", {});
  EXPECT_EQ(r.report.at("prediction").at("status"), "n/a");
  EXPECT_EQ(cmd_factor_poly("5", "x^3-2", {}).report.at("certificate").at("d"), 3);
}

TEST(Cli, CountIrreducible) {
  auto r = cmd_count_irreducible("13", 3, {});
  EXPECT_EQ(r.report.at("count").at("M"), 3);
  EXPECT_EQ(r.report.at("count").at("predicted"), 8);
  EXPECT_EQ(r.report.at("status"), "MATCH");
  EXPECT_EQ(cmd_count_irreducible("13", 2, {}).report.at("count").at("predicted"), 6);
  EXPECT_THROW(cmd_count_irreducible("7", 4, {}), HypothesisError);
}

TEST(Cli, VerifyIsDeterministicAcrossWorkers) {
  Options a;
  a.max_p = 7;
  a.max_m = 3;
  a.seed = 5;
  Options b = a;
  b.workers = 4;
  const auto ra = cmd_verify("all", a);
  const auto rb = cmd_verify("all", b);
  EXPECT_EQ(ra.report.dump(), rb.report.dump());
  EXPECT_EQ(ra.report.dump(), cmd_verify("all", a).report.dump());
  EXPECT_EQ(ra.text, rb.text);
  EXPECT_EQ(ra.report.at("ok"), true);
  EXPECT_EQ(ra.exit_code, kExitOk);
}

TEST(Cli, SuitesAndSections) {
  EXPECT_EQ(suite_names().back(), "all");
  for (const auto& s : suite_names()) {
    if (s != "all") EXPECT_FALSE(section_names(s).empty()) << s;
  }
  EXPECT_THROW(section_names("nope"), std::invalid_argument);
  VerifyOptions o;
  EXPECT_THROW(run_section("splitting", "nope", o), std::invalid_argument);
}

TEST(Cli, RunTasksReportsFailuresInOrder) {
  std::vector<detail::Task> tasks;
  std::vector<json> points;
  for (int i = 0; i < 50; ++i) {
    points.push_back({{"i", i}});
    tasks.push_back([i] {
      detail::TaskResult res;
      if (i == 13) throw std::runtime_error("boom");
      if (!res.check(i % 10 != 7)) res.fail({{"i", i}}, true, false);
      return res;
    });
  }
  const auto out = detail::run_tasks(tasks, 8, points);
  ASSERT_EQ(out.size(), 50u);
  EXPECT_EQ(out[7].failures.size(), 1u);
  EXPECT_EQ(out[17].failures.size(), 1u);
  ASSERT_EQ(out[13].failures.size(), 1u);
  EXPECT_EQ(out[13].failures[0].point, json({{"i", 13}}));
  EXPECT_EQ(out[0].checked, 1u);
}

TEST(Cli, PythagoreanGridIsThePrimesToHundred) {
  const auto rep = run_section("pythagorean", "pythagorean", {});
  EXPECT_EQ(rep.points, 25u);
  EXPECT_GE(rep.checked, rep.points);
  EXPECT_TRUE(rep.ok());
}
