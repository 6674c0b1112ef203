// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <radring/errors.hpp>

#include "radring_cli/commands.hpp"
#include "radring_cli/verify.hpp"

namespace cli = radring::cli;
using radring::json;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

// All listed sections pass; optionally require a minimum number of checks.
Outcome sections(const cli::VerifyOptions& opts,
                 const std::vector<std::pair<std::string, std::string>>& which,
                 radring::numth::Natural min_checked = 1) {
  Outcome out{true, {}};
  for (const auto& [suite, section] : which) {
    const auto rep = cli::run_section(suite, section, opts);
    const bool ok = rep.ok() && rep.checked >= min_checked;
    out.ok = out.ok && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += suite + "/" + section + " checked " + std::to_string(rep.checked) +
                  ", failures " + std::to_string(rep.failures.size());
    if (!rep.failures.empty()) out.detail += " first " + json(rep.failures.front()).dump();
  }
  return out;
}

Outcome zero_divisor_example() {
  cli::Options opts;
  const auto e = cli::cmd_element(5, 2, -1, {3, 4}, std::nullopt, opts).report;
  const auto a = cli::cmd_analyze(5, 2, -1, opts).report;
  std::vector<std::string> factors;
  for (const auto& f : a.at("factorization").at("factors")) factors.push_back(f.at("text"));
  const bool ok = e.at("det") == 0 && e.at("zero_divisor").at("status") == "found" &&
                  e.at("zero_divisor").at("product") == json({0, 0}) &&
                  factors == std::vector<std::string>{"x+2", "x+3"} &&
                  a.at("verdict").at("is_field") == false;
  return {ok, "det " + e.at("det").dump() + ", witness " +
                  e.at("zero_divisor").at("witness").dump() + ", factors " + json(factors).dump()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for radring"};
  cli::VerifyOptions opts;
  app.add_option("--seed", opts.seed);
  app.add_option("--workers", opts.workers)->check(CLI::Range(1u, 256u));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"C1", "Z_5[sqrt(-1)] has the zero divisor 3+4s and x^2+1 = (x+2)(x+3)",
       zero_divisor_example},
      {"C2", "Z_p[i] is a field iff p = 3 mod 4",
       [&] { return sections(opts, {{"pythagorean", "pythagorean"}}); }},
      {"C3", "a is a unit iff gcd(det, n) = 1, at least 1e5 checks",
       [&] { return sections(opts, {{"determinant", "unit-criterion"}}, 100000); }},
      {"C4", "closed-form determinants for m = 2, 3",
       [&] { return sections(opts, {{"determinant", "closed-forms"}}); }},
      {"C5", "Z_n[x]/(x^m-r) is a field iff n prime and x^m-r irreducible",
       [&] { return sections(opts, {{"field-criterion", "field-verdict"}}); }},
      {"C6", "x^m - r splits into m/t factors of degree t",
       [&] { return sections(opts, {{"splitting", "splitting-type"}}); }},
      {"C7", "unit count (q^t - 1)^(m/t)",
       [&] { return sections(opts, {{"splitting", "unit-counts"}}); }},
      {"C8", "number of irreducible x^m - r is phi(M)(q-1)/M",
       [&] { return sections(opts, {{"counting", "counting"}}); }},
      {"C9", "power-map criteria",
       [&] {
         return sections(opts, {{"power-map", "onto-gcd"},
                                {"power-map", "linear-factor"},
                                {"power-map", "root-criterion"},
                                {"power-map", "cubic-form"}});
       }},
      {"C10", "fast factorization agrees with trial division",
       [&] { return sections(opts, {{"oracle-agreement", "oracle-agreement"}}); }},
      {"C11", "squarefree m not dividing q-1 gives a reducibility certificate",
       [&] { return sections(opts, {{"counting", "squarefree"}}); }},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    passed += o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << o.detail << "]"
              << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
