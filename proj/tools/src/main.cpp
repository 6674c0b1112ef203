#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <radring/errors.hpp>

#include "radring_cli/commands.hpp"
#include "radring_cli/verify.hpp"

namespace cli = radring::cli;

int main(int argc, char** argv) {
  CLI::App app{"Structure of Z_n[x]/(x^m - r) and factorization of x^m - r over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  cli::Options opts;
  std::optional<std::uint64_t> cap;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_option("--seed", opts.seed, "Seed for randomized splitting and field construction");
  app.add_option("--workers", opts.workers, "Worker threads for verify")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--max-p", opts.max_p, "Override a verify grid's modulus / prime bound");
  app.add_option("--max-m", opts.max_m, "Override a verify grid's degree bound");
  app.add_option("--cap", cap, "Enumeration, witness and trial-division cap");

  std::int64_t n = 0, m = 0, r = 0;
  std::string field, coeffs, coeffs2, suite;

  auto* analyze =
      app.add_subcommand("analyze", "Field verdict, factors and unit count of Z_n[x]/(x^m-r)");
  analyze->add_option("n", n)->required();
  analyze->add_option("m", m)->required();
  analyze->add_option("r", r)->required();

  auto* element =
      app.add_subcommand("element", "Determinant, inverse or zero-divisor witness of an element");
  element->add_option("n", n)->required();
  element->add_option("m", m)->required();
  element->add_option("r", r)->required();
  element->add_option("coeffs", coeffs, "Ascending coefficients, e.g. 3,4")->required();
  element->add_option("coeffs2", coeffs2, "Second element: also print sum and product");

  auto* factor =
      app.add_subcommand("factor", "Factor x^m - r over F_q and compare with the splitting type");
  std::string poly;
  factor->add_option("q", field, "Prime p or prime power p^k")->required();
  auto* factor_m = factor->add_option("m", m);
  auto* factor_r = factor->add_option("r", r);
  auto* factor_poly =
      factor->add_option("--poly", poly, "Polynomial instead of m r: x^3-2 or 1,0,0,-2");
  factor_poly->excludes(factor_m)->excludes(factor_r);

  auto* count =
      app.add_subcommand("count-irreducible", "Count r making x^m - r irreducible over F_q");
  count->add_option("q", field, "Prime p or prime power p^k")->required();
  count->add_option("m", m)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(cli::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }
  if (cap) {
    opts.limits.enumeration = *cap;
    opts.limits.witness = *cap;
    opts.limits.brute = *cap;
  }

  try {
    cli::CommandResult result;
    if (analyze->parsed()) {
      result = cli::cmd_analyze(n, m, r, opts);
    } else if (element->parsed()) {
      std::optional<std::vector<std::int64_t>> other;
      if (!coeffs2.empty()) other = cli::parse_coeffs(coeffs2);
      result = cli::cmd_element(n, m, r, cli::parse_coeffs(coeffs), other, opts);
    } else if (factor->parsed()) {
      if (!poly.empty()) {
        result = cli::cmd_factor_poly(field, poly, opts);
      } else if (factor_m->count() == 0 || factor_r->count() == 0) {
        std::cerr << "error: factor needs either m r or --poly\n";
        return cli::kExitUsage;
      } else {
        result = cli::cmd_factor(field, m, r, opts);
      }
    } else if (count->parsed()) {
      result = cli::cmd_count_irreducible(field, m, opts);
    } else {
      result = cli::cmd_verify(suite, opts);
    }
    if (as_json) {
      std::cout << result.report.dump(2) << '\n';
    } else {
      std::cout << result.text;
    }
    return result.exit_code;
  } catch (const radring::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const radring::RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return cli::kExitVerificationFailure;
  }
}
