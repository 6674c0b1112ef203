#pragma once

// Command implementations behind the radring executable. Each returns the JSON
// report, its text rendering and the process exit code; main() only parses
// arguments and prints.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <radring/gfq.hpp>
#include <radring/json.hpp>
#include <radring/limits.hpp>

namespace radring::cli {

using numth::Natural;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
};

struct Options {
  Natural seed = 0;
  unsigned workers = 1;
  std::optional<Natural> max_p;
  std::optional<Natural> max_m;
  Limits limits;
};

struct CommandResult {
  json report;
  std::string text;
  int exit_code = kExitOk;
};

// "13" is F_13; "3^2" is F_9 on find_irreducible(3, 2, seed).
gfq::FieldSpec parse_field(const std::string& text, Natural seed);

// "3,4" or "3,-1"; blanks are ignored.
std::vector<std::int64_t> parse_coeffs(const std::string& text);

CommandResult cmd_analyze(std::int64_t n, std::int64_t m, std::int64_t r, const Options& opts);

CommandResult cmd_element(std::int64_t n, std::int64_t m, std::int64_t r,
                          const std::vector<std::int64_t>& coeffs,
                          const std::optional<std::vector<std::int64_t>>& other,
                          const Options& opts);

CommandResult cmd_factor(const std::string& field, std::int64_t m, std::int64_t r,
                         const Options& opts);

// Factors a polynomial given as text ("x^3-2" or "1,0,0,-2"); binomials get
// the same prediction as cmd_factor.
CommandResult cmd_factor_poly(const std::string& field, const std::string& poly,
                              const Options& opts);

CommandResult cmd_count_irreducible(const std::string& field, std::int64_t m, const Options& opts);

CommandResult cmd_verify(const std::string& suite, const Options& opts);

}  // namespace radring::cli
