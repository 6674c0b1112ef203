#pragma once

// Exhaustive sweeps that check the library's structural claims against independent
// enumeration. A suite is a list of sections; a section is a grid of
// independent tasks run on a worker pool and merged in grid order, so the
// report does not depend on the worker count.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <radring/json.hpp>
#include <radring/limits.hpp>

namespace radring::cli {

using numth::Natural;

struct VerifyOptions {
  Natural seed = 0;
  unsigned workers = 1;
  std::optional<Natural> max_p;  // replaces a section's modulus / prime bound
  std::optional<Natural> max_m;  // replaces a section's degree bound
  Limits limits;
};

struct Failure {
  json point;
  json expected;
  json actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerifyReport {
  std::string suite;
  std::string section;
  json grid;
  Natural points = 0;   // grid points (tasks) run
  Natural checked = 0;  // individual assertions evaluated
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// Suites accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

// Sections of one suite, in run order.
std::vector<std::string> section_names(const std::string& suite);

// Throws std::invalid_argument for an unknown name.
VerifyReport run_section(const std::string& suite, const std::string& section,
                         const VerifyOptions& opts);
std::vector<VerifyReport> run_suite(const std::string& suite, const VerifyOptions& opts);

void to_json(json& j, const Failure& f);
void from_json(const json& j, Failure& f);
void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);

// Pieces shared with the tests.
namespace detail {

struct TaskResult {
  Natural checked = 0;
  std::vector<Failure> failures;

  // Counts one check; failure details are only built by fail().
  bool check(bool ok) {
    ++checked;
    return ok;
  }
  void fail(json point, json expected, json actual) {
    failures.push_back({std::move(point), std::move(expected), std::move(actual)});
  }
};

using Task = std::function<TaskResult()>;

// Runs tasks on `workers` threads; results come back in task order. A task
// that throws becomes a single failure carrying the exception text.
std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, unsigned workers,
                                  const std::vector<json>& points);

}  // namespace detail

}  // namespace radring::cli
