#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "psh/report.hpp"

namespace psh {

// One verification job from a suite file: a named check with parameters and
// an expected status ("pass" or "info").
struct JobSpec {
  std::string check;
  std::map<std::string, std::string> params;
  std::string expect = "pass";

  std::string key() const;   // deterministic identity used for sorting
};

struct JobOutcome {
  JobSpec spec;
  CheckResult result;
  double wall_seconds = 0.0;
  bool error = false;        // input/setup error (exit code 2 territory)
  std::string error_text;

  bool ok() const;
};

// InputError means exit code 2 (bad parameters, unknown names); verification
// failures are ordinary outcomes with ok() == false.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> known_checks();
CheckResult run_check(const JobSpec& spec);

// Suite files: '#' comments; one "job <check> key=value ..." per line.
std::vector<JobSpec> parse_suite(const std::string& text);
std::vector<JobSpec> load_suite_file(const std::string& path);

struct SuiteReport {
  std::vector<JobOutcome> outcomes;  // sorted by job key
  long long rounding_count = 0;
  long long rounding_max_nano = 0;   // max guard deviation in nano-units
  double wall_seconds = 0.0;

  bool all_ok() const;
  std::string to_text(bool include_wall = true) const;
  std::string to_csv() const;
  std::string to_json() const;
};

SuiteReport run_suite(const std::vector<JobSpec>& jobs, int threads = 1);

// The acceptance criteria as job bundles: criterion number -> jobs.
std::map<int, std::vector<JobSpec>> acceptance_criteria();

}  // namespace psh
