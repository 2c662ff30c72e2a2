#pragma once

#include <string>
#include <vector>

namespace psh {

// Outcome of one verification: pass/fail with the first counterexample, or
// informational when the statement's hypothesis does not hold and the result
// is recorded without an expectation.
struct CheckResult {
  std::string name;
  bool pass = true;
  bool informational = false;
  long long checked = 0;      // number of instances exercised
  std::string witness;        // first counterexample, empty when pass
  std::vector<std::string> notes;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
  void merge(const CheckResult& o);
  std::string status() const {
    return informational ? "info" : (pass ? "pass" : "fail");
  }
};

}  // namespace psh
