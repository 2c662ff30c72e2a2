// Acceptance suite: runs the full verification program criterion by
// criterion and prints one pass/fail line for each.  Exit code is the number
// of failing criteria.  An optional argument restricts the run to one
// criterion: `acceptance 4`.

#include <cstdio>
#include <cstring>
#include <string>

#include "psh/ints.hpp"
#include "psh/jobs.hpp"

using namespace psh;

namespace {

const char* kTitles[14] = {
    "",
    "symmetric-function core: dimensions, Hopf axiom, adjointness, antipode",
    "Psi-calculus: Prop 19 (1)-(4) on random matrices, Prop 5",
    "Hopf-power character law: Psi^m(x_n) has character m^cycles",
    "Theorem 20: delta* = Psi^{M_{H,G}} per degree",
    "Theorem 16: R(G) is a [G:H]-PSH module over R(H)",
    "Theorem 21: M M^T = [G:H] I over the catalog",
    "Prop 18: delta* delta = Psi^{[G:H]}",
    "Corollary 22: R(G) = tensor of R^(dim omega)",
    "Prop 12: primitive-product inner products",
    "Theorem 13: decomposition partitions the irreducibles",
    "Prop 15: double coset counts match tuple counts",
    "Theorem 28: restricted wreath Gram matrices and surjectivity",
    "numerical guard discipline: every rounding within 1e-6",
};

}  // namespace

int main(int argc, char** argv) {
  int only = -1;
  if (argc > 1) only = std::atoi(argv[1]);
  auto criteria = acceptance_criteria();
  int failures = 0;
  for (const auto& [num, jobs] : criteria) {
    if (only > 0 && num != only) continue;
    bool ok = true;
    std::string witness;
    long long checked = 0;
    try {
      SuiteReport report = run_suite(jobs, 1);
      for (const auto& o : report.outcomes) {
        checked += o.result.checked;
        if (!o.ok()) {
          ok = false;
          if (witness.empty())
            witness = o.spec.key() + (o.result.witness.empty() ? "" : ": " + o.result.witness);
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      witness = e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  [%s] (%lld instances)\n", num, ok ? "PASS" : "FAIL",
                kTitles[num], checked);
    if (!ok) {
      std::string oneline = witness;
      for (auto& c : oneline)
        if (c == '\n') c = ' ';
      std::printf("              first failure: %s\n", oneline.c_str());
    }
  }
  return failures;
}
