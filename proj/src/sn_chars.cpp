#include "psh/sn_chars.hpp"

#include <algorithm>
#include <stdexcept>

namespace psh {

namespace {

// Beta-number form of the Murnaghan-Nakayama recursion: removing a border
// strip of length m is replacing some beta number b by b-m (staying distinct),
// with sign given by how many beta numbers the move jumps over.
Int mn_recurse(std::vector<int>& beta, const std::vector<int>& cycles, size_t ci) {
  if (ci == cycles.size()) return 1;
  const int m = cycles[ci];
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < m) continue;
    const int target = b - m;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int other : beta)
      if (other > target && other < b) ++jumped;
    beta[i] = target;
    Int sub = mn_recurse(beta, cycles, ci + 1);
    beta[i] = b;
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

Int sn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("sn_character: |lambda| != |mu|");
  const int rows = lambda.rows();
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lambda.part(i) + (rows - 1 - i);
  return mn_recurse(beta, mu.parts(), 0);
}

ClassFunction sn_class_function(const Partition& lambda, const GroupData& sn) {
  const auto& perms = sn.group->perms();
  if (perms.empty())
    throw std::invalid_argument("sn_class_function needs a permutation-built group");
  std::vector<Complex> vals(sn.classes->count());
  for (int c = 0; c < sn.classes->count(); ++c) {
    Partition type = cycle_type(perms[sn.classes->reps[c]]);
    vals[c] = double(sn_character(lambda, type).convert_to<long long>());
  }
  return ClassFunction(sn, std::move(vals));
}

}  // namespace psh
