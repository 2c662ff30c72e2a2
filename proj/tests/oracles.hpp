#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <set>
#include <vector>

#include "psh/partition.hpp"
#include "psh/schur.hpp"

namespace psh::testing {

// Pieri rule: s_mu * s_(k) = sum of s_lam over lam obtained from mu by adding
// a horizontal strip of k boxes (no two added boxes in one column).
inline SchurVector pieri_row(const Partition& mu, int k) {
  SchurVector out;
  for (const auto& lam : partitions_of_containing(mu.size() + k, mu)) {
    bool horizontal = true;
    // horizontal strip: lam_i <= mu_{i-1} for every row i >= 1
    for (int i = 1; i < lam.rows(); ++i) {
      if (lam.part(i) > mu.part(i - 1)) {
        horizontal = false;
        break;
      }
    }
    if (horizontal) out.add_term(lam, 1);
  }
  return out;
}

// Dual Pieri: s_mu * s_(1^k) adds a vertical strip.
inline SchurVector pieri_column(const Partition& mu, int k) {
  SchurVector out;
  for (const auto& lam : partitions_of_containing(mu.size() + k, mu)) {
    bool vertical = true;
    for (int i = 0; i < lam.rows(); ++i) {
      if (lam.part(i) - mu.part(i) > 1) {
        vertical = false;
        break;
      }
    }
    if (vertical) out.add_term(lam, 1);
  }
  return out;
}

}  // namespace psh::testing
