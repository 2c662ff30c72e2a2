#pragma once

#include <string>
#include <vector>

#include "psh/graded.hpp"

namespace psh {

// Nonnegative integer l x k matrix driving the map Psi^M : R^(x)k -> R^(x)l:
// comultiply every component l-fold, apply the Hopf power Psi^{m_ij} to the
// ij entry, then multiply along rows.
struct HopfMatrix {
  int rows = 1;
  int cols = 1;
  std::vector<std::vector<int>> m;

  HopfMatrix(int l, int k, int fill = 0);
  explicit HopfMatrix(std::vector<std::vector<int>> entries);

  static HopfMatrix identity(int k);
  HopfMatrix transpose() const;
  HopfMatrix operator*(const HopfMatrix& o) const;   // ordinary matrix product
  HopfMatrix operator+(const HopfMatrix& o) const;

  static HopfMatrix parse(const std::string& text);  // "l k" header then rows
  std::string to_string() const;
};

GradedVector psi_matrix(const HopfMatrix& M, const GradedVector& v);

}  // namespace psh
