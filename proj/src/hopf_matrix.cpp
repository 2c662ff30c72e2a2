#include "psh/hopf_matrix.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace psh {

HopfMatrix::HopfMatrix(int l, int k, int fill)
    : rows(l), cols(k), m(l, std::vector<int>(k, fill)) {
  if (l < 1 || k < 1) throw std::invalid_argument("HopfMatrix dims must be >= 1");
  if (fill < 0) throw std::invalid_argument("HopfMatrix entries must be >= 0");
}

HopfMatrix::HopfMatrix(std::vector<std::vector<int>> entries) : m(std::move(entries)) {
  rows = static_cast<int>(m.size());
  if (rows == 0) throw std::invalid_argument("HopfMatrix needs at least one row");
  cols = static_cast<int>(m[0].size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("ragged HopfMatrix");
    for (int e : row)
      if (e < 0) throw std::invalid_argument("HopfMatrix entries must be >= 0");
  }
  if (cols == 0) throw std::invalid_argument("HopfMatrix needs at least one column");
}

HopfMatrix HopfMatrix::identity(int k) {
  HopfMatrix out(k, k, 0);
  for (int i = 0; i < k; ++i) out.m[i][i] = 1;
  return out;
}

HopfMatrix HopfMatrix::transpose() const {
  HopfMatrix out(cols, rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.m[j][i] = m[i][j];
  return out;
}

HopfMatrix HopfMatrix::operator*(const HopfMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("HopfMatrix product shape mismatch");
  HopfMatrix out(rows, o.cols, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      int s = 0;
      for (int t = 0; t < cols; ++t) s += m[i][t] * o.m[t][j];
      out.m[i][j] = s;
    }
  return out;
}

HopfMatrix HopfMatrix::operator+(const HopfMatrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("HopfMatrix sum shape mismatch");
  HopfMatrix out(rows, cols, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.m[i][j] = m[i][j] + o.m[i][j];
  return out;
}

HopfMatrix HopfMatrix::parse(const std::string& text) {
  std::istringstream is(text);
  int l = 0, k = 0;
  if (!(is >> l >> k)) throw std::invalid_argument("HopfMatrix: missing 'rows cols' header");
  HopfMatrix out(l, k, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < k; ++j) {
      int e;
      if (!(is >> e)) throw std::invalid_argument("HopfMatrix: not enough entries");
      if (e < 0) throw std::invalid_argument("HopfMatrix entries must be >= 0");
      out.m[i][j] = e;
    }
  return out;
}

std::string HopfMatrix::to_string() const {
  std::ostringstream os;
  os << rows << ' ' << cols << '\n';
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ' ';
      os << m[i][j];
    }
    os << '\n';
  }
  return os.str();
}

GradedVector psi_matrix(const HopfMatrix& M, const GradedVector& v) {
  if (M.cols != v.arity())
    throw std::invalid_argument("psi_matrix: matrix has " + std::to_string(M.cols) +
                                " columns but vector arity is " + std::to_string(v.arity()));
  const int l = M.rows;
  const int k = M.cols;
  GradedVector out(l);
  for (const auto& [tuple, c0] : v.terms()) {
    // l-fold comultiplication of each component
    std::vector<GradedVector> col_splits;
    col_splits.reserve(k);
    for (int j = 0; j < k; ++j)
      col_splits.push_back(comul_iter(SchurVector::basis(tuple[j]), l));
    // cartesian product over columns; mat[i][j] = i-th factor of column j
    std::vector<PartitionTuple> chosen(k);
    std::function<void(int, const Int&)> over_columns = [&](int j, const Int& c) {
      if (j == k) {
        // row products with entrywise Hopf powers
        std::vector<SchurVector> row_vals(l);
        for (int i = 0; i < l; ++i) {
          SchurVector prod = SchurVector::unit();
          for (int jj = 0; jj < k; ++jj) {
            prod = mul(prod, hopf_power(M.m[i][jj], SchurVector::basis(chosen[jj][i])));
            if (prod.is_zero()) break;
          }
          row_vals[i] = std::move(prod);
          if (row_vals[i].is_zero()) return;
        }
        PartitionTuple tup(l);
        std::function<void(int, const Int&)> over_rows = [&](int i, const Int& cc) {
          if (i == l) {
            out.add_term(tup, cc);
            return;
          }
          for (const auto& [lam, cl] : row_vals[i].terms()) {
            tup[i] = lam;
            over_rows(i + 1, cc * cl);
          }
        };
        over_rows(0, c);
        return;
      }
      for (const auto& [split, cs] : col_splits[j].terms()) {
        chosen[j] = split;
        over_columns(j + 1, c * cs);
      }
    };
    over_columns(0, c0);
  }
  return out;
}

}  // namespace psh
