#pragma once

#include <map>
#include <string>
#include <vector>

#include "psh/ints.hpp"
#include "psh/partition.hpp"

namespace psh {

// Sparse integer vector over the Schur basis of the symmetric-function ring.
// No zero coefficients are ever stored; equality is equality of term maps.
class SchurVector {
 public:
  SchurVector() = default;

  static SchurVector unit() { return basis(Partition{}); }
  static SchurVector basis(const Partition& lam);

  const std::map<Partition, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Partition& lam) const;

  void add_term(const Partition& lam, const Int& c);
  SchurVector& operator+=(const SchurVector& o);
  SchurVector& operator-=(const SchurVector& o);
  SchurVector& operator*=(const Int& c);

  // Terms whose partition has size n.
  SchurVector homogeneous(int n) const;
  int max_degree() const;
  bool is_positive() const;  // nonzero and all coefficients > 0

  friend bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SchurVector& a, const SchurVector& b) { return !(a == b); }

  // "3*s[2] + 1*s[1,1]"; the zero vector prints as "0".
  std::string to_string() const;

 private:
  std::map<Partition, Int> terms_;
};

SchurVector operator+(SchurVector a, const SchurVector& b);
SchurVector operator-(SchurVector a, const SchurVector& b);
SchurVector operator*(const Int& c, SchurVector a);

// Littlewood-Richardson coefficient <s_lam, s_mu s_nu>, computed by counting
// LR skew tableaux of shape lam/mu and content nu (lattice-word condition).
// Total: returns 0 on any size or containment mismatch.  Memoized; the memo
// behaves as if each coefficient were computed exactly once.
Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

SchurVector mul(const SchurVector& a, const SchurVector& b);
SchurVector operator*(const SchurVector& a, const SchurVector& b);

Int inner(const SchurVector& a, const SchurVector& b);

// Antipode: T(s_lam) = (-1)^|lam| s_{lam'}.  The defining identity
// mul(1 (x) T)comul = e e* is verified by the test suite rather than assumed.
SchurVector antipode(const SchurVector& a);

inline Int schur_dimension(const Partition& lam) { return partition_dimension(lam); }

// Parses "3*s[2] + 1*s[1,1]" or "s[2,1] - s[3]".
SchurVector parse_schur(const std::string& text);

}  // namespace psh
