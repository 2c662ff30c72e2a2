#pragma once

#include <map>
#include <string>
#include <vector>

#include "psh/schur.hpp"

namespace psh {

using PartitionTuple = std::vector<Partition>;

int tuple_degree(const PartitionTuple& t);
std::string tuple_to_string(const PartitionTuple& t);  // "s[2](x)s[1,1]"

struct TupleLess {
  bool operator()(const PartitionTuple& a, const PartitionTuple& b) const;
};

// Element of R^(x)k: sparse integer combination of k-tuples of partitions.
// Arity 1 coincides with SchurVector (conversions below).
class GradedVector {
 public:
  explicit GradedVector(int arity);
  static GradedVector unit(int arity);
  static GradedVector basis(PartitionTuple t);

  int arity() const { return arity_; }
  const std::map<PartitionTuple, Int, TupleLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const PartitionTuple& t) const;

  void add_term(const PartitionTuple& t, const Int& c);
  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector& operator*=(const Int& c);
  GradedVector homogeneous(int n) const;

  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedVector& a, const GradedVector& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int arity_;
  std::map<PartitionTuple, Int, TupleLess> terms_;
};

GradedVector operator+(GradedVector a, const GradedVector& b);
GradedVector operator-(GradedVector a, const GradedVector& b);

GradedVector to_graded(const SchurVector& a);
SchurVector to_schur(const GradedVector& a);  // arity must be 1

// Componentwise product on R^(x)k (arities must match).
GradedVector tensor_mul(const GradedVector& a, const GradedVector& b);

// Outer tensor R^(x)k x R^(x)l -> R^(x)(k+l).
GradedVector tensor_concat(const GradedVector& a, const GradedVector& b);

Int tensor_inner(const GradedVector& a, const GradedVector& b);

// Iterated comultiplication of R: arity-k image of a single Schur vector.
// k = 1 is the identity embedding; k = 2 is the comultiplication itself.
GradedVector comul_iter(const SchurVector& a, int k);
inline GradedVector comul(const SchurVector& a) { return comul_iter(a, 2); }

// Hopf k-th power map on R; Psi^0 = e e*, Psi^1 = id.
SchurVector hopf_power(int k, const SchurVector& a);

// Full comultiplication of R^(x)k iterated to n blocks: arity k -> n*k, the
// n blocks stored contiguously.  Together with tensor_mul_blocks this gives
// the Hopf power of the tensor algebra by its definition, independent of the
// matrix-map machinery.
GradedVector tensor_comul_iter(const GradedVector& v, int n);
GradedVector tensor_mul_blocks(const GradedVector& w, int k, int n);
SchurVector hopf_power_via_tensor(int k, const SchurVector& a);  // same map, other route
GradedVector tensor_hopf_power(int n, const GradedVector& v);

GradedVector parse_graded(const std::string& text, int arity);

}  // namespace psh
