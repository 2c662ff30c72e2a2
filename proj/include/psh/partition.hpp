#pragma once

#include <string>
#include <vector>

#include "psh/ints.hpp"

namespace psh {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is the unique partition of 0 and is the unit of the Schur basis.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }           // sum of parts (the degree)
  int rows() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  // part(i) for i >= rows() is 0, which keeps containment tests uniform.
  int part(int i) const { return i < rows() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;

  // Canonical total order: by degree, then reverse-lexicographic on parts,
  // so within one degree (3) < (2,1) < (1,1,1).  All printed output and all
  // sparse containers rely on this order being fixed.
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  std::string to_string() const;  // "[2,1]", "[]" for the empty partition

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

// Partitions of n containing mu (needed when multiplying lambda-outer).
std::vector<Partition> partitions_of_containing(int n, const Partition& mu);

// Hook length product and the hook-length dimension formula.
Int hook_product(const Partition& lam);
Int partition_dimension(const Partition& lam);  // |lam|! / hook product

// Cycle type of a permutation given as images 0..n-1 -> 0..n-1.
Partition cycle_type(const std::vector<int>& perm);

Partition parse_partition(const std::string& text);  // accepts "2,1" or "[2,1]"

}  // namespace psh
