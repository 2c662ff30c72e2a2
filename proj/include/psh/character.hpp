#pragma once

#include <memory>
#include <vector>

#include "psh/group.hpp"
#include "psh/ints.hpp"

namespace psh {

struct Classes {
  std::vector<int> class_of;  // element -> class index
  std::vector<int> reps;      // class -> smallest element, reps[0] = identity
  std::vector<int> sizes;
  int count() const { return static_cast<int>(reps.size()); }
};

std::shared_ptr<const Classes> conjugacy_classes(const GroupPtr& g);

// Group bundled with its conjugacy data; the unit of account for all
// character arithmetic.
struct GroupData {
  GroupPtr group;
  std::shared_ptr<const Classes> classes;
};

GroupData make_group_data(const GroupPtr& g);

// Complex-valued function constant on conjugacy classes.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupData g, std::vector<Complex> values);

  const GroupData& carrier() const { return g_; }
  int class_count() const { return static_cast<int>(vals_.size()); }
  const Complex& at_class(int c) const { return vals_[c]; }
  const Complex& at_element(int x) const { return vals_[g_.classes->class_of[x]]; }
  std::vector<Complex>& values() { return vals_; }
  const std::vector<Complex>& values() const { return vals_; }

 private:
  GroupData g_;
  std::vector<Complex> vals_;
};

// (1/|G|) sum_g a(g) conj(b(g))
Complex cf_inner(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_pointwise_mul(const ClassFunction& a, const ClassFunction& b);

// Irreducible characters of g in the canonical order: ascending degree, then
// lexicographically largest value sequence first (values rounded to 1e-6 over
// the fixed class order).  Computed by Burnside's class-sum method: common
// eigenvectors of the class multiplication matrices, found with a seeded
// random linear combination and a dense complex eigensolver, then validated
// against row orthogonality; degrees must round to integers with
// sum of squares exactly |G|.
struct CharacterTable {
  GroupData g;
  std::vector<std::vector<Complex>> chi;  // chi[i][c]
  std::vector<int> degrees;

  int irr_count() const { return static_cast<int>(chi.size()); }
  ClassFunction irr(int i) const { return ClassFunction(g, chi[i]); }
};

CharacterTable character_table(const GroupPtr& g, int order_cap = 500);

// Frobenius induced-character formula along an embedding.
ClassFunction induced(const SubgroupEmbedding& emb, const GroupData& sup,
                      const ClassFunction& f);
ClassFunction restricted(const SubgroupEmbedding& emb, const GroupData& sub,
                         const ClassFunction& f);

// Character of the outer tensor on a direct product built by direct_product()
// (indices x = a*|B|+b).
ClassFunction outer_tensor(const GroupData& prod, const ClassFunction& a,
                           const ClassFunction& b);

// Multiplicities <f, chi_i> rounded through the integrality guard.
std::vector<long long> decompose(const CharacterTable& t, const ClassFunction& f,
                                 const std::string& what);

// CSV export, class sizes in the header row.
std::string character_table_csv(const CharacterTable& t);

}  // namespace psh
