#pragma once

#include <memory>
#include <string>
#include <vector>

namespace psh {

// Explicit finite group: elements are 0..order-1, 0 is the identity, and the
// multiplication is a total table.  Instances are immutable once built and
// shared by pointer.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> from_table(std::string name,
                                                       std::vector<int> table);
  // Generators as 0-based image vectors; elements are found by closure in
  // BFS order (identity first), which fixes the labeling.
  static std::shared_ptr<const FiniteGroup> from_generators(
      std::string name, int degree, const std::vector<std::vector<int>>& gens);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  const std::string& name() const { return name_; }
  bool is_abelian() const;

  // permutation images when built from generators, else empty
  const std::vector<std::vector<int>>& perms() const { return perms_; }

 private:
  FiniteGroup() = default;
  void finish_validation();

  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Injective homomorphism sub -> sup, stored as the image of each element.
struct SubgroupEmbedding {
  GroupPtr sub;
  GroupPtr sup;
  std::vector<int> map;

  void validate() const;  // product-preserving, injective, identity to identity
  long long index() const { return sup->order() / sub->order(); }
  // sup element -> sub element, or -1 outside the image
  std::vector<int> preimage_table() const;
};

GroupPtr trivial_group();
GroupPtr cyclic_group(int m);
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr dihedral_group(int m);  // order 2m, symmetries of the m-gon
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Catalog lookup: "1", "Z2".."Z12", "S3", "S4", "A3", "A4", "D4", "D6",
// "Q8" and direct products such as "Z2xZ2".  Throws on unknown names.
GroupPtr catalog_group(const std::string& name);
std::vector<std::string> catalog_names();

SubgroupEmbedding trivial_subgroup(const GroupPtr& g);
SubgroupEmbedding full_subgroup(const GroupPtr& g);
SubgroupEmbedding center_subgroup(const GroupPtr& g);
// Subgroup generated by the smallest-label element of order k (deterministic;
// in S3 this picks the non-normal Z2 generated by the first transposition).
SubgroupEmbedding cyclic_subgroup(const GroupPtr& g, int k);
SubgroupEmbedding subgroup_from_elements(const GroupPtr& g, std::vector<int> elems);

// Specs: "1"/"trivial", "self"/"full", "center", "Zk", or "elems:0,3,5".
SubgroupEmbedding resolve_subgroup(const GroupPtr& g, const std::string& spec);

// Ingestion: either
//   cayley N        followed by N rows of N entries, or
//   perm N          followed by "gen i1 i2 ... iN" lines (1-based images).
// '#' starts a comment.
GroupPtr parse_group_text(const std::string& text, const std::string& name);
GroupPtr load_group_file(const std::string& path);

}  // namespace psh
