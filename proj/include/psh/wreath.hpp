#pragma once

#include <map>
#include <string>
#include <vector>

#include "psh/character.hpp"
#include "psh/group.hpp"
#include "psh/hopf_matrix.hpp"
#include "psh/rep_maps.hpp"
#include "psh/sn_chars.hpp"
#include "psh/table_algebra.hpp"

namespace psh {

// S_n[K] = S_n x| K^n in the monomial-matrix model: element (sigma, g) is the
// matrix with entry g_i in column i, row sigma(i); the product rule is
// (sigma,g)(tau,h) = (sigma tau, (g_{tau(i)} h_i)_i).
struct WreathShape {
  GroupPtr entry;
  int n = 0;
  std::vector<std::vector<int>> perms;  // all perms of {0..n-1}, lex order

  struct Elem {
    std::vector<int> perm;  // images
    std::vector<int> g;     // entries, g[i] in column i
  };

  WreathShape() = default;
  WreathShape(GroupPtr k, int n);
  long long order() const;
  Elem decode(long long index) const;
  long long encode(const Elem& e) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  long long mul_idx(long long a, long long b) const;
};

// Explicit Cayley table for S_n[K]; element labels follow the shape encoding.
struct WreathGroup {
  WreathShape shape;
  GroupPtr group;
};
WreathGroup build_wreath(const GroupPtr& k, int n, long long cap = 500);

// The tower S_0[K], ..., S_cutoff[K] with character tables.
struct WreathTower {
  GroupPtr entry;
  CharacterTable entry_table;
  int cutoff = 0;
  std::vector<WreathGroup> level;       // by degree
  std::vector<GroupData> data;          // group + classes, shared with tables
  std::vector<CharacterTable> table;
};
WreathTower build_wreath_tower(const GroupPtr& k, int cutoff, long long cap = 500);

// S_a[K1] x S_b[K2] -> S_{a+b}[G] block-diagonally, entries mapped through
// e1 and e2.  The product group is direct_product(level-a group, level-b).
SubgroupEmbedding block_embedding(const WreathGroup& a, const std::vector<int>& e1,
                                  const WreathGroup& b, const std::vector<int>& e2,
                                  const WreathGroup& target);

// Elementwise S_n[H] -> S_n[G] along an entry embedding.
SubgroupEmbedding levelwise_embedding(const WreathGroup& sub, const WreathGroup& sup,
                                      const std::vector<int>& entry_map);

// Character of Phi_rho(pi) on S_n[K]: chi_pi(sigma) times the product over
// cycles of sigma of chi_rho evaluated at the ordered cycle product of the
// entries (walking the cycle backwards).
ClassFunction phi_rho(const Partition& pi, int rho, const WreathTower& tower, int n);

// Literal tensor-space realization of the same character for 1-dimensional pi
// and explicit matrices for rho; used to cross-validate the trace formula.
Complex phi_rho_trace_from_matrices(const std::vector<Complex>& pi_scalar,
                                    const std::vector<std::vector<std::vector<Complex>>>& rho_mats,
                                    const WreathShape& shape, long long element);

// Multipartition: one partition per irreducible of the entry group, in the
// canonical irreducible order; total size is the degree.
using Multipartition = std::vector<Partition>;
std::vector<Multipartition> multipartitions(int slots, int degree);
std::string mp_to_string(const Multipartition& mp);

// The Zelevinsky identification: for each degree a bijection between
// multipartitions and the irreducibles of S_n[K].  A multipartition image
// that fails to be a single irreducible is a hard failure.
struct RgBasis {
  WreathTower tower;
  std::vector<std::vector<Multipartition>> mps;  // per degree
  std::vector<std::vector<int>> irr_of_mp;
  std::vector<std::vector<int>> mp_of_irr;
};
RgBasis build_rg_basis(const GroupPtr& g, int cutoff, long long cap = 500);

// Image of the multipartition under Phi_G: the product of the phi_rho images
// over nonempty slots (induction along block embeddings).
ClassFunction phi_g_image(const RgBasis& rg, int n, const Multipartition& mp);

// Induction product f . g in the tower.
ClassFunction rg_product(const WreathTower& t, int da, const ClassFunction& f, int db,
                         const ClassFunction& g);

// delta / delta*: induction and restriction along S_n[H] -> S_n[G], as
// integer matrices per degree in irreducible coordinates (rows index the
// target basis).
struct GradedIntMatrices {
  std::vector<IntMatrix> by_degree;
};
struct DeltaMaps {
  GradedIntMatrices delta;       // R_n(H) -> R_n(G): rows irr(S_n[G])
  GradedIntMatrices delta_star;  // R_n(G) -> R_n(H): rows irr(S_n[H])
};
DeltaMaps delta_maps(const RgBasis& rh, const RgBasis& rg, const SubgroupEmbedding& hg);

// R(H)-tower as an AlgebraTable: genuine induction and restriction feed the
// multiplication and comultiplication.
AlgebraPtr wreath_tower_algebra(const RgBasis& rh);

// R(G) as a module over the R(H) algebra table, twist [G:H].
ModuleTable wreath_module(const RgBasis& rh, const RgBasis& rg,
                          const SubgroupEmbedding& hg, const AlgebraPtr& alg);

// R(G) as a module over the Schur-basis algebra (H = 1), basis labeled by
// multipartitions.
ModuleTable rg_over_r_module(const RgBasis& rg, const SchurAlgebra& sa);

// ----- verifiers -----

CheckResult verify_theorem16(const SubgroupEmbedding& hg, int cutoff, long long cap = 500);
CheckResult verify_theorem20(const SubgroupEmbedding& hg, int cutoff, long long cap = 500);
CheckResult verify_prop18(const SubgroupEmbedding& hg, int cutoff, long long cap = 500);
CheckResult verify_corollary22(const GroupPtr& g, int cutoff, long long cap = 500);
CheckResult verify_prop15(const SubgroupEmbedding& hg, int p, int q, int r, int s,
                          long long cap = 2500);
// res ind of the trivial through S_n[K], |K| = m, evaluated on S_n equals
// m^{cycles}; checked against direct enumeration and the symmetric-function
// side through Murnaghan-Nakayama.
CheckResult verify_power_law(int m, int max_n);

// Prop 12 and Theorem 13 on the wreath modules of Theorem 16.
CheckResult verify_prop12_wreath(const SubgroupEmbedding& hg, int cutoff,
                                 long long cap = 500);
CheckResult verify_theorem13_wreath(const SubgroupEmbedding& hg, int cutoff,
                                    long long cap = 500);
CheckResult verify_theorem13_tensor(const GroupPtr& g, int cutoff, long long cap = 500);

// Under Phi_G the induction product matches the slotwise LR product.
CheckResult verify_phi_g_product_compat(const GroupPtr& g, int cutoff,
                                        long long cap = 500);

}  // namespace psh
