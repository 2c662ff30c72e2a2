#pragma once

#include <map>
#include <vector>

#include "psh/character.hpp"
#include "psh/group.hpp"
#include "psh/report.hpp"
#include "psh/wreath.hpp"

namespace psh {

// G_n(G,H) for abelian G: the subgroup of S_n[G] of monomial matrices whose
// entries sum into H.  Local labels follow ascending ambient index, so the
// identity is 0.  Order is n! |G|^{n-1} |H|.
struct RWreath {
  WreathShape ambient;  // S_n[G]
  GroupPtr group;
  int n = 0;
  std::vector<long long> ambient_of;
  std::map<long long, int> local_of;
};

RWreath build_restricted(const GroupPtr& g, const SubgroupEmbedding& h, int n,
                         long long cap = 500);

struct QuotientGroup {
  GroupPtr q;
  std::vector<int> coset_of;  // G element -> Q element
  std::vector<int> rep_of;    // Q element -> smallest representative
};
QuotientGroup quotient_group(const GroupPtr& g, const SubgroupEmbedding& h);

// Everything the appendix maps need for one pair (G, H): the restricted
// towers of G_n(G,H) and of the quotient G_n(G/H,1), the reduction map phi
// between them (verified elementwise to be a surjective homomorphism), and
// the linear characters of H.
struct RestrictedTower {
  GroupPtr g;
  SubgroupEmbedding h;
  QuotientGroup quot;
  int cutoff = 0;
  std::vector<RWreath> rw;  // G_n(G,H)
  std::vector<RWreath> qw;  // G_n(G/H,1)
  std::vector<GroupData> rw_data, qw_data;
  std::vector<CharacterTable> rw_table, qw_table;
  std::vector<std::vector<int>> phi_map;  // per degree, rw local -> qw local
  CharacterTable h_table;                 // all rows 1-dimensional
  std::vector<int> g_to_h;                // G element -> H element or -1
  // H^n inside G_n(G,H), per degree: local indices of diagonal tuples
  std::vector<std::vector<int>> hn_elements;
};

RestrictedTower build_restricted_tower(const GroupPtr& g, const SubgroupEmbedding& h,
                                       int cutoff, long long cap = 500);

// the linear character l_n(x) = l(sum of the entries of x)
Complex l_n_value(const RestrictedTower& t, int n, int l, int local);

ClassFunction phi_star_pullback(const RestrictedTower& t, int n, const ClassFunction& f);
ClassFunction tau_twist(const RestrictedTower& t, int n, int l, const ClassFunction& f);
ClassFunction Phi_l(const RestrictedTower& t, int n, int l, const ClassFunction& f);
// hom_{H^n}(l_n, .) on characters; checks independence of the choice of lift
// on every evaluation.
ClassFunction Psi_l(const RestrictedTower& t, int n, int l, const ClassFunction& f);

// Induction products within the two towers.
ClassFunction rw_product(const RestrictedTower& t, int da, const ClassFunction& f,
                         int db, const ClassFunction& g);
ClassFunction qw_product(const RestrictedTower& t, int da, const ClassFunction& f,
                         int db, const ClassFunction& g);

// Composition index: sizes per linear character of H, in table order.
using HStarComposition = std::vector<int>;
std::vector<HStarComposition> hstar_compositions(int slots, int total);

// Phi(pi_lambda): induce the product of the Phi_l images of the chosen
// irreducibles from the block subgroup.
ClassFunction big_phi(const RestrictedTower& t, const HStarComposition& lambda,
                      const std::vector<int>& irr_choice);

// The lambda-component of Psi(f) as integer coefficients over tuples of
// quotient-tower irreducibles.
std::map<std::vector<int>, long long> big_psi_component(const RestrictedTower& t, int n,
                                                        const ClassFunction& f,
                                                        const HStarComposition& lambda);

// Gram matrices of the big_phi basis per degree <= cutoff equal
// delta * [G:H]^{l(lambda)-1}, plus exhaustive weak surjectivity and the
// order formula.
CheckResult verify_theorem28(const GroupPtr& g, const SubgroupEmbedding& h, int cutoff,
                             long long cap = 500);

// Props 23-27, the tau action, lift independence, Corollary 29.
CheckResult verify_appendix_props(const GroupPtr& g, const SubgroupEmbedding& h,
                                  int cutoff, long long cap = 500);

// G = H: Phi and Psi are mutually inverse irreducible-to-irreducible maps.
CheckResult verify_corollary30(const GroupPtr& g, int cutoff, long long cap = 500);

// Measures the defect of the plain Hopf axiom for m, m* on R(G,H); reported
// informationally, never asserted.
CheckResult measure_hopf_defect(const GroupPtr& g, const SubgroupEmbedding& h,
                                int cutoff, long long cap = 500);

}  // namespace psh
