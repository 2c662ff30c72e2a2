#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "psh/graded.hpp"
#include "psh/report.hpp"
#include "psh/schur.hpp"

namespace psh {

// Basis element of a truncated graded T-group: (degree, index within degree).
struct BasisId {
  int deg = 0;
  int idx = 0;
  auto operator<=>(const BasisId&) const = default;
};

using TVec = std::map<BasisId, Int>;               // element of the T-group
using TPair = std::pair<BasisId, BasisId>;
using TVec2 = std::map<TPair, Int>;                // element of a tensor square

void add_to(TVec& dst, const BasisId& b, const Int& c);
void add_to(TVec2& dst, const TPair& p, const Int& c);
Int tinner(const TVec& a, const TVec& b);
Int tinner2(const TVec2& a, const TVec2& b);
bool is_nonnegative(const TVec& v);
std::string tvec_to_string(const TVec& v,
                           const std::function<std::string(BasisId)>& label);

// A PSH-algebra truncated at a degree cutoff, stored as explicit structure
// tables over its irreducible basis.  Degree 0 holds the unit alone.  The
// comultiplication table stores every term, boundary terms included.
class AlgebraTable {
 public:
  AlgebraTable(std::string name, int cutoff);

  int add_basis(int deg, std::string label);
  void set_mul(BasisId a, BasisId b, TVec prod);
  void set_comul(BasisId c, TVec2 split);

  const std::string& name() const { return name_; }
  int cutoff() const { return cutoff_; }
  int basis_size(int deg) const;
  std::vector<BasisId> basis_of_degree(int deg) const;
  std::vector<BasisId> basis_up_to(int maxdeg) const;
  const std::string& label(BasisId b) const;
  static BasisId unit_id() { return {0, 0}; }

  TVec mul_basis(BasisId a, BasisId b) const;
  TVec2 comul_basis(BasisId c) const;
  TVec mul(const TVec& a, const TVec& b) const;
  TVec2 comul(const TVec& v) const;
  // Hopf power computed from the tables by iterated comultiplication and
  // multiplication; cached per basis element.
  TVec psi(int k, const TVec& v) const;

  // Irreducibles c with comul(c) = c (x) 1 + 1 (x) c, 0 < deg <= maxdeg.
  std::vector<BasisId> primitive_irreducibles(int maxdeg) const;

  // Unit laws, grading, positivity, adjointness of mul/comul,
  // commutativity and cocommutativity.
  CheckResult check_axioms(int maxdeg) const;

 private:
  TVec psi_basis(int k, BasisId b) const;

  std::string name_;
  int cutoff_;
  std::vector<std::vector<std::string>> labels_;
  std::map<std::pair<BasisId, BasisId>, TVec> mul_;
  std::map<BasisId, TVec2> comul_;
  mutable std::mutex psi_mutex_;
  mutable std::map<std::pair<int, BasisId>, TVec> psi_cache_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

// k-PSH module candidate over an AlgebraTable, as finite truncated action and
// coaction tables.  Whether it actually satisfies the k-PSH axioms is decided
// by the verifiers below, never assumed.
class ModuleTable {
 public:
  ModuleTable(std::string name, AlgebraPtr alg, int twist);

  int add_basis(int deg, std::string label);
  void set_action(BasisId h, BasisId m, TVec result);
  void set_coaction(BasisId m, TVec2 result);

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra() const { return alg_; }
  int twist() const { return twist_; }
  int cutoff() const { return cutoff_; }
  int basis_size(int deg) const;
  std::vector<BasisId> basis_of_degree(int deg) const;
  std::vector<BasisId> basis_up_to(int maxdeg) const;
  const std::string& label(BasisId b) const;

  TVec act_basis(BasisId h, BasisId m) const;
  TVec2 coact_basis(BasisId m) const;
  TVec act(const TVec& h, const TVec& m) const;
  TVec2 coact(const TVec& m) const;

  // Module primitives: alpha*(m) = 1 (x) m.
  std::vector<BasisId> primitive_irreducibles(int maxdeg) const;

 private:
  std::string name_;
  AlgebraPtr alg_;
  int twist_;
  int cutoff_;
  std::vector<std::vector<std::string>> labels_;
  std::map<std::pair<BasisId, BasisId>, TVec> action_;
  std::map<BasisId, TVec2> coaction_;
};

// ----- verifiers -----

// Unit, counit, grading, positivity, mutual adjointness of action/coaction.
CheckResult check_module_axioms(const ModuleTable& m, int maxdeg);

// alpha(mul (x) 1) = alpha(1 (x) alpha); associativity follows from the other
// module axioms, so the check doubles as a consistency check on the tables.
CheckResult check_associativity(const ModuleTable& m, int maxdeg);

// The k-Hopf axiom alpha*(hm) = Psi^k(h_(1)) m_(1) (x) h_(2) m_(2) on every
// algebra-basis x module-basis pair of total degree <= maxdeg.
CheckResult verify_k_hopf(const ModuleTable& m, int maxdeg);

// ----- skew (adjoint) operators -----

// x~ : adjoint of left multiplication, (inner(x,.) (x) 1) alpha*.
TVec skew_action(const ModuleTable& m, const TVec& x, const TVec& mv);
// m~ : adjoint of right action by m, lands in the algebra.
TVec skew_comodule(const ModuleTable& m, const TVec& mdual, const TVec& mv);
// Zelevinsky's x* on the algebra itself.
TVec algebra_skew(const AlgebraTable& alg, const TVec& x, const TVec& y);

CheckResult check_skew_properties(const ModuleTable& m, int maxdeg);

// ----- primitive-product inner products -----

// Predicted <p_1...p_r m, p'_1...p'_s n> = k^r n_1!...n_v! <p_1,p_1>...<m,m>
// for pairwise equal-or-orthogonal primitives; throws std::invalid_argument
// on a hypothesis violation.  check_prop12 is the companion verifier that
// computes the inner products directly from the tables and compares.
Int module_inner_primitive_product(int twist, const std::vector<TVec>& ps, const TVec& m,
                     const std::vector<TVec>& qs, const TVec& n);
CheckResult check_prop12(const ModuleTable& m, int total_degree_cap);

// ----- decomposition into single-primitive summands -----

struct ModuleDecomposition {
  std::vector<BasisId> algebra_primitives;
  std::vector<BasisId> module_primitives;
  // module irreducible -> (d, phi) with phi a multiset over algebra primitives
  std::map<BasisId, std::pair<BasisId, std::map<BasisId, int>>> cell_of;
  CheckResult check;  // fails on an orphan or a double assignment
};

ModuleDecomposition decompose_module(const ModuleTable& m, int maxdeg);

// ----- constructions -----

// The algebra as a 1-twisted module over itself.
ModuleTable canonical_module(const AlgebraPtr& alg);

struct TensorModule {
  ModuleTable mod;
  std::map<std::pair<BasisId, BasisId>, BasisId> pair_to_basis;
};
// (M (x) N, gamma, gamma*), twist k+l; requires the same algebra and cutoff.
TensorModule tensor_module(const ModuleTable& a, const ModuleTable& b);

struct DirectSumModule {
  ModuleTable mod;
  std::map<BasisId, BasisId> from_a, from_b;
};
DirectSumModule direct_sum_module(const ModuleTable& a, const ModuleTable& b);

// Graded basis-indexed morphism K -> H (value on each K basis element).
using GradedMap = std::map<BasisId, TVec>;

// Pullback along delta: K -> H, delta*: H -> K with delta* delta = Psi^l on
// K: action x.m := delta(x).m, coaction (delta* (x) 1) alpha*.  The stated
// preconditions (positivity, adjointness, delta* delta = Psi^l) are verified
// up to the cutoff; violations throw std::invalid_argument naming the first
// failing basis element.
ModuleTable pullback_module(const AlgebraPtr& k_alg, const GradedMap& delta,
                            const GradedMap& delta_star, int l, const ModuleTable& m,
                            const std::string& name);

// ----- Schur-backed instances -----

struct SchurAlgebra {
  AlgebraPtr alg;
  // conversions between the table basis and partitions
  BasisId id_of(const Partition& p) const;
  Partition partition_of(BasisId b) const;
};
SchurAlgebra schur_algebra(int cutoff);

TVec tvec_from_schur(const SchurAlgebra& sa, const SchurVector& v);
SchurVector schur_from_tvec(const SchurAlgebra& sa, const TVec& v);

// R with action x.m = Psi^d(x) m: the pullback of the canonical module along
// delta = delta* = Psi^d; twist d^2.
ModuleTable schur_power_module(const SchurAlgebra& sa, int d);

}  // namespace psh
