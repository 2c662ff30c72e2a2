#include "psh/table_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace psh {

void add_to(TVec& dst, const BasisId& b, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = dst.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

void add_to(TVec2& dst, const TPair& p, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = dst.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

Int tinner(const TVec& a, const TVec& b) {
  const TVec& small = a.size() <= b.size() ? a : b;
  const TVec& large = a.size() <= b.size() ? b : a;
  Int total = 0;
  for (const auto& [k, c] : small) {
    auto it = large.find(k);
    if (it != large.end()) total += c * it->second;
  }
  return total;
}

Int tinner2(const TVec2& a, const TVec2& b) {
  const TVec2& small = a.size() <= b.size() ? a : b;
  const TVec2& large = a.size() <= b.size() ? b : a;
  Int total = 0;
  for (const auto& [k, c] : small) {
    auto it = large.find(k);
    if (it != large.end()) total += c * it->second;
  }
  return total;
}

bool is_nonnegative(const TVec& v) {
  for (const auto& [k, c] : v)
    if (c < 0) return false;
  return true;
}

std::string tvec_to_string(const TVec& v,
                           const std::function<std::string(BasisId)>& label) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << '*' << label(b);
  }
  return os.str();
}

// ---------- AlgebraTable ----------

AlgebraTable::AlgebraTable(std::string name, int cutoff)
    : name_(std::move(name)), cutoff_(cutoff), labels_(cutoff + 1) {
  labels_[0].push_back("1");
}

int AlgebraTable::add_basis(int deg, std::string label) {
  if (deg < 1 || deg > cutoff_)
    throw std::invalid_argument("algebra basis degree out of range");
  labels_[deg].push_back(std::move(label));
  return static_cast<int>(labels_[deg].size()) - 1;
}

void AlgebraTable::set_mul(BasisId a, BasisId b, TVec prod) {
  mul_[{a, b}] = std::move(prod);
}

void AlgebraTable::set_comul(BasisId c, TVec2 split) { comul_[c] = std::move(split); }

int AlgebraTable::basis_size(int deg) const {
  if (deg < 0 || deg > cutoff_) return 0;
  return static_cast<int>(labels_[deg].size());
}

std::vector<BasisId> AlgebraTable::basis_of_degree(int deg) const {
  std::vector<BasisId> out;
  for (int i = 0; i < basis_size(deg); ++i) out.push_back({deg, i});
  return out;
}

std::vector<BasisId> AlgebraTable::basis_up_to(int maxdeg) const {
  std::vector<BasisId> out;
  for (int d = 0; d <= std::min(maxdeg, cutoff_); ++d)
    for (int i = 0; i < basis_size(d); ++i) out.push_back({d, i});
  return out;
}

const std::string& AlgebraTable::label(BasisId b) const { return labels_[b.deg][b.idx]; }

TVec AlgebraTable::mul_basis(BasisId a, BasisId b) const {
  if (a == unit_id()) return TVec{{b, 1}};
  if (b == unit_id()) return TVec{{a, 1}};
  auto it = mul_.find({a, b});
  if (it == mul_.end())
    throw std::logic_error(name_ + ": missing product " + label(a) + " * " + label(b));
  return it->second;
}

TVec2 AlgebraTable::comul_basis(BasisId c) const {
  if (c == unit_id()) return TVec2{{{unit_id(), unit_id()}, 1}};
  auto it = comul_.find(c);
  if (it == comul_.end())
    throw std::logic_error(name_ + ": missing coproduct of " + label(c));
  return it->second;
}

TVec AlgebraTable::mul(const TVec& a, const TVec& b) const {
  TVec out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      TVec prod = mul_basis(x, y);
      const Int c = cx * cy;
      for (const auto& [z, cz] : prod) add_to(out, z, c * cz);
    }
  return out;
}

TVec2 AlgebraTable::comul(const TVec& v) const {
  TVec2 out;
  for (const auto& [x, cx] : v) {
    TVec2 split = comul_basis(x);
    for (const auto& [p, c] : split) add_to(out, p, cx * c);
  }
  return out;
}

TVec AlgebraTable::psi_basis(int k, BasisId b) const {
  {
    std::lock_guard<std::mutex> lock(psi_mutex_);
    auto it = psi_cache_.find({k, b});
    if (it != psi_cache_.end()) return it->second;
  }
  // iterate comultiplication to k factors, then multiply back
  std::vector<std::pair<std::vector<BasisId>, Int>> tuples{{{b}, 1}};
  for (int step = 1; step < k; ++step) {
    std::vector<std::pair<std::vector<BasisId>, Int>> next;
    for (const auto& [t, c] : tuples) {
      TVec2 split = comul_basis(t.back());
      for (const auto& [p, cp] : split) {
        auto nt = t;
        nt.back() = p.first;
        nt.push_back(p.second);
        next.emplace_back(std::move(nt), c * cp);
      }
    }
    tuples = std::move(next);
  }
  TVec out;
  for (const auto& [t, c] : tuples) {
    TVec acc{{unit_id(), 1}};
    for (const auto& x : t) acc = mul(acc, TVec{{x, 1}});
    for (const auto& [z, cz] : acc) add_to(out, z, c * cz);
  }
  std::lock_guard<std::mutex> lock(psi_mutex_);
  return psi_cache_.emplace(std::make_pair(k, b), std::move(out)).first->second;
}

TVec AlgebraTable::psi(int k, const TVec& v) const {
  if (k < 0) throw std::invalid_argument("psi needs k >= 0");
  if (k == 0) {
    TVec out;
    auto it = v.find(unit_id());
    if (it != v.end()) out[unit_id()] = it->second;
    return out;
  }
  if (k == 1) return v;
  TVec out;
  for (const auto& [b, c] : v) {
    TVec pb = psi_basis(k, b);
    for (const auto& [z, cz] : pb) add_to(out, z, c * cz);
  }
  return out;
}

std::vector<BasisId> AlgebraTable::primitive_irreducibles(int maxdeg) const {
  std::vector<BasisId> out;
  for (int d = 1; d <= std::min(maxdeg, cutoff_); ++d) {
    for (const auto& b : basis_of_degree(d)) {
      TVec2 expect{{{unit_id(), b}, 1}, {{b, unit_id()}, 1}};
      if (comul_basis(b) == expect) out.push_back(b);
    }
  }
  return out;
}

CheckResult AlgebraTable::check_axioms(int maxdeg) const {
  CheckResult r;
  r.name = name_ + " algebra axioms";
  auto lbl = [this](BasisId b) { return label(b); };
  for (int n = 0; n <= maxdeg; ++n) {
    for (const auto& c : basis_of_degree(n)) {
      TVec2 split = comul_basis(c);
      // counit: the (1, x) and (x, 1) parts are exactly the element itself
      for (const auto& [p, coeff] : split) {
        ++r.checked;
        if (coeff < 0) r.fail("negative coproduct coefficient in " + label(c));
        if (p.first.deg + p.second.deg != n)
          r.fail("coproduct of " + label(c) + " is not graded");
        if (p.first == unit_id() && !(p.second == c && coeff == 1))
          r.fail("counit failure in coproduct of " + label(c));
        if (p.second == unit_id() && !(p.first == c && coeff == 1))
          r.fail("counit failure in coproduct of " + label(c));
        // cocommutativity
        auto swapped = split.find({p.second, p.first});
        if (swapped == split.end() || swapped->second != coeff)
          r.fail("coproduct of " + label(c) + " is not cocommutative");
      }
    }
  }
  for (int da = 1; da <= maxdeg; ++da) {
    for (int db = 1; da + db <= maxdeg; ++db) {
      for (const auto& a : basis_of_degree(da)) {
        for (const auto& b : basis_of_degree(db)) {
          TVec prod = mul_basis(a, b);
          ++r.checked;
          if (!is_nonnegative(prod))
            r.fail("negative product coefficient in " + label(a) + "*" + label(b));
          for (const auto& [z, cz] : prod)
            if (z.deg != da + db) r.fail("product " + label(a) + "*" + label(b) + " not graded");
          if (prod != mul_basis(b, a))
            r.fail("product not commutative on " + label(a) + "," + label(b));
          // adjointness against the coproduct
          for (const auto& c : basis_of_degree(da + db)) {
            Int lhs = 0;
            auto it = prod.find(c);
            if (it != prod.end()) lhs = it->second;
            TVec2 split = comul_basis(c);
            Int rhs = 0;
            auto it2 = split.find({a, b});
            if (it2 != split.end()) rhs = it2->second;
            if (lhs != rhs)
              r.fail("mul/comul not adjoint at <" + label(a) + "*" + label(b) + ", " +
                     label(c) + ">: " + tvec_to_string(prod, lbl));
          }
        }
      }
    }
  }
  return r;
}

// ---------- ModuleTable ----------

ModuleTable::ModuleTable(std::string name, AlgebraPtr alg, int twist)
    : name_(std::move(name)), alg_(std::move(alg)), twist_(twist),
      cutoff_(alg_->cutoff()), labels_(cutoff_ + 1) {
  if (twist < 0) throw std::invalid_argument("twist must be >= 0");
}

int ModuleTable::add_basis(int deg, std::string label) {
  if (deg < 0 || deg > cutoff_)
    throw std::invalid_argument("module basis degree out of range");
  labels_[deg].push_back(std::move(label));
  return static_cast<int>(labels_[deg].size()) - 1;
}

void ModuleTable::set_action(BasisId h, BasisId m, TVec result) {
  action_[{h, m}] = std::move(result);
}

void ModuleTable::set_coaction(BasisId m, TVec2 result) {
  coaction_[m] = std::move(result);
}

int ModuleTable::basis_size(int deg) const {
  if (deg < 0 || deg > cutoff_) return 0;
  return static_cast<int>(labels_[deg].size());
}

std::vector<BasisId> ModuleTable::basis_of_degree(int deg) const {
  std::vector<BasisId> out;
  for (int i = 0; i < basis_size(deg); ++i) out.push_back({deg, i});
  return out;
}

std::vector<BasisId> ModuleTable::basis_up_to(int maxdeg) const {
  std::vector<BasisId> out;
  for (int d = 0; d <= std::min(maxdeg, cutoff_); ++d)
    for (int i = 0; i < basis_size(d); ++i) out.push_back({d, i});
  return out;
}

const std::string& ModuleTable::label(BasisId b) const { return labels_[b.deg][b.idx]; }

TVec ModuleTable::act_basis(BasisId h, BasisId m) const {
  if (h == AlgebraTable::unit_id()) return TVec{{m, 1}};
  auto it = action_.find({h, m});
  if (it == action_.end())
    throw std::logic_error(name_ + ": missing action " + alg_->label(h) + " . " + label(m));
  return it->second;
}

TVec2 ModuleTable::coact_basis(BasisId m) const {
  auto it = coaction_.find(m);
  if (it == coaction_.end())
    throw std::logic_error(name_ + ": missing coaction of " + label(m));
  return it->second;
}

TVec ModuleTable::act(const TVec& h, const TVec& m) const {
  TVec out;
  for (const auto& [x, cx] : h)
    for (const auto& [y, cy] : m) {
      TVec part = act_basis(x, y);
      const Int c = cx * cy;
      for (const auto& [z, cz] : part) add_to(out, z, c * cz);
    }
  return out;
}

TVec2 ModuleTable::coact(const TVec& m) const {
  TVec2 out;
  for (const auto& [y, cy] : m) {
    TVec2 part = coact_basis(y);
    for (const auto& [p, c] : part) add_to(out, p, cy * c);
  }
  return out;
}

std::vector<BasisId> ModuleTable::primitive_irreducibles(int maxdeg) const {
  std::vector<BasisId> out;
  for (int d = 0; d <= std::min(maxdeg, cutoff_); ++d) {
    for (const auto& m : basis_of_degree(d)) {
      TVec2 expect{{{AlgebraTable::unit_id(), m}, 1}};
      if (coact_basis(m) == expect) out.push_back(m);
    }
  }
  return out;
}

// ---------- verifiers ----------

CheckResult check_module_axioms(const ModuleTable& m, int maxdeg) {
  CheckResult r;
  r.name = m.name() + " module axioms";
  const auto& alg = *m.algebra();
  for (int n = 0; n <= maxdeg; ++n) {
    for (const auto& b : m.basis_of_degree(n)) {
      TVec2 split = m.coact_basis(b);
      ++r.checked;
      for (const auto& [p, coeff] : split) {
        if (coeff < 0) r.fail("negative coaction coefficient in " + m.label(b));
        if (p.first.deg + p.second.deg != n)
          r.fail("coaction of " + m.label(b) + " is not graded");
        if (p.first == AlgebraTable::unit_id() && !(p.second == b && coeff == 1))
          r.fail("counit failure in coaction of " + m.label(b));
      }
      if (split.find({AlgebraTable::unit_id(), b}) == split.end())
        r.fail("coaction of " + m.label(b) + " misses the 1 (x) m term");
    }
  }
  for (int dh = 1; dh <= maxdeg; ++dh) {
    for (int dm = 0; dh + dm <= maxdeg; ++dm) {
      for (const auto& h : alg.basis_of_degree(dh)) {
        for (const auto& b : m.basis_of_degree(dm)) {
          TVec res = m.act_basis(h, b);
          ++r.checked;
          if (!is_nonnegative(res))
            r.fail("negative action coefficient in " + alg.label(h) + "." + m.label(b));
          for (const auto& [z, cz] : res)
            if (z.deg != dh + dm)
              r.fail("action " + alg.label(h) + "." + m.label(b) + " not graded");
          for (const auto& n : m.basis_of_degree(dh + dm)) {
            Int lhs = 0;
            auto it = res.find(n);
            if (it != res.end()) lhs = it->second;
            TVec2 split = m.coact_basis(n);
            Int rhs = 0;
            auto it2 = split.find({h, b});
            if (it2 != split.end()) rhs = it2->second;
            if (lhs != rhs)
              r.fail("action/coaction not adjoint at <" + alg.label(h) + "." + m.label(b) +
                     ", " + m.label(n) + ">");
          }
        }
      }
    }
  }
  return r;
}

CheckResult check_associativity(const ModuleTable& m, int maxdeg) {
  CheckResult r;
  r.name = m.name() + " associativity";
  const auto& alg = *m.algebra();
  for (int dx = 1; dx <= maxdeg; ++dx)
    for (int dy = 1; dx + dy <= maxdeg; ++dy)
      for (int dm = 0; dx + dy + dm <= maxdeg; ++dm)
        for (const auto& x : alg.basis_of_degree(dx))
          for (const auto& y : alg.basis_of_degree(dy))
            for (const auto& b : m.basis_of_degree(dm)) {
              ++r.checked;
              TVec lhs = m.act(alg.mul_basis(x, y), TVec{{b, 1}});
              TVec rhs = m.act(TVec{{x, 1}}, m.act_basis(y, b));
              if (lhs != rhs)
                r.fail("(xy)m != x(ym) at x=" + alg.label(x) + " y=" + alg.label(y) +
                       " m=" + m.label(b));
            }
  return r;
}

CheckResult verify_k_hopf(const ModuleTable& m, int maxdeg) {
  CheckResult r;
  r.name = m.name() + " " + std::to_string(m.twist()) + "-Hopf axiom";
  const auto& alg = *m.algebra();
  const int k = m.twist();
  for (int dh = 0; dh <= maxdeg; ++dh) {
    for (int dm = 0; dh + dm <= maxdeg; ++dm) {
      for (const auto& h : alg.basis_of_degree(dh)) {
        for (const auto& b : m.basis_of_degree(dm)) {
          ++r.checked;
          TVec2 lhs = m.coact(m.act_basis(h, b));
          TVec2 rhs;
          TVec2 dh_split = alg.comul_basis(h);
          TVec2 dm_split = m.coact_basis(b);
          for (const auto& [hp, c1] : dh_split) {
            TVec psi_h1 = alg.psi(k, TVec{{hp.first, 1}});
            for (const auto& [mp, c2] : dm_split) {
              TVec first = alg.mul(psi_h1, TVec{{mp.first, 1}});
              TVec second = m.act_basis(hp.second, mp.second);
              const Int c = c1 * c2;
              for (const auto& [f, cf] : first)
                for (const auto& [s, cs] : second) add_to(rhs, {f, s}, c * cf * cs);
            }
          }
          if (lhs != rhs) {
            r.fail("k-Hopf axiom fails at h=" + alg.label(h) + " m=" + m.label(b));
            return r;
          }
        }
      }
    }
  }
  return r;
}

// ---------- skew operators ----------

TVec skew_action(const ModuleTable& m, const TVec& x, const TVec& mv) {
  TVec out;
  TVec2 split = m.coact(mv);
  for (const auto& [p, c] : split) {
    auto it = x.find(p.first);
    if (it != x.end()) add_to(out, p.second, c * it->second);
  }
  return out;
}

TVec skew_comodule(const ModuleTable& m, const TVec& mdual, const TVec& mv) {
  TVec out;
  TVec2 split = m.coact(mv);
  for (const auto& [p, c] : split) {
    auto it = mdual.find(p.second);
    if (it != mdual.end()) add_to(out, p.first, c * it->second);
  }
  return out;
}

TVec algebra_skew(const AlgebraTable& alg, const TVec& x, const TVec& y) {
  TVec out;
  TVec2 split = alg.comul(y);
  for (const auto& [p, c] : split) {
    auto it = x.find(p.first);
    if (it != x.end()) add_to(out, p.second, c * it->second);
  }
  return out;
}

CheckResult check_skew_properties(const ModuleTable& m, int maxdeg) {
  CheckResult r;
  r.name = m.name() + " skew operator properties";
  const auto& alg = *m.algebra();
  const int k = m.twist();
  const TVec unit_vec{{AlgebraTable::unit_id(), 1}};

  for (const auto& b : m.basis_up_to(maxdeg)) {
    ++r.checked;
    if (skew_action(m, unit_vec, TVec{{b, 1}}) != TVec{{b, 1}})
      r.fail("1~ is not the identity at " + m.label(b));
  }

  // (1) degree drop and (2) composition
  for (int dx = 1; dx <= maxdeg; ++dx)
    for (int dy = 1; dx + dy <= maxdeg; ++dy)
      for (const auto& x : alg.basis_of_degree(dx))
        for (const auto& y : alg.basis_of_degree(dy))
          for (const auto& b : m.basis_up_to(maxdeg)) {
            ++r.checked;
            TVec lhs = skew_action(m, TVec{{x, 1}},
                                   skew_action(m, TVec{{y, 1}}, TVec{{b, 1}}));
            TVec rhs = skew_action(m, alg.mul_basis(x, y), TVec{{b, 1}});
            if (lhs != rhs)
              r.fail("x~ y~ != (xy)~ at x=" + alg.label(x) + " y=" + alg.label(y) +
                     " m=" + m.label(b));
            for (const auto& [z, cz] : lhs)
              if (z.deg != b.deg - dx - dy) r.fail("skew action does not drop degree");
          }

  // (3) x~(ym) = [Psi^k(x_(1))]*(y) . x_(2)~(m)
  for (int dx = 1; dx <= maxdeg; ++dx)
    for (int dy = 1; dx + dy <= maxdeg; ++dy)
      for (int dm = 0; dx + dy + dm <= maxdeg; ++dm)
        for (const auto& x : alg.basis_of_degree(dx))
          for (const auto& y : alg.basis_of_degree(dy))
            for (const auto& b : m.basis_of_degree(dm)) {
              ++r.checked;
              TVec lhs = skew_action(m, TVec{{x, 1}}, m.act_basis(y, b));
              TVec rhs;
              TVec2 dx_split = alg.comul_basis(x);
              for (const auto& [p, c] : dx_split) {
                TVec w = algebra_skew(alg, alg.psi(k, TVec{{p.first, 1}}), TVec{{y, 1}});
                TVec u = skew_action(m, TVec{{p.second, 1}}, TVec{{b, 1}});
                TVec prod = m.act(w, u);
                for (const auto& [z, cz] : prod) add_to(rhs, z, c * cz);
              }
              if (lhs != rhs)
                r.fail("property (3) fails at x=" + alg.label(x) + " y=" + alg.label(y) +
                       " m=" + m.label(b));
            }

  // (4)/(5): both expansions of m~(xn)
  for (int dm = 0; dm <= maxdeg; ++dm)
    for (int dx = 1; dx + dm <= maxdeg; ++dx)
      for (int dn = 0; dx + dn <= maxdeg && dm <= dx + dn; ++dn)
        for (const auto& mm : m.basis_of_degree(dm))
          for (const auto& x : alg.basis_of_degree(dx))
            for (const auto& nn : m.basis_of_degree(dn)) {
              ++r.checked;
              TVec mvec{{mm, 1}};
              TVec lhs = skew_comodule(m, mvec, m.act_basis(x, nn));
              TVec rhs4, rhs5;
              TVec2 dm_split = m.coact_basis(mm);
              for (const auto& [p, c] : dm_split) {
                TVec inner_sk = algebra_skew(alg, TVec{{p.first, 1}}, TVec{{x, 1}});
                TVec left = alg.psi(k, inner_sk);
                TVec right = skew_comodule(m, TVec{{p.second, 1}}, TVec{{nn, 1}});
                TVec prod = alg.mul(left, right);
                for (const auto& [z, cz] : prod) add_to(rhs4, z, c * cz);
              }
              TVec2 dx_split = alg.comul_basis(x);
              for (const auto& [p, c] : dx_split) {
                TVec left = alg.psi(k, TVec{{p.first, 1}});
                TVec xm = skew_action(m, TVec{{p.second, 1}}, mvec);
                TVec right = skew_comodule(m, xm, TVec{{nn, 1}});
                TVec prod = alg.mul(left, right);
                for (const auto& [z, cz] : prod) add_to(rhs5, z, c * cz);
              }
              if (lhs != rhs4)
                r.fail("property (4) fails at m=" + m.label(mm) + " x=" + alg.label(x) +
                       " n=" + m.label(nn));
              if (lhs != rhs5)
                r.fail("property (5) fails at m=" + m.label(mm) + " x=" + alg.label(x) +
                       " n=" + m.label(nn));
            }
  return r;
}

// ---------- primitive-product inner products ----------

namespace {
bool equal_or_orthogonal(const TVec& a, const TVec& b) {
  return a == b || tinner(a, b) == 0;
}
}  // namespace

Int module_inner_primitive_product(int twist, const std::vector<TVec>& ps, const TVec& m,
                     const std::vector<TVec>& qs, const TVec& n) {
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j)
      if (!equal_or_orthogonal(ps[i], ps[j]))
        throw std::invalid_argument("prop12: p_i neither equal nor orthogonal");
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = 0; j < qs.size(); ++j)
      if (!equal_or_orthogonal(qs[i], qs[j]))
        throw std::invalid_argument("prop12: p'_i neither equal nor orthogonal");
  for (const auto& p : ps)
    for (const auto& q : qs)
      if (!equal_or_orthogonal(p, q))
        throw std::invalid_argument("prop12: cross pair neither equal nor orthogonal");
  if (!equal_or_orthogonal(m, n))
    throw std::invalid_argument("prop12: m, n neither equal nor orthogonal");

  if (!(m == n) || ps.size() != qs.size()) return 0;
  // group the p_i into equality classes and match against the q_j multiset
  std::vector<std::pair<TVec, int>> groups;
  for (const auto& p : ps) {
    bool found = false;
    for (auto& [rep, cnt] : groups)
      if (rep == p) {
        ++cnt;
        found = true;
        break;
      }
    if (!found) groups.emplace_back(p, 1);
  }
  std::vector<int> qcounts(groups.size(), 0);
  for (const auto& q : qs) {
    bool found = false;
    for (size_t i = 0; i < groups.size(); ++i)
      if (groups[i].first == q) {
        ++qcounts[i];
        found = true;
        break;
      }
    if (!found) return 0;
  }
  for (size_t i = 0; i < groups.size(); ++i)
    if (qcounts[i] != groups[i].second) return 0;

  Int result = 1;
  for (size_t i = 0; i < ps.size(); ++i) result *= twist;
  for (const auto& [rep, cnt] : groups)
    for (int f = 2; f <= cnt; ++f) result *= f;
  for (const auto& p : ps) result *= tinner(p, p);
  result *= tinner(m, m);
  return result;
}

CheckResult check_prop12(const ModuleTable& m, int total_degree_cap) {
  CheckResult r;
  r.name = m.name() + " Prop 12 inner products";
  const auto& alg = *m.algebra();
  auto prims = alg.primitive_irreducibles(total_degree_cap);
  auto mprims = m.primitive_irreducibles(total_degree_cap);

  // all multisets of primitives (as nondecreasing index lists) within budget
  struct Family {
    std::vector<TVec> ps;
    TVec mvec;
    TVec value;  // p_1...p_r m computed through the tables
  };
  std::vector<Family> families;
  std::vector<int> stack;
  std::function<void(size_t, int)> build = [&](size_t from, int used) {
    for (const auto& d : mprims) {
      if (used + d.deg > total_degree_cap) continue;
      Family f;
      for (int i : stack) f.ps.push_back(TVec{{prims[i], 1}});
      f.mvec = TVec{{d, 1}};
      TVec acc = f.mvec;
      for (auto it = f.ps.rbegin(); it != f.ps.rend(); ++it) acc = m.act(*it, acc);
      f.value = std::move(acc);
      families.push_back(std::move(f));
    }
    for (size_t i = from; i < prims.size(); ++i) {
      if (used + prims[i].deg > total_degree_cap) continue;
      stack.push_back(static_cast<int>(i));
      build(i, used + prims[i].deg);
      stack.pop_back();
    }
  };
  build(0, 0);

  for (const auto& fa : families)
    for (const auto& fb : families) {
      ++r.checked;
      Int direct = tinner(fa.value, fb.value);
      Int predicted = module_inner_primitive_product(m.twist(), fa.ps, fa.mvec, fb.ps, fb.mvec);
      if (direct != predicted) {
        r.fail("Prop 12 mismatch: direct " + direct.str() + " vs predicted " +
               predicted.str());
        return r;
      }
    }
  return r;
}

// ---------- decomposition ----------

ModuleDecomposition decompose_module(const ModuleTable& m, int maxdeg) {
  ModuleDecomposition out;
  out.check.name = m.name() + " Theorem 13 decomposition";
  const auto& alg = *m.algebra();
  out.algebra_primitives = alg.primitive_irreducibles(maxdeg);
  out.module_primitives = m.primitive_irreducibles(maxdeg);

  struct Cell {
    BasisId d;
    std::map<BasisId, int> phi;
    TVec value;
  };
  std::vector<Cell> cells;
  // enumerate phi with given total weight over the primitive list
  std::function<void(size_t, int, std::map<BasisId, int>&, const BasisId&)> gen_phi =
      [&](size_t i, int rest, std::map<BasisId, int>& phi, const BasisId& d) {
        if (i == out.algebra_primitives.size()) {
          if (rest != 0) return;
          TVec acc{{d, 1}};
          for (const auto& [c, mult] : phi)
            for (int t = 0; t < mult; ++t) acc = m.act(TVec{{c, 1}}, acc);
          cells.push_back({d, phi, std::move(acc)});
          return;
        }
        const BasisId c = out.algebra_primitives[i];
        for (int mult = 0; mult * c.deg <= rest; ++mult) {
          if (mult > 0) phi[c] = mult;
          gen_phi(i + 1, rest - mult * c.deg, phi, d);
        }
        phi.erase(c);
      };
  for (const auto& d : out.module_primitives) {
    for (int n = d.deg; n <= maxdeg; ++n) {
      std::map<BasisId, int> phi;
      gen_phi(0, n - d.deg, phi, d);
    }
  }

  for (int n = 0; n <= maxdeg; ++n) {
    for (const auto& omega : m.basis_of_degree(n)) {
      ++out.check.checked;
      int matches = 0;
      const Cell* hit = nullptr;
      for (const auto& cell : cells) {
        auto it = cell.value.find(omega);
        if (it != cell.value.end() && it->second > 0) {
          ++matches;
          hit = &cell;
        }
      }
      if (matches == 0)
        out.check.fail("irreducible " + m.label(omega) + " lies in no cell");
      else if (matches > 1)
        out.check.fail("irreducible " + m.label(omega) + " lies in " +
                       std::to_string(matches) + " cells");
      else
        out.cell_of[omega] = {hit->d, hit->phi};
    }
  }
  return out;
}

}  // namespace psh
