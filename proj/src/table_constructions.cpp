#include <algorithm>
#include <stdexcept>

#include "psh/table_algebra.hpp"

namespace psh {

ModuleTable canonical_module(const AlgebraPtr& alg) {
  ModuleTable m(alg->name() + " over itself", alg, 1);
  const int cutoff = alg->cutoff();
  // module basis ids mirror the algebra's
  for (int d = 0; d <= cutoff; ++d) {
    for (const auto& b : alg->basis_of_degree(d)) {
      m.add_basis(d, alg->label(b));
      m.set_coaction(b, alg->comul_basis(b));
    }
  }
  for (int dh = 1; dh <= cutoff; ++dh)
    for (int dm = 0; dh + dm <= cutoff; ++dm)
      for (const auto& h : alg->basis_of_degree(dh))
        for (const auto& b : alg->basis_of_degree(dm))
          m.set_action(h, b, alg->mul_basis(h, b));
  return m;
}

TensorModule tensor_module(const ModuleTable& a, const ModuleTable& b) {
  if (a.algebra() != b.algebra())
    throw std::invalid_argument("tensor_module: modules over different algebra tables");
  if (a.cutoff() != b.cutoff())
    throw std::invalid_argument("tensor_module: cutoff mismatch");
  const auto alg = a.algebra();
  const int cutoff = a.cutoff();

  TensorModule out{ModuleTable(a.name() + " (x) " + b.name(), alg, a.twist() + b.twist()),
                   {}};
  ModuleTable& m = out.mod;
  for (int n = 0; n <= cutoff; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& ba : a.basis_of_degree(k)) {
        for (const auto& bb : b.basis_of_degree(n - k)) {
          m.add_basis(n, a.label(ba) + "(x)" + b.label(bb));
          out.pair_to_basis[{ba, bb}] = {n, m.basis_size(n) - 1};
        }
      }
    }
  }
  if (m.basis_size(0) != 1)
    throw std::invalid_argument("tensor_module: degree 0 is not one-dimensional");

  // gamma(h (x) m (x) n) = h_(1) m (x) h_(2) n
  for (int dh = 1; dh <= cutoff; ++dh) {
    for (int dm = 0; dh + dm <= cutoff; ++dm) {
      for (const auto& h : alg->basis_of_degree(dh)) {
        TVec2 dh_split = alg->comul_basis(h);
        for (const auto& [pr, pb] : out.pair_to_basis) {
          if (pr.first.deg + pr.second.deg != dm) continue;
          TVec res;
          for (const auto& [hp, c] : dh_split) {
            TVec va = a.act_basis(hp.first, pr.first);
            TVec vb = b.act_basis(hp.second, pr.second);
            for (const auto& [na, ca] : va)
              for (const auto& [nb, cb] : vb)
                add_to(res, out.pair_to_basis.at({na, nb}), c * ca * cb);
          }
          m.set_action(h, pb, std::move(res));
        }
      }
    }
  }

  // gamma*(m (x) n) = m_(1) n_(1) (x) m_(2) (x) n_(2)
  for (const auto& [pr, pb] : out.pair_to_basis) {
    TVec2 res;
    TVec2 ca = a.coact_basis(pr.first);
    TVec2 cb = b.coact_basis(pr.second);
    for (const auto& [pa, c1] : ca) {
      for (const auto& [pbb, c2] : cb) {
        TVec prod = alg->mul(TVec{{pa.first, 1}}, TVec{{pbb.first, 1}});
        const Int c = c1 * c2;
        const BasisId target = out.pair_to_basis.at({pa.second, pbb.second});
        for (const auto& [hh, ch] : prod) add_to(res, {hh, target}, c * ch);
      }
    }
    m.set_coaction(pb, std::move(res));
  }
  return out;
}

DirectSumModule direct_sum_module(const ModuleTable& a, const ModuleTable& b) {
  if (a.algebra() != b.algebra())
    throw std::invalid_argument("direct_sum_module: modules over different algebras");
  if (a.twist() != b.twist())
    throw std::invalid_argument("direct_sum_module: twist mismatch");
  const auto alg = a.algebra();
  DirectSumModule out{ModuleTable(a.name() + " + " + b.name(), alg, a.twist()), {}, {}};
  ModuleTable& m = out.mod;
  const int cutoff = a.cutoff();
  for (int n = 0; n <= cutoff; ++n) {
    for (const auto& ba : a.basis_of_degree(n)) {
      m.add_basis(n, a.label(ba) + "#A");
      out.from_a[ba] = {n, m.basis_size(n) - 1};
    }
    for (const auto& bb : b.basis_of_degree(n)) {
      m.add_basis(n, b.label(bb) + "#B");
      out.from_b[bb] = {n, m.basis_size(n) - 1};
    }
  }
  auto push = [&](const ModuleTable& src, const std::map<BasisId, BasisId>& remap) {
    for (int dh = 1; dh <= cutoff; ++dh)
      for (int dm = 0; dh + dm <= cutoff; ++dm)
        for (const auto& h : alg->basis_of_degree(dh))
          for (const auto& bsrc : src.basis_of_degree(dm)) {
            TVec res;
            for (const auto& [z, c] : src.act_basis(h, bsrc)) add_to(res, remap.at(z), c);
            m.set_action(h, remap.at(bsrc), std::move(res));
          }
    for (const auto& [bsrc, bdst] : remap) {
      TVec2 res;
      for (const auto& [p, c] : src.coact_basis(bsrc))
        add_to(res, {p.first, remap.at(p.second)}, c);
      m.set_coaction(bdst, std::move(res));
    }
  };
  push(a, out.from_a);
  push(b, out.from_b);
  return out;
}

ModuleTable pullback_module(const AlgebraPtr& k_alg, const GradedMap& delta,
                            const GradedMap& delta_star, int l, const ModuleTable& mod,
                            const std::string& name) {
  const auto h_alg = mod.algebra();
  const int cutoff = std::min(k_alg->cutoff(), h_alg->cutoff());
  auto kv = [&](BasisId b) { return TVec{{b, 1}}; };

  // graded, positive, defined everywhere
  for (const auto& b : k_alg->basis_up_to(cutoff)) {
    auto it = delta.find(b);
    if (it == delta.end())
      throw std::invalid_argument("pullback: delta undefined at " + k_alg->label(b));
    for (const auto& [z, c] : it->second) {
      if (z.deg != b.deg)
        throw std::invalid_argument("pullback: delta not graded at " + k_alg->label(b));
      if (c < 0) throw std::invalid_argument("pullback: delta not positive");
    }
  }
  for (const auto& b : h_alg->basis_up_to(cutoff)) {
    auto it = delta_star.find(b);
    if (it == delta_star.end())
      throw std::invalid_argument("pullback: delta* undefined at " + h_alg->label(b));
    for (const auto& [z, c] : it->second) {
      if (z.deg != b.deg)
        throw std::invalid_argument("pullback: delta* not graded at " + h_alg->label(b));
      if (c < 0) throw std::invalid_argument("pullback: delta* not positive");
    }
  }
  // mutual adjointness
  for (const auto& x : k_alg->basis_up_to(cutoff))
    for (const auto& y : h_alg->basis_of_degree(x.deg)) {
      Int lhs = 0, rhs = 0;
      auto it = delta.at(x).find(y);
      if (it != delta.at(x).end()) lhs = it->second;
      auto it2 = delta_star.at(y).find(x);
      if (it2 != delta_star.at(y).end()) rhs = it2->second;
      if (lhs != rhs)
        throw std::invalid_argument("pullback: delta and delta* are not adjoint at <" +
                                    k_alg->label(x) + ", " + h_alg->label(y) + ">");
    }
  // delta* delta = Psi^l on K, reported with the first failing basis element
  for (const auto& b : k_alg->basis_up_to(cutoff)) {
    TVec through;
    for (const auto& [y, c] : delta.at(b)) {
      for (const auto& [z, cz] : delta_star.at(y)) add_to(through, z, c * cz);
    }
    if (through != k_alg->psi(l, kv(b)))
      throw std::invalid_argument("pullback: delta* delta != Psi^" + std::to_string(l) +
                                  " first failing basis element " + k_alg->label(b) +
                                  " (degree " + std::to_string(b.deg) + ")");
  }

  ModuleTable out(name, k_alg, mod.twist() * l);
  for (int n = 0; n <= cutoff; ++n)
    for (const auto& b : mod.basis_of_degree(n)) out.add_basis(n, mod.label(b));
  for (int dh = 1; dh <= cutoff; ++dh)
    for (int dm = 0; dh + dm <= cutoff; ++dm)
      for (const auto& x : k_alg->basis_of_degree(dh))
        for (const auto& b : mod.basis_of_degree(dm))
          out.set_action(x, b, mod.act(delta.at(x), kv(b)));
  for (const auto& b : out.basis_up_to(cutoff)) {
    TVec2 res;
    for (const auto& [p, c] : mod.coact_basis(b)) {
      for (const auto& [z, cz] : delta_star.at(p.first)) add_to(res, {z, p.second}, c * cz);
    }
    out.set_coaction(b, std::move(res));
  }
  return out;
}

// ---------- Schur-backed instances ----------

namespace {
std::vector<std::vector<Partition>> partition_lists(int cutoff) {
  std::vector<std::vector<Partition>> out(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) out[n] = partitions_of(n);
  return out;
}
}  // namespace

BasisId SchurAlgebra::id_of(const Partition& p) const {
  const auto& list = partitions_of(p.size());
  auto it = std::lower_bound(list.begin(), list.end(), p);
  return {p.size(), static_cast<int>(it - list.begin())};
}

Partition SchurAlgebra::partition_of(BasisId b) const {
  return partitions_of(b.deg)[b.idx];
}

SchurAlgebra schur_algebra(int cutoff) {
  SchurAlgebra sa;
  auto alg = std::make_shared<AlgebraTable>("R", cutoff);
  auto lists = partition_lists(cutoff);
  for (int n = 1; n <= cutoff; ++n)
    for (const auto& lam : lists[n]) alg->add_basis(n, "s" + lam.to_string());
  sa.alg = alg;

  auto id_of = [&](const Partition& p) {
    const auto& list = lists[p.size()];
    auto it = std::lower_bound(list.begin(), list.end(), p);
    return BasisId{p.size(), static_cast<int>(it - list.begin())};
  };

  for (int da = 1; da <= cutoff; ++da)
    for (int db = 1; da + db <= cutoff; ++db)
      for (const auto& a : lists[da])
        for (const auto& b : lists[db]) {
          SchurVector prod = mul(SchurVector::basis(a), SchurVector::basis(b));
          TVec out;
          for (const auto& [lam, c] : prod.terms()) add_to(out, id_of(lam), c);
          alg->set_mul(id_of(a), id_of(b), std::move(out));
        }
  for (int n = 1; n <= cutoff; ++n)
    for (const auto& lam : lists[n]) {
      GradedVector split = comul(SchurVector::basis(lam));
      TVec2 out;
      for (const auto& [t, c] : split.terms()) add_to(out, {id_of(t[0]), id_of(t[1])}, c);
      alg->set_comul(id_of(lam), std::move(out));
    }
  return sa;
}

TVec tvec_from_schur(const SchurAlgebra& sa, const SchurVector& v) {
  TVec out;
  for (const auto& [lam, c] : v.terms()) add_to(out, sa.id_of(lam), c);
  return out;
}

SchurVector schur_from_tvec(const SchurAlgebra& sa, const TVec& v) {
  SchurVector out;
  for (const auto& [b, c] : v) out.add_term(sa.partition_of(b), c);
  return out;
}

ModuleTable schur_power_module(const SchurAlgebra& sa, int d) {
  GradedMap delta;
  for (const auto& b : sa.alg->basis_up_to(sa.alg->cutoff())) {
    SchurVector image = hopf_power(d, SchurVector::basis(sa.partition_of(b)));
    delta[b] = tvec_from_schur(sa, image);
  }
  return pullback_module(sa.alg, delta, delta, d * d, canonical_module(sa.alg),
                         "R^(" + std::to_string(d) + ")");
}

}  // namespace psh
