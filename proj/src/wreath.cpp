#include "psh/wreath.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace psh {

// ---------- shapes and explicit groups ----------

WreathShape::WreathShape(GroupPtr k, int n_) : entry(std::move(k)), n(n_) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  perms.push_back(id);
  while (std::next_permutation(id.begin(), id.end())) perms.push_back(id);
}

long long WreathShape::order() const {
  long long o = static_cast<long long>(perms.size());
  for (int i = 0; i < n; ++i) o *= entry->order();
  return o;
}

WreathShape::Elem WreathShape::decode(long long index) const {
  Elem e;
  const int m = entry->order();
  e.g.resize(n);
  for (int i = 0; i < n; ++i) {
    e.g[i] = static_cast<int>(index % m);
    index /= m;
  }
  e.perm = perms[static_cast<size_t>(index)];
  return e;
}

long long WreathShape::encode(const Elem& e) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), e.perm);
  long long index = static_cast<long long>(it - perms.begin());
  const int m = entry->order();
  for (int i = n - 1; i >= 0; --i) index = index * m + e.g[i];
  return index;
}

WreathShape::Elem WreathShape::mul(const Elem& a, const Elem& b) const {
  Elem r;
  r.perm.resize(n);
  r.g.resize(n);
  for (int i = 0; i < n; ++i) r.perm[i] = a.perm[b.perm[i]];
  for (int i = 0; i < n; ++i) r.g[i] = entry->mul(a.g[b.perm[i]], b.g[i]);
  return r;
}

WreathShape::Elem WreathShape::inv(const Elem& a) const {
  Elem r;
  r.perm.resize(n);
  r.g.resize(n);
  for (int i = 0; i < n; ++i) r.perm[a.perm[i]] = i;
  for (int i = 0; i < n; ++i) r.g[i] = entry->inv(a.g[r.perm[i]]);
  return r;
}

long long WreathShape::mul_idx(long long a, long long b) const {
  return encode(mul(decode(a), decode(b)));
}

WreathGroup build_wreath(const GroupPtr& k, int n, long long cap) {
  WreathGroup w;
  w.shape = WreathShape(k, n);
  const long long order = w.shape.order();
  if (order > cap)
    throw std::invalid_argument("wreath group S_" + std::to_string(n) + "[" + k->name() +
                                "] of order " + std::to_string(order) +
                                " exceeds the cap " + std::to_string(cap));
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<WreathShape::Elem> elems;
  elems.reserve(order);
  for (long long i = 0; i < order; ++i) elems.push_back(w.shape.decode(i));
  for (long long a = 0; a < order; ++a)
    for (long long b = 0; b < order; ++b)
      table[a * order + b] =
          static_cast<int>(w.shape.encode(w.shape.mul(elems[a], elems[b])));
  w.group = FiniteGroup::from_table("S" + std::to_string(n) + "[" + k->name() + "]",
                                    std::move(table));
  return w;
}

WreathTower build_wreath_tower(const GroupPtr& k, int cutoff, long long cap) {
  WreathTower t;
  t.entry = k;
  t.entry_table = character_table(k, static_cast<int>(cap));
  t.cutoff = cutoff;
  for (int n = 0; n <= cutoff; ++n) {
    t.level.push_back(build_wreath(k, n, cap));
    t.table.push_back(character_table(t.level[n].group, static_cast<int>(cap)));
    t.data.push_back(t.table[n].g);
  }
  return t;
}

SubgroupEmbedding block_embedding(const WreathGroup& a, const std::vector<int>& e1,
                                  const WreathGroup& b, const std::vector<int>& e2,
                                  const WreathGroup& target) {
  const int ka = a.shape.n, kb = b.shape.n;
  if (ka + kb != target.shape.n)
    throw std::invalid_argument("block_embedding: degree mismatch");
  GroupPtr prod = direct_product(a.group, b.group);
  const long long ob = b.group->order();
  std::vector<int> map(prod->order());
  for (int x = 0; x < prod->order(); ++x) {
    auto ea = a.shape.decode(x / ob);
    auto eb = b.shape.decode(x % ob);
    WreathShape::Elem big;
    big.perm.resize(ka + kb);
    big.g.resize(ka + kb);
    for (int i = 0; i < ka; ++i) big.perm[i] = ea.perm[i];
    for (int i = 0; i < kb; ++i) big.perm[ka + i] = ka + eb.perm[i];
    for (int i = 0; i < ka; ++i) big.g[i] = e1[ea.g[i]];
    for (int i = 0; i < kb; ++i) big.g[ka + i] = e2[eb.g[i]];
    map[x] = static_cast<int>(target.shape.encode(big));
  }
  SubgroupEmbedding emb{prod, target.group, std::move(map)};
  emb.validate();
  return emb;
}

SubgroupEmbedding levelwise_embedding(const WreathGroup& sub, const WreathGroup& sup,
                                      const std::vector<int>& entry_map) {
  if (sub.shape.n != sup.shape.n)
    throw std::invalid_argument("levelwise_embedding: degree mismatch");
  std::vector<int> map(sub.group->order());
  for (int x = 0; x < sub.group->order(); ++x) {
    auto e = sub.shape.decode(x);
    for (auto& gi : e.g) gi = entry_map[gi];
    map[x] = static_cast<int>(sup.shape.encode(e));
  }
  SubgroupEmbedding emb{sub.group, sup.group, std::move(map)};
  emb.validate();
  return emb;
}

// ---------- Phi_rho and the multipartition labeling ----------

ClassFunction phi_rho(const Partition& pi, int rho, const WreathTower& tower, int n) {
  if (pi.size() != n) throw std::invalid_argument("phi_rho: |pi| != n");
  const auto& shape = tower.level[n].shape;
  const GroupData& gd = tower.data[n];
  const auto& ktab = tower.entry_table;
  std::vector<Complex> vals(gd.classes->count());
  for (int c = 0; c < gd.classes->count(); ++c) {
    auto e = shape.decode(gd.classes->reps[c]);
    Complex value = double(sn_character(pi, cycle_type(e.perm)).convert_to<long long>());
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      // walk the cycle of sigma through start; entries multiply in reverse
      // walk order: g_{sigma^{L-1}(i)} ... g_{sigma(i)} g_i
      int prod = 0;  // identity
      for (int j = start; !seen[j]; j = e.perm[j]) {
        seen[j] = true;
        prod = tower.entry->mul(e.g[j], prod);
      }
      value *= ktab.chi[rho][ktab.g.classes->class_of[prod]];
    }
    vals[c] = value;
  }
  return ClassFunction(gd, std::move(vals));
}

Complex phi_rho_trace_from_matrices(
    const std::vector<Complex>& pi_scalar,
    const std::vector<std::vector<std::vector<Complex>>>& rho_mats,
    const WreathShape& shape, long long element) {
  auto e = shape.decode(element);
  const int n = shape.n;
  const int dim = rho_mats.empty() ? 1 : static_cast<int>(rho_mats[0].size());
  // sigma then the diagonal part: basis w (x) e_{j_1} ... e_{j_n} maps to
  // pi(sigma) w (x) (g_{sigma^-1(i)} e_{j_{sigma^-1(i)}})_i; trace sums the
  // diagonal coefficients over all index tuples.
  std::vector<int> siginv(n);
  for (int i = 0; i < n; ++i) siginv[e.perm[i]] = i;
  Complex total = 0;
  std::vector<int> j(n, 0);
  while (true) {
    Complex term = 1;
    for (int i = 0; i < n; ++i) {
      const auto& mat = rho_mats[e.g[siginv[i]]];
      term *= mat[j[i]][j[siginv[i]]];
    }
    total += term;
    int pos = 0;
    while (pos < n && ++j[pos] == dim) j[pos++] = 0;
    if (pos == n) break;
  }
  // pi is 1-dimensional here; its value at sigma scales the trace
  auto it = std::lower_bound(shape.perms.begin(), shape.perms.end(), e.perm);
  return pi_scalar[static_cast<size_t>(it - shape.perms.begin())] * total;
}

std::vector<Multipartition> multipartitions(int slots, int degree) {
  std::vector<Multipartition> out;
  Multipartition cur(slots);
  std::function<void(int, int)> rec = [&](int slot, int rest) {
    if (slot == slots - 1) {
      for (const auto& lam : partitions_of(rest)) {
        cur[slot] = lam;
        out.push_back(cur);
      }
      return;
    }
    for (int a = 0; a <= rest; ++a)
      for (const auto& lam : partitions_of(a)) {
        cur[slot] = lam;
        rec(slot + 1, rest - a);
      }
  };
  if (slots == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  return out;
}

std::string mp_to_string(const Multipartition& mp) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < mp.size(); ++i) {
    if (i) os << '|';
    os << mp[i].to_string();
  }
  os << ')';
  return os.str();
}

ClassFunction rg_product(const WreathTower& t, int da, const ClassFunction& f, int db,
                         const ClassFunction& g) {
  if (da == 0) return g;
  if (db == 0) return f;
  std::vector<int> identity_map(t.entry->order());
  std::iota(identity_map.begin(), identity_map.end(), 0);
  SubgroupEmbedding emb = block_embedding(t.level[da], identity_map, t.level[db],
                                          identity_map, t.level[da + db]);
  GroupData prod_data = make_group_data(emb.sub);
  ClassFunction outer = outer_tensor(prod_data, f, g);
  return induced(emb, t.data[da + db], outer);
}

ClassFunction phi_g_image(const RgBasis& rg, int n, const Multipartition& mp) {
  const WreathTower& t = rg.tower;
  ClassFunction acc;  // empty means "unit so far"
  int acc_deg = 0;
  for (size_t rho = 0; rho < mp.size(); ++rho) {
    const int sz = mp[rho].size();
    if (sz == 0) continue;
    ClassFunction piece = phi_rho(mp[rho], static_cast<int>(rho), t, sz);
    if (acc_deg == 0) {
      acc = piece;
      acc_deg = sz;
    } else {
      acc = rg_product(t, acc_deg, acc, sz, piece);
      acc_deg += sz;
    }
  }
  if (acc_deg == 0) {
    std::vector<Complex> one{1.0};
    return ClassFunction(t.data[0], std::move(one));
  }
  if (acc_deg != n) throw std::logic_error("phi_g_image: degree mismatch");
  return acc;
}

RgBasis build_rg_basis(const GroupPtr& g, int cutoff, long long cap) {
  RgBasis rg;
  rg.tower = build_wreath_tower(g, cutoff, cap);
  const int slots = rg.tower.entry_table.irr_count();
  rg.mps.resize(cutoff + 1);
  rg.irr_of_mp.resize(cutoff + 1);
  rg.mp_of_irr.resize(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    rg.mps[n] = multipartitions(slots, n);
    const auto& tab = rg.tower.table[n];
    if (static_cast<int>(rg.mps[n].size()) != tab.irr_count())
      throw std::runtime_error("Zelevinsky labeling: multipartition count " +
                               std::to_string(rg.mps[n].size()) + " != irreducible count " +
                               std::to_string(tab.irr_count()) + " in degree " +
                               std::to_string(n));
    rg.irr_of_mp[n].assign(rg.mps[n].size(), -1);
    rg.mp_of_irr[n].assign(tab.irr_count(), -1);
    for (size_t j = 0; j < rg.mps[n].size(); ++j) {
      ClassFunction image = phi_g_image(rg, n, rg.mps[n][j]);
      // the image must be exactly one irreducible with multiplicity one
      long long norm = guarded_round(cf_inner(image, image),
                                     "Phi_G image norm " + mp_to_string(rg.mps[n][j]));
      if (norm != 1)
        throw std::runtime_error("Phi_G image of " + mp_to_string(rg.mps[n][j]) +
                                 " is not irreducible (norm " + std::to_string(norm) + ")");
      int hit = -1;
      for (int i = 0; i < tab.irr_count(); ++i) {
        long long ip = guarded_round(cf_inner(image, tab.irr(i)), "Phi_G labeling");
        if (ip == 1) {
          hit = i;
          break;
        }
      }
      if (hit < 0)
        throw std::runtime_error("Phi_G image of " + mp_to_string(rg.mps[n][j]) +
                                 " matches no irreducible");
      if (rg.mp_of_irr[n][hit] != -1)
        throw std::runtime_error("Phi_G labeling is not injective in degree " +
                                 std::to_string(n));
      rg.irr_of_mp[n][j] = hit;
      rg.mp_of_irr[n][hit] = static_cast<int>(j);
    }
  }
  return rg;
}

// ---------- delta maps ----------

DeltaMaps delta_maps(const RgBasis& rh, const RgBasis& rg, const SubgroupEmbedding& hg) {
  DeltaMaps out;
  const int cutoff = std::min(rh.tower.cutoff, rg.tower.cutoff);
  out.delta.by_degree.resize(cutoff + 1);
  out.delta_star.by_degree.resize(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    const auto& ht = rh.tower.table[n];
    const auto& gt = rg.tower.table[n];
    IntMatrix d(gt.irr_count(), ht.irr_count());
    IntMatrix ds(ht.irr_count(), gt.irr_count());
    if (n == 0) {
      d.at(0, 0) = 1;
      ds.at(0, 0) = 1;
    } else {
      SubgroupEmbedding emb =
          levelwise_embedding(rh.tower.level[n], rg.tower.level[n], hg.map);
      for (int i = 0; i < ht.irr_count(); ++i) {
        ClassFunction ind = induced(emb, rg.tower.data[n], ht.irr(i));
        auto col = decompose(gt, ind, "delta degree " + std::to_string(n));
        for (int j = 0; j < gt.irr_count(); ++j) d.at(j, i) = col[j];
      }
      for (int j = 0; j < gt.irr_count(); ++j) {
        ClassFunction res = restricted(emb, rh.tower.data[n], gt.irr(j));
        auto col = decompose(ht, res, "delta* degree " + std::to_string(n));
        for (int i = 0; i < ht.irr_count(); ++i) ds.at(i, j) = col[i];
      }
      // Frobenius reciprocity: the two matrices are mutually transpose
      if (!(ds.transpose() == d))
        throw std::runtime_error("delta and delta* are not mutually adjoint in degree " +
                                 std::to_string(n));
    }
    out.delta.by_degree[n] = std::move(d);
    out.delta_star.by_degree[n] = std::move(ds);
  }
  return out;
}

// ---------- table builders ----------

namespace {

// Decomposition of the restriction of chi to the block product A x B into
// pairs of irreducibles, by a direct double element loop.
IntMatrix restrict_to_pairs(const ClassFunction& chi, const SubgroupEmbedding& block,
                            const WreathGroup& a, const CharacterTable& at,
                            const WreathGroup& b, const CharacterTable& bt) {
  const long long ob = b.group->order();
  IntMatrix out(at.irr_count(), bt.irr_count());
  for (int i = 0; i < at.irr_count(); ++i) {
    for (int j = 0; j < bt.irr_count(); ++j) {
      Complex total = 0;
      for (int x = 0; x < a.group->order(); ++x)
        for (int y = 0; y < b.group->order(); ++y) {
          int big = block.map[x * ob + y];
          total += chi.at_element(big) * std::conj(at.chi[i][at.g.classes->class_of[x]] *
                                                   bt.chi[j][bt.g.classes->class_of[y]]);
        }
      total /= double(a.group->order()) * double(b.group->order());
      out.at(i, j) = guarded_round(total, "restriction to block pair");
    }
  }
  return out;
}

std::vector<int> identity_entry_map(const GroupPtr& g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return m;
}

}  // namespace

AlgebraPtr wreath_tower_algebra(const RgBasis& rh) {
  const WreathTower& t = rh.tower;
  auto alg = std::make_shared<AlgebraTable>("R(" + t.entry->name() + ")", t.cutoff);
  for (int n = 1; n <= t.cutoff; ++n)
    for (int i = 0; i < t.table[n].irr_count(); ++i)
      alg->add_basis(n, mp_to_string(rh.mps[n][rh.mp_of_irr[n][i]]));

  auto idmap = identity_entry_map(t.entry);
  // products by induction
  for (int da = 1; da <= t.cutoff; ++da) {
    for (int db = 1; da + db <= t.cutoff; ++db) {
      SubgroupEmbedding emb =
          block_embedding(t.level[da], idmap, t.level[db], idmap, t.level[da + db]);
      GroupData prod_data = make_group_data(emb.sub);
      for (int i = 0; i < t.table[da].irr_count(); ++i) {
        for (int j = 0; j < t.table[db].irr_count(); ++j) {
          ClassFunction outer =
              outer_tensor(prod_data, t.table[da].irr(i), t.table[db].irr(j));
          ClassFunction ind = induced(emb, t.data[da + db], outer);
          auto mults = decompose(t.table[da + db], ind, "tower product");
          TVec prod;
          for (size_t z = 0; z < mults.size(); ++z)
            if (mults[z] != 0) add_to(prod, {da + db, static_cast<int>(z)}, mults[z]);
          alg->set_mul({da, i}, {db, j}, std::move(prod));
        }
      }
    }
  }
  // coproducts by restriction
  for (int n = 1; n <= t.cutoff; ++n) {
    std::vector<TVec2> splits(t.table[n].irr_count());
    for (int i = 0; i < t.table[n].irr_count(); ++i) {
      add_to(splits[i], {AlgebraTable::unit_id(), BasisId{n, i}}, 1);
      add_to(splits[i], {BasisId{n, i}, AlgebraTable::unit_id()}, 1);
    }
    for (int k = 1; k <= n - 1; ++k) {
      SubgroupEmbedding emb =
          block_embedding(t.level[k], idmap, t.level[n - k], idmap, t.level[n]);
      for (int i = 0; i < t.table[n].irr_count(); ++i) {
        IntMatrix pairs = restrict_to_pairs(t.table[n].irr(i), emb, t.level[k],
                                            t.table[k], t.level[n - k], t.table[n - k]);
        for (int x = 0; x < pairs.rows; ++x)
          for (int y = 0; y < pairs.cols; ++y)
            if (pairs.at(x, y) != 0)
              add_to(splits[i], {BasisId{k, x}, BasisId{n - k, y}}, pairs.at(x, y));
      }
    }
    for (int i = 0; i < t.table[n].irr_count(); ++i)
      alg->set_comul({n, i}, std::move(splits[i]));
  }
  return alg;
}

ModuleTable wreath_module(const RgBasis& rh, const RgBasis& rg,
                          const SubgroupEmbedding& hg, const AlgebraPtr& alg) {
  const WreathTower& th = rh.tower;
  const WreathTower& tg = rg.tower;
  const int cutoff = std::min(th.cutoff, tg.cutoff);
  const int twist = static_cast<int>(hg.index());
  ModuleTable m("R(" + tg.entry->name() + ") over R(" + th.entry->name() + ")", alg,
                twist);
  for (int n = 0; n <= cutoff; ++n)
    for (int i = 0; i < tg.table[n].irr_count(); ++i)
      m.add_basis(n, mp_to_string(rg.mps[n][rg.mp_of_irr[n][i]]));

  auto id_g = identity_entry_map(tg.entry);
  // action: induction from S_k[H] x S_l[G]
  for (int k = 1; k <= cutoff; ++k) {
    for (int l = 0; k + l <= cutoff; ++l) {
      if (l == 0) {
        // action on the unit is the delta map
        SubgroupEmbedding emb = levelwise_embedding(th.level[k], tg.level[k], hg.map);
        for (int i = 0; i < th.table[k].irr_count(); ++i) {
          ClassFunction ind = induced(emb, tg.data[k], th.table[k].irr(i));
          auto mults = decompose(tg.table[k], ind, "wreath module action");
          TVec res;
          for (size_t z = 0; z < mults.size(); ++z)
            if (mults[z] != 0) add_to(res, {k, static_cast<int>(z)}, mults[z]);
          m.set_action({k, i}, {0, 0}, std::move(res));
        }
        continue;
      }
      SubgroupEmbedding emb =
          block_embedding(th.level[k], hg.map, tg.level[l], id_g, tg.level[k + l]);
      GroupData prod_data = make_group_data(emb.sub);
      for (int i = 0; i < th.table[k].irr_count(); ++i) {
        for (int j = 0; j < tg.table[l].irr_count(); ++j) {
          ClassFunction outer =
              outer_tensor(prod_data, th.table[k].irr(i), tg.table[l].irr(j));
          ClassFunction ind = induced(emb, tg.data[k + l], outer);
          auto mults = decompose(tg.table[k + l], ind, "wreath module action");
          TVec res;
          for (size_t z = 0; z < mults.size(); ++z)
            if (mults[z] != 0) add_to(res, {k + l, static_cast<int>(z)}, mults[z]);
          m.set_action({k, i}, {l, j}, std::move(res));
        }
      }
    }
  }
  // coaction: restrictions to S_k[H] x S_l[G]
  for (int n = 0; n <= cutoff; ++n) {
    std::vector<TVec2> splits(tg.table[n].irr_count());
    for (int i = 0; i < tg.table[n].irr_count(); ++i)
      add_to(splits[i], {AlgebraTable::unit_id(), BasisId{n, i}}, 1);
    for (int k = 1; k <= n; ++k) {
      const int l = n - k;
      if (l == 0) {
        SubgroupEmbedding emb = levelwise_embedding(th.level[k], tg.level[k], hg.map);
        for (int i = 0; i < tg.table[n].irr_count(); ++i) {
          ClassFunction res = restricted(emb, th.data[k], tg.table[n].irr(i));
          auto mults = decompose(th.table[k], res, "wreath module coaction");
          for (size_t z = 0; z < mults.size(); ++z)
            if (mults[z] != 0)
              add_to(splits[i], {BasisId{k, static_cast<int>(z)}, BasisId{0, 0}},
                     mults[z]);
        }
        continue;
      }
      SubgroupEmbedding emb =
          block_embedding(th.level[k], hg.map, tg.level[l], id_g, tg.level[n]);
      for (int i = 0; i < tg.table[n].irr_count(); ++i) {
        IntMatrix pairs = restrict_to_pairs(tg.table[n].irr(i), emb, th.level[k],
                                            th.table[k], tg.level[l], tg.table[l]);
        for (int x = 0; x < pairs.rows; ++x)
          for (int y = 0; y < pairs.cols; ++y)
            if (pairs.at(x, y) != 0)
              add_to(splits[i], {BasisId{k, x}, BasisId{l, y}}, pairs.at(x, y));
      }
    }
    for (int i = 0; i < tg.table[n].irr_count(); ++i)
      m.set_coaction({n, i}, std::move(splits[i]));
  }
  return m;
}

ModuleTable rg_over_r_module(const RgBasis& rg, const SchurAlgebra& sa) {
  const WreathTower& tg = rg.tower;
  const int cutoff = std::min(tg.cutoff, sa.alg->cutoff());
  // degree-k algebra side lives on S_k with trivial entries
  WreathTower tt = build_wreath_tower(trivial_group(), cutoff);
  const int twist = tg.entry->order();
  ModuleTable m("R(" + tg.entry->name() + ") over R", sa.alg, twist);
  // module basis in multipartition order
  for (int n = 0; n <= cutoff; ++n)
    for (size_t j = 0; j < rg.mps[n].size(); ++j)
      m.add_basis(n, mp_to_string(rg.mps[n][j]));

  std::vector<int> triv_to_g(1, 0);
  auto id_g = identity_entry_map(tg.entry);

  auto irr_vec_to_mp = [&](int n, const std::vector<long long>& mults) {
    TVec out;
    for (size_t z = 0; z < mults.size(); ++z)
      if (mults[z] != 0)
        add_to(out, {n, rg.mp_of_irr[n][z]}, mults[z]);
    return out;
  };

  for (int k = 1; k <= cutoff; ++k) {
    for (const auto& lam : partitions_of(k)) {
      BasisId hid = sa.id_of(lam);
      ClassFunction chi_lam = [&] {
        std::vector<Complex> vals(tt.data[k].classes->count());
        for (int c = 0; c < tt.data[k].classes->count(); ++c) {
          auto e = tt.level[k].shape.decode(tt.data[k].classes->reps[c]);
          vals[c] = double(sn_character(lam, cycle_type(e.perm)).convert_to<long long>());
        }
        return ClassFunction(tt.data[k], std::move(vals));
      }();
      for (int l = 0; k + l <= cutoff; ++l) {
        if (l == 0) {
          SubgroupEmbedding emb =
              levelwise_embedding(tt.level[k], tg.level[k], triv_to_g);
          ClassFunction ind = induced(emb, tg.data[k], chi_lam);
          auto mults = decompose(tg.table[k], ind, "R(G)-over-R action");
          m.set_action(hid, {0, 0}, irr_vec_to_mp(k, mults));
          continue;
        }
        SubgroupEmbedding emb = block_embedding(tt.level[k], triv_to_g, tg.level[l],
                                                id_g, tg.level[k + l]);
        GroupData prod_data = make_group_data(emb.sub);
        for (size_t j = 0; j < rg.mps[l].size(); ++j) {
          int irr_j = rg.irr_of_mp[l][j];
          ClassFunction outer =
              outer_tensor(prod_data, chi_lam, tg.table[l].irr(irr_j));
          ClassFunction ind = induced(emb, tg.data[k + l], outer);
          auto mults = decompose(tg.table[k + l], ind, "R(G)-over-R action");
          m.set_action(hid, {l, static_cast<int>(j)}, irr_vec_to_mp(k + l, mults));
        }
      }
    }
  }

  for (int n = 0; n <= cutoff; ++n) {
    for (size_t j = 0; j < rg.mps[n].size(); ++j) {
      int irr_j = rg.irr_of_mp[n][j];
      TVec2 split;
      add_to(split, {AlgebraTable::unit_id(), BasisId{n, static_cast<int>(j)}}, 1);
      for (int k = 1; k <= n; ++k) {
        const int l = n - k;
        if (l == 0) {
          SubgroupEmbedding emb =
              levelwise_embedding(tt.level[k], tg.level[k], triv_to_g);
          ClassFunction res = restricted(emb, tt.data[k], tg.table[n].irr(irr_j));
          for (const auto& lam : partitions_of(k)) {
            ClassFunction chi_lam = [&] {
              std::vector<Complex> vals(tt.data[k].classes->count());
              for (int c = 0; c < tt.data[k].classes->count(); ++c) {
                auto e = tt.level[k].shape.decode(tt.data[k].classes->reps[c]);
                vals[c] =
                    double(sn_character(lam, cycle_type(e.perm)).convert_to<long long>());
              }
              return ClassFunction(tt.data[k], std::move(vals));
            }();
            long long mult = guarded_round(cf_inner(res, chi_lam), "R(G)-over-R coaction");
            if (mult != 0) add_to(split, {sa.id_of(lam), BasisId{0, 0}}, mult);
          }
          continue;
        }
        SubgroupEmbedding emb = block_embedding(tt.level[k], triv_to_g, tg.level[l],
                                                id_g, tg.level[n]);
        const long long ob = tg.level[l].group->order();
        for (const auto& lam : partitions_of(k)) {
          for (size_t jj = 0; jj < rg.mps[l].size(); ++jj) {
            int irr_jj = rg.irr_of_mp[l][jj];
            Complex total = 0;
            for (int x = 0; x < tt.level[k].group->order(); ++x) {
              auto e = tt.level[k].shape.decode(x);
              double lam_val =
                  double(sn_character(lam, cycle_type(e.perm)).convert_to<long long>());
              if (lam_val == 0.0) continue;
              for (int y = 0; y < tg.level[l].group->order(); ++y) {
                int big = emb.map[x * ob + y];
                total += tg.table[n].irr(irr_j).at_element(big) * lam_val *
                         std::conj(tg.table[l].chi[irr_jj]
                                       [tg.data[l].classes->class_of[y]]);
              }
            }
            total /= double(tt.level[k].group->order()) *
                     double(tg.level[l].group->order());
            long long mult = guarded_round(total, "R(G)-over-R coaction");
            if (mult != 0)
              add_to(split, {sa.id_of(lam), BasisId{l, static_cast<int>(jj)}}, mult);
          }
        }
      }
      m.set_coaction({n, static_cast<int>(j)}, std::move(split));
    }
  }
  return m;
}

}  // namespace psh
