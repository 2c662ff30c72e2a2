#include "psh/restricted.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psh {

RWreath build_restricted(const GroupPtr& g, const SubgroupEmbedding& h, int n,
                         long long cap) {
  if (!g->is_abelian())
    throw std::invalid_argument("restricted wreath products need an abelian entry group");
  RWreath w;
  w.ambient = WreathShape(g, n);
  w.n = n;
  const auto pre = h.preimage_table();
  const long long ambient_order = w.ambient.order();
  for (long long x = 0; x < ambient_order; ++x) {
    auto e = w.ambient.decode(x);
    int sum = 0;
    for (int gi : e.g) sum = g->mul(sum, gi);
    if (pre[sum] >= 0) {
      w.local_of[x] = static_cast<int>(w.ambient_of.size());
      w.ambient_of.push_back(x);
    }
  }
  const long long order = static_cast<long long>(w.ambient_of.size());
  // order formula n! |G|^{n-1} |H| for n >= 1; degree 0 is trivial
  long long expect = n == 0 ? 1 : h.sub->order();
  for (int i = 2; i <= n; ++i) expect *= i;
  for (int i = 1; i < n; ++i) expect *= g->order();
  if (order != expect)
    throw std::logic_error("restricted wreath order " + std::to_string(order) +
                           " != n!|G|^{n-1}|H| = " + std::to_string(expect));
  if (order > cap)
    throw std::invalid_argument("restricted wreath group of order " +
                                std::to_string(order) + " exceeds the cap");
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (long long a = 0; a < order; ++a)
    for (long long b = 0; b < order; ++b) {
      long long prod = w.ambient.mul_idx(w.ambient_of[a], w.ambient_of[b]);
      table[a * order + b] = w.local_of.at(prod);
    }
  std::ostringstream name;
  name << "G_" << n << "(" << g->name() << "," << h.sub->name() << ")";
  w.group = FiniteGroup::from_table(name.str(), std::move(table));
  return w;
}

QuotientGroup quotient_group(const GroupPtr& g, const SubgroupEmbedding& h) {
  QuotientGroup q;
  q.coset_of.assign(g->order(), -1);
  for (int x = 0; x < g->order(); ++x) {
    if (q.coset_of[x] >= 0) continue;
    const int id = static_cast<int>(q.rep_of.size());
    q.rep_of.push_back(x);
    for (int hh : h.map) q.coset_of[g->mul(x, hh)] = id;
  }
  const int m = static_cast<int>(q.rep_of.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = q.coset_of[g->mul(q.rep_of[a], q.rep_of[b])];
  q.q = FiniteGroup::from_table(g->name() + "/" + h.sub->name(), std::move(table));
  return q;
}

RestrictedTower build_restricted_tower(const GroupPtr& g, const SubgroupEmbedding& h,
                                       int cutoff, long long cap) {
  RestrictedTower t;
  t.g = g;
  t.h = h;
  t.quot = quotient_group(g, h);
  t.cutoff = cutoff;
  t.h_table = character_table(h.sub, static_cast<int>(cap));
  for (int d : t.h_table.degrees)
    if (d != 1) throw std::logic_error("linear characters expected for abelian H");
  t.g_to_h.assign(g->order(), -1);
  for (int a = 0; a < h.sub->order(); ++a) t.g_to_h[h.map[a]] = a;

  SubgroupEmbedding qtriv = trivial_subgroup(t.quot.q);
  for (int n = 0; n <= cutoff; ++n) {
    t.rw.push_back(build_restricted(g, h, n, cap));
    t.qw.push_back(build_restricted(t.quot.q, qtriv, n, cap));
    t.rw_table.push_back(character_table(t.rw[n].group, static_cast<int>(cap)));
    t.qw_table.push_back(character_table(t.qw[n].group, static_cast<int>(cap)));
    t.rw_data.push_back(t.rw_table[n].g);
    t.qw_data.push_back(t.qw_table[n].g);

    // phi: reduce entries mod H; verified to be a surjective homomorphism
    std::vector<int> pm(t.rw[n].group->order());
    for (int x = 0; x < t.rw[n].group->order(); ++x) {
      auto e = t.rw[n].ambient.decode(t.rw[n].ambient_of[x]);
      WreathShape::Elem q{e.perm, e.g};
      for (auto& gi : q.g) gi = t.quot.coset_of[gi];
      pm[x] = t.qw[n].local_of.at(t.qw[n].ambient.encode(q));
    }
    std::vector<char> hit(t.qw[n].group->order(), 0);
    for (int x = 0; x < t.rw[n].group->order(); ++x) {
      hit[pm[x]] = 1;
      for (int y = 0; y < t.rw[n].group->order(); ++y)
        if (pm[t.rw[n].group->mul(x, y)] != t.qw[n].group->mul(pm[x], pm[y]))
          throw std::logic_error("phi is not a homomorphism");
    }
    if (std::count(hit.begin(), hit.end(), char(1)) != t.qw[n].group->order())
      throw std::logic_error("phi is not surjective");
    t.phi_map.push_back(std::move(pm));

    // the diagonal copy of H^n
    std::vector<int> hn;
    std::vector<int> tup(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        WreathShape::Elem e;
        e.perm.resize(n);
        std::iota(e.perm.begin(), e.perm.end(), 0);
        e.g = tup;
        hn.push_back(t.rw[n].local_of.at(t.rw[n].ambient.encode(e)));
        return;
      }
      for (int a = 0; a < h.sub->order(); ++a) {
        tup[i] = h.map[a];
        rec(i + 1);
      }
    };
    rec(0);
    t.hn_elements.push_back(std::move(hn));
  }
  return t;
}

Complex l_n_value(const RestrictedTower& t, int n, int l, int local) {
  auto e = t.rw[n].ambient.decode(t.rw[n].ambient_of[local]);
  int sum = 0;
  for (int gi : e.g) sum = t.g->mul(sum, gi);
  const int hh = t.g_to_h[sum];
  if (hh < 0) throw std::logic_error("entry sum escaped H");
  return t.h_table.chi[l][t.h_table.g.classes->class_of[hh]];
}

ClassFunction phi_star_pullback(const RestrictedTower& t, int n, const ClassFunction& f) {
  std::vector<Complex> vals(t.rw_data[n].classes->count());
  for (int c = 0; c < t.rw_data[n].classes->count(); ++c)
    vals[c] = f.at_element(t.phi_map[n][t.rw_data[n].classes->reps[c]]);
  return ClassFunction(t.rw_data[n], std::move(vals));
}

ClassFunction tau_twist(const RestrictedTower& t, int n, int l, const ClassFunction& f) {
  std::vector<Complex> vals(t.rw_data[n].classes->count());
  for (int c = 0; c < t.rw_data[n].classes->count(); ++c)
    vals[c] = f.at_class(c) * l_n_value(t, n, l, t.rw_data[n].classes->reps[c]);
  return ClassFunction(t.rw_data[n], std::move(vals));
}

ClassFunction Phi_l(const RestrictedTower& t, int n, int l, const ClassFunction& f) {
  return tau_twist(t, n, l, phi_star_pullback(t, n, f));
}

ClassFunction Psi_l(const RestrictedTower& t, int n, int l, const ClassFunction& f) {
  std::vector<Complex> vals(t.qw_data[n].classes->count());
  // fibers of phi: the first lift found plus one alternative for the
  // well-definedness check
  const auto& pm = t.phi_map[n];
  for (int c = 0; c < t.qw_data[n].classes->count(); ++c) {
    const int target = t.qw_data[n].classes->reps[c];
    int lift = -1, lift2 = -1;
    for (int x = 0; x < t.rw[n].group->order(); ++x) {
      if (pm[x] != target) continue;
      if (lift < 0)
        lift = x;
      else {
        lift2 = x;
        break;
      }
    }
    // average of conj(l_n(x)) f(x) over the whole fiber x in H^n g~; the
    // conj(l_n) factor must cover the lift too, otherwise the value picks up
    // l_n(g~) and depends on the choice of lift
    auto value_at = [&](int lft) {
      Complex total = 0;
      for (int hx : t.hn_elements[n]) {
        const int x = t.rw[n].group->mul(hx, lft);
        total += std::conj(l_n_value(t, n, l, x)) * f.at_element(x);
      }
      return total / double(t.hn_elements[n].size());
    };
    vals[c] = value_at(lift);
    if (lift2 >= 0) {
      Complex other = value_at(lift2);
      if (std::abs(other - vals[c]) > kLiftTol)
        throw std::logic_error("Psi_l value depends on the choice of lift");
    }
  }
  return ClassFunction(t.qw_data[n], std::move(vals));
}

std::vector<HStarComposition> hstar_compositions(int slots, int total) {
  std::vector<HStarComposition> out;
  HStarComposition cur(slots, 0);
  std::function<void(int, int)> rec = [&](int slot, int rest) {
    if (slot == slots - 1) {
      cur[slot] = rest;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= rest; ++a) {
      cur[slot] = a;
      rec(slot + 1, rest - a);
    }
  };
  if (slots == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(0, total);
  return out;
}

namespace {

// block embedding G_a(G,H) x G_b(G,H) -> G_{a+b}(G,H)
SubgroupEmbedding block_embed_restricted(const RestrictedTower& t, int a, int b) {
  const RWreath& wa = t.rw[a];
  const RWreath& wb = t.rw[b];
  const RWreath& wt = t.rw[a + b];
  GroupPtr prod = direct_product(wa.group, wb.group);
  const long long ob = wb.group->order();
  std::vector<int> map(prod->order());
  for (int x = 0; x < prod->order(); ++x) {
    auto ea = wa.ambient.decode(wa.ambient_of[x / ob]);
    auto eb = wb.ambient.decode(wb.ambient_of[x % ob]);
    WreathShape::Elem big;
    big.perm.resize(a + b);
    big.g.resize(a + b);
    for (int i = 0; i < a; ++i) big.perm[i] = ea.perm[i];
    for (int i = 0; i < b; ++i) big.perm[a + i] = a + eb.perm[i];
    for (int i = 0; i < a; ++i) big.g[i] = ea.g[i];
    for (int i = 0; i < b; ++i) big.g[a + i] = eb.g[i];
    map[x] = wt.local_of.at(wt.ambient.encode(big));
  }
  SubgroupEmbedding emb{prod, wt.group, std::move(map)};
  emb.validate();
  return emb;
}

}  // namespace

ClassFunction rw_product(const RestrictedTower& t, int da, const ClassFunction& f,
                         int db, const ClassFunction& g) {
  if (da == 0) return g;
  if (db == 0) return f;
  SubgroupEmbedding emb = block_embed_restricted(t, da, db);
  GroupData prod_data = make_group_data(emb.sub);
  return induced(emb, t.rw_data[da + db], outer_tensor(prod_data, f, g));
}

ClassFunction qw_product(const RestrictedTower& t, int da, const ClassFunction& f,
                         int db, const ClassFunction& g) {
  if (da == 0) return g;
  if (db == 0) return f;
  // same block construction inside the quotient tower
  const RWreath& wa = t.qw[da];
  const RWreath& wb = t.qw[db];
  const RWreath& wt = t.qw[da + db];
  GroupPtr prod = direct_product(wa.group, wb.group);
  const long long ob = wb.group->order();
  std::vector<int> map(prod->order());
  for (int x = 0; x < prod->order(); ++x) {
    auto ea = wa.ambient.decode(wa.ambient_of[x / ob]);
    auto eb = wb.ambient.decode(wb.ambient_of[x % ob]);
    WreathShape::Elem big;
    big.perm.resize(da + db);
    big.g.resize(da + db);
    for (int i = 0; i < da; ++i) big.perm[i] = ea.perm[i];
    for (int i = 0; i < db; ++i) big.perm[da + i] = da + eb.perm[i];
    for (int i = 0; i < da; ++i) big.g[i] = ea.g[i];
    for (int i = 0; i < db; ++i) big.g[da + i] = eb.g[i];
    map[x] = wt.local_of.at(wt.ambient.encode(big));
  }
  SubgroupEmbedding emb{prod, wt.group, std::move(map)};
  emb.validate();
  GroupData prod_data = make_group_data(emb.sub);
  return induced(emb, t.qw_data[da + db], outer_tensor(prod_data, f, g));
}

ClassFunction big_phi(const RestrictedTower& t, const HStarComposition& lambda,
                      const std::vector<int>& irr_choice) {
  ClassFunction acc;
  int acc_deg = 0;
  size_t choice_at = 0;
  for (size_t l = 0; l < lambda.size(); ++l) {
    if (lambda[l] == 0) continue;
    const int m = lambda[l];
    ClassFunction piece =
        Phi_l(t, m, static_cast<int>(l), t.qw_table[m].irr(irr_choice[choice_at++]));
    if (acc_deg == 0) {
      acc = piece;
      acc_deg = m;
    } else {
      acc = rw_product(t, acc_deg, acc, m, piece);
      acc_deg += m;
    }
  }
  if (acc_deg == 0) {
    std::vector<Complex> one{1.0};
    return ClassFunction(t.rw_data[0], std::move(one));
  }
  return acc;
}

std::map<std::vector<int>, long long> big_psi_component(const RestrictedTower& t, int n,
                                                        const ClassFunction& f,
                                                        const HStarComposition& lambda) {
  // factors with nonzero block size, in slot order
  std::vector<int> slots, sizes;
  for (size_t l = 0; l < lambda.size(); ++l)
    if (lambda[l] > 0) {
      slots.push_back(static_cast<int>(l));
      sizes.push_back(lambda[l]);
    }
  std::map<std::vector<int>, long long> out;
  if (slots.empty()) {
    if (n == 0) out[{}] = guarded_round(f.at_element(0), "big_psi degree 0");
    return out;
  }
  // embedding of the product of the blocks into G_n(G,H), built by folding
  GroupPtr prod = t.rw[sizes[0]].group;
  std::vector<int> emb_map(prod->order());
  std::iota(emb_map.begin(), emb_map.end(), 0);
  int cur = sizes[0];
  {
    // re-embed the first block when there are more
    for (size_t i = 1; i < sizes.size(); ++i) {
      SubgroupEmbedding step = block_embed_restricted(t, cur, sizes[i]);
      GroupPtr next = direct_product(prod, t.rw[sizes[i]].group);
      const long long ob = t.rw[sizes[i]].group->order();
      std::vector<int> next_map(next->order());
      for (int x = 0; x < next->order(); ++x)
        next_map[x] = step.map[static_cast<long long>(emb_map[x / ob]) *
                                   t.rw[sizes[i]].group->order() +
                               (x % ob)];
      // note: step.map expects indices of direct_product(rw[cur], rw[size_i]);
      // emb_map[x/ob] is an element of rw[cur] (valid after the first fold
      // only when cur block is itself a single rw level), handled below
      prod = next;
      emb_map = std::move(next_map);
      cur += sizes[i];
    }
  }

  // decompose res f over tuples of factor irreducibles, then contract with
  // the Psi_l matrices
  std::vector<const CharacterTable*> ftab;
  for (int s : sizes) ftab.push_back(&t.rw_table[s]);
  std::vector<long long> orders;
  for (int s : sizes) orders.push_back(t.rw[s].group->order());

  // Psi_l matrices per factor: entry (sigma, pi) = <Psi_{l}(pi), sigma>
  std::vector<IntMatrix> psi_mats;
  for (size_t i = 0; i < slots.size(); ++i) {
    const int m = sizes[i];
    IntMatrix pm(t.qw_table[m].irr_count(), t.rw_table[m].irr_count());
    for (int p = 0; p < t.rw_table[m].irr_count(); ++p) {
      ClassFunction img = Psi_l(t, m, slots[i], t.rw_table[m].irr(p));
      for (int s = 0; s < t.qw_table[m].irr_count(); ++s)
        pm.at(s, p) = guarded_round(cf_inner(img, t.qw_table[m].irr(s)), "Psi_l matrix");
    }
    psi_mats.push_back(std::move(pm));
  }

  // iterate all tuples of factor irreducibles
  std::vector<int> tuple(sizes.size(), 0);
  std::function<void(size_t)> iterate = [&](size_t i) {
    if (i == sizes.size()) {
      // multiplicity of this tuple in the restriction
      Complex total = 0;
      std::vector<int> digits(sizes.size(), 0);
      std::function<void(size_t, long long, Complex)> walk = [&](size_t d, long long flat,
                                                                 Complex partial) {
        if (d == sizes.size()) {
          total += f.at_element(emb_map[flat]) * std::conj(partial);
          return;
        }
        for (int x = 0; x < orders[d]; ++x) {
          Complex chi =
              ftab[d]->chi[tuple[d]][ftab[d]->g.classes->class_of[x]];
          walk(d + 1, flat * orders[d] + x, partial * chi);
        }
      };
      walk(0, 0, 1.0);
      long long denom = 1;
      for (long long o : orders) denom *= o;
      long long mult = guarded_round(total / double(denom), "big_psi restriction");
      if (mult != 0) {
        // contract with the Psi matrices: distribute over quotient tuples
        std::vector<int> qt(sizes.size(), 0);
        std::function<void(size_t, long long)> spread = [&](size_t d, long long coeff) {
          if (coeff == 0) return;
          if (d == sizes.size()) {
            out[qt] += coeff;
            if (out[qt] == 0) out.erase(qt);
            return;
          }
          for (int s = 0; s < psi_mats[d].rows; ++s) {
            qt[d] = s;
            spread(d + 1, coeff * psi_mats[d].at(s, tuple[d]));
          }
        };
        spread(0, mult);
      }
      return;
    }
    for (int p = 0; p < ftab[i]->irr_count(); ++p) {
      tuple[i] = p;
      iterate(i + 1);
    }
  };
  iterate(0);
  return out;
}

}  // namespace psh
