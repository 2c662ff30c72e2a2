#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "psh/restricted.hpp"

namespace psh {

namespace {

std::string rw_name(const GroupPtr& g, const SubgroupEmbedding& h) {
  return "G_n(" + g->name() + "," + h.sub->name() + ")";
}

struct PhiBasis {
  HStarComposition lambda;
  std::vector<int> irr_choice;
  ClassFunction image;
  int length;  // number of nonzero parts of lambda
};

std::vector<PhiBasis> phi_basis_of_degree(const RestrictedTower& t, int n) {
  std::vector<PhiBasis> out;
  const int slots = t.h_table.irr_count();
  for (const auto& lambda : hstar_compositions(slots, n)) {
    // all tuples of irreducibles for the nonzero blocks
    std::vector<int> block_sizes;
    for (int l = 0; l < slots; ++l)
      if (lambda[l] > 0) block_sizes.push_back(lambda[l]);
    std::vector<int> choice(block_sizes.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == block_sizes.size()) {
        PhiBasis b{lambda, choice, big_phi(t, lambda, choice), 0};
        for (int l : lambda) b.length += l > 0;
        out.push_back(std::move(b));
        return;
      }
      for (int p = 0; p < t.qw_table[block_sizes[i]].irr_count(); ++p) {
        choice[i] = p;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

std::string phi_basis_name(const PhiBasis& b) {
  std::ostringstream os;
  os << "lambda=(";
  for (size_t i = 0; i < b.lambda.size(); ++i) {
    if (i) os << ',';
    os << b.lambda[i];
  }
  os << ") irr=(";
  for (size_t i = 0; i < b.irr_choice.size(); ++i) {
    if (i) os << ',';
    os << b.irr_choice[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

CheckResult verify_theorem28(const GroupPtr& g, const SubgroupEmbedding& h, int cutoff,
                             long long cap) {
  CheckResult r;
  r.name = "theorem28(" + g->name() + "," + h.sub->name() + ", cutoff " +
           std::to_string(cutoff) + ")";
  RestrictedTower t = build_restricted_tower(g, h, cutoff, cap);
  const long long index = t.quot.q->order();
  for (int n = 1; n <= cutoff; ++n) {
    auto basis = phi_basis_of_degree(t, n);
    for (size_t i = 0; i < basis.size(); ++i) {
      for (size_t j = 0; j < basis.size(); ++j) {
        ++r.checked;
        long long got = guarded_round(cf_inner(basis[i].image, basis[j].image),
                                      "theorem28 Gram entry");
        long long expect = 0;
        if (i == j) {
          expect = 1;
          for (int e = 1; e < basis[i].length; ++e) expect *= index;
        }
        if (got != expect) {
          r.fail("Gram entry at degree " + std::to_string(n) + ", " +
                 phi_basis_name(basis[i]) + " x " + phi_basis_name(basis[j]) + ": got " +
                 std::to_string(got) + " expected " + std::to_string(expect));
          return r;
        }
      }
    }
    // weak surjectivity: every irreducible is a constituent of some image
    for (int p = 0; p < t.rw_table[n].irr_count(); ++p) {
      ++r.checked;
      bool hit = false;
      for (const auto& b : basis)
        if (guarded_round(cf_inner(b.image, t.rw_table[n].irr(p)),
                          "theorem28 surjectivity") > 0) {
          hit = true;
          break;
        }
      if (!hit) {
        r.fail("irreducible " + std::to_string(p) + " of " + t.rw[n].group->name() +
               " is missed by every Phi image");
        return r;
      }
    }
  }
  r.notes.push_back("index [G:H] = " + std::to_string(index));
  return r;
}

CheckResult verify_appendix_props(const GroupPtr& g, const SubgroupEmbedding& h,
                                  int cutoff, long long cap) {
  CheckResult r;
  r.name = "appendix-props(" + g->name() + "," + h.sub->name() + ", cutoff " +
           std::to_string(cutoff) + ")";
  RestrictedTower t = build_restricted_tower(g, h, cutoff, cap);
  const int slots = t.h_table.irr_count();

  // linear character group structure: index of the product and the inverse
  auto char_mul = [&](int a, int b) {
    for (int c = 0; c < slots; ++c) {
      bool same = true;
      for (int cl = 0; cl < t.h_table.g.classes->count() && same; ++cl)
        same = std::abs(t.h_table.chi[a][cl] * t.h_table.chi[b][cl] -
                        t.h_table.chi[c][cl]) < 1e-8;
      if (same) return c;
    }
    throw std::logic_error("linear characters not closed under product");
  };
  int triv_char = -1;
  for (int l = 0; l < slots; ++l) {
    bool is_triv = true;
    for (int cl = 0; cl < t.h_table.g.classes->count() && is_triv; ++cl)
      is_triv = std::abs(t.h_table.chi[l][cl] - 1.0) < 1e-8;
    if (is_triv) triv_char = l;
  }

  for (int n = 1; n <= cutoff; ++n) {
    const auto& qt = t.qw_table[n];
    const auto& rt = t.rw_table[n];

    // phi* sends distinct irreducibles to distinct irreducibles and
    // preserves degrees; H^n acts trivially on every image
    for (int i = 0; i < qt.irr_count(); ++i) {
      ++r.checked;
      ClassFunction img = phi_star_pullback(t, n, qt.irr(i));
      if (std::abs(cf_inner(img, img) - 1.0) > 1e-8)
        r.fail("phi* image of an irreducible is not irreducible");
      if (std::llround(img.at_element(0).real()) != qt.degrees[i])
        r.fail("phi* does not preserve degrees");
      for (int hx : t.hn_elements[n])
        if (std::abs(img.at_element(hx) - img.at_element(0)) > 1e-8)
          r.fail("H^n does not act trivially on a phi* image");
    }

    // tau is an H^*-action by isometries; tau_l adjoint is tau_{l^-1}
    for (int a = 0; a < slots; ++a) {
      for (int b = 0; b < slots; ++b) {
        ++r.checked;
        for (int i = 0; i < rt.irr_count(); ++i) {
          ClassFunction lhs = tau_twist(t, n, a, tau_twist(t, n, b, rt.irr(i)));
          ClassFunction rhs = tau_twist(t, n, char_mul(a, b), rt.irr(i));
          for (int c = 0; c < lhs.class_count(); ++c)
            if (std::abs(lhs.at_class(c) - rhs.at_class(c)) > 1e-8)
              r.fail("tau_l tau_l' != tau_{ll'}");
        }
      }
      // inverse character: the one with conjugate values
      int ainv = -1;
      for (int c = 0; c < slots; ++c)
        if (char_mul(a, c) == triv_char) ainv = c;
      for (int i = 0; i < rt.irr_count() && ainv >= 0; ++i)
        for (int j = 0; j < rt.irr_count(); ++j) {
          Complex x = cf_inner(tau_twist(t, n, a, rt.irr(i)), rt.irr(j));
          Complex y = cf_inner(rt.irr(i), tau_twist(t, n, ainv, rt.irr(j)));
          if (std::abs(x - y) > 1e-8) r.fail("tau_l* != tau_{l^-1}");
        }
      // trivial l: identity map
      if (a == triv_char)
        for (int i = 0; i < rt.irr_count(); ++i) {
          ClassFunction img = tau_twist(t, n, a, rt.irr(i));
          for (int c = 0; c < img.class_count(); ++c)
            if (std::abs(img.at_class(c) - rt.chi[i][c]) > 1e-12)
              r.fail("tau_triv is not the identity");
        }
    }

    // Prop 24: image of Phi_l = irreducibles whose H^n-restriction contains
    // l^(x)n; Prop 23: Phi_l sends irreducibles to irreducibles
    for (int l = 0; l < slots; ++l) {
      std::set<int> image;
      for (int i = 0; i < qt.irr_count(); ++i) {
        ++r.checked;
        ClassFunction img = Phi_l(t, n, l, qt.irr(i));
        long long norm = guarded_round(cf_inner(img, img), "Phi_l norm");
        if (norm != 1) {
          r.fail("Phi_l image is not irreducible");
          continue;
        }
        for (int p = 0; p < rt.irr_count(); ++p)
          if (guarded_round(cf_inner(img, rt.irr(p)), "Phi_l matching") == 1)
            image.insert(p);
      }
      for (int p = 0; p < rt.irr_count(); ++p) {
        ++r.checked;
        // multiplicity of l^(x)n in the restriction to H^n
        Complex total = 0;
        for (int hx : t.hn_elements[n])
          total += rt.irr(p).at_element(hx) * std::conj(l_n_value(t, n, l, hx));
        total /= double(t.hn_elements[n].size());
        bool contains = guarded_round(total, "Prop 24 multiplicity") > 0;
        if (contains != (image.count(p) > 0))
          r.fail("Prop 24 fails for irreducible " + std::to_string(p) + " and l=" +
                 std::to_string(l));
      }

      // Prop 27: Psi_l Phi_l = id; Phi_l Psi_l = projection onto the image
      for (int i = 0; i < qt.irr_count(); ++i) {
        ++r.checked;
        ClassFunction round_trip = Psi_l(t, n, l, Phi_l(t, n, l, qt.irr(i)));
        for (int c = 0; c < round_trip.class_count(); ++c)
          if (std::abs(round_trip.at_class(c) - qt.chi[i][c]) > 1e-8)
            r.fail("Psi_l Phi_l is not the identity");
      }
      for (int p = 0; p < rt.irr_count(); ++p) {
        ++r.checked;
        ClassFunction proj = Phi_l(t, n, l, Psi_l(t, n, l, rt.irr(p)));
        const bool in_image = image.count(p) > 0;
        for (int c = 0; c < proj.class_count(); ++c) {
          Complex expect = in_image ? rt.chi[p][c] : Complex(0.0);
          if (std::abs(proj.at_class(c) - expect) > 1e-8) {
            r.fail("Phi_l Psi_l is not the orthogonal projection onto the image");
            break;
          }
        }
      }

      // Prop 25: images of distinct Phi_l are orthogonal
      for (int l2 = l + 1; l2 < slots; ++l2)
        for (int i = 0; i < qt.irr_count(); ++i)
          for (int j = 0; j < qt.irr_count(); ++j) {
            ++r.checked;
            Complex ip = cf_inner(Phi_l(t, n, l, qt.irr(i)), Phi_l(t, n, l2, qt.irr(j)));
            if (std::abs(ip) > 1e-8) r.fail("Prop 25 orthogonality fails");
          }
    }
  }

  // Prop 23 multiplicativity: Phi_l(f g) = Phi_l(f) Phi_l(g), total degree <= 2
  if (cutoff >= 2) {
    for (int l = 0; l < slots; ++l) {
      for (int i = 0; i < t.qw_table[1].irr_count(); ++i)
        for (int j = 0; j < t.qw_table[1].irr_count(); ++j) {
          ++r.checked;
          ClassFunction lhs = Phi_l(
              t, 2, l, qw_product(t, 1, t.qw_table[1].irr(i), 1, t.qw_table[1].irr(j)));
          ClassFunction rhs = rw_product(t, 1, Phi_l(t, 1, l, t.qw_table[1].irr(i)),
                                                1, Phi_l(t, 1, l, t.qw_table[1].irr(j)));
          for (int c = 0; c < lhs.class_count(); ++c)
            if (std::abs(lhs.at_class(c) - rhs.at_class(c)) > 1e-8)
              r.fail("Phi_l is not multiplicative");
        }
    }
  }

  // Corollary 29: no irreducible is killed by big Psi, plus adjointness of
  // big Phi / big Psi on basis tuples
  for (int n = 1; n <= cutoff; ++n) {
    auto basis = phi_basis_of_degree(t, n);
    for (int p = 0; p < t.rw_table[n].irr_count(); ++p) {
      ++r.checked;
      bool nonzero = false;
      for (const auto& lambda : hstar_compositions(slots, n)) {
        auto comp = big_psi_component(t, n, t.rw_table[n].irr(p), lambda);
        if (!comp.empty()) nonzero = true;
      }
      if (!nonzero)
        r.fail("big Psi kills irreducible " + std::to_string(p) + " in degree " +
               std::to_string(n));
    }
    for (const auto& b : basis) {
      ++r.checked;
      // <Psi(pi), basis tuple> = <pi, Phi(tuple)> for every irreducible pi
      for (int p = 0; p < t.rw_table[n].irr_count(); ++p) {
        auto comp = big_psi_component(t, n, t.rw_table[n].irr(p), b.lambda);
        std::vector<int> key = b.irr_choice;
        long long lhs = 0;
        auto it = comp.find(key);
        if (it != comp.end()) lhs = it->second;
        long long rhs = guarded_round(cf_inner(t.rw_table[n].irr(p), b.image),
                                      "big Phi/Psi adjointness");
        if (lhs != rhs) {
          r.fail("big Phi and big Psi are not adjoint at " + phi_basis_name(b));
          break;
        }
      }
    }
  }
  return r;
}

CheckResult verify_corollary30(const GroupPtr& g, int cutoff, long long cap) {
  CheckResult r;
  r.name = "corollary30(" + g->name() + ", cutoff " + std::to_string(cutoff) + ")";
  SubgroupEmbedding full = full_subgroup(g);
  RestrictedTower t = build_restricted_tower(g, full, cutoff, cap);
  for (int n = 1; n <= cutoff; ++n) {
    auto basis = phi_basis_of_degree(t, n);
    // count match and exact bijection: every irreducible hit exactly once
    if (static_cast<int>(basis.size()) != t.rw_table[n].irr_count()) {
      r.fail("basis count != irreducible count in degree " + std::to_string(n));
      return r;
    }
    std::vector<int> hits(t.rw_table[n].irr_count(), 0);
    for (const auto& b : basis) {
      ++r.checked;
      long long norm = guarded_round(cf_inner(b.image, b.image), "corollary30 norm");
      if (norm != 1) {
        r.fail("Phi image is not irreducible at " + phi_basis_name(b));
        return r;
      }
      for (int p = 0; p < t.rw_table[n].irr_count(); ++p)
        if (guarded_round(cf_inner(b.image, t.rw_table[n].irr(p)), "corollary30") == 1)
          ++hits[p];
    }
    for (int p = 0; p < t.rw_table[n].irr_count(); ++p)
      if (hits[p] != 1) {
        r.fail("irreducible " + std::to_string(p) + " hit " + std::to_string(hits[p]) +
               " times in degree " + std::to_string(n));
        return r;
      }
    // Psi inverts Phi on the basis
    for (const auto& b : basis) {
      ++r.checked;
      auto comp = big_psi_component(t, n, b.image, b.lambda);
      auto it = comp.find(b.irr_choice);
      if (it == comp.end() || it->second != 1 || comp.size() != 1) {
        r.fail("Psi(Phi(t)) != t at " + phi_basis_name(b));
        return r;
      }
    }
  }
  return r;
}

CheckResult measure_hopf_defect(const GroupPtr& g, const SubgroupEmbedding& h,
                                int cutoff, long long cap) {
  CheckResult r;
  r.name = "hopf-defect(" + g->name() + "," + h.sub->name() + ")";
  r.informational = true;
  RestrictedTower t = build_restricted_tower(g, h, std::min(cutoff, 2), cap);
  if (t.cutoff < 2) {
    r.notes.push_back("cutoff too small to measure");
    return r;
  }
  // compare m*(f g) with m*(f) m*(g) on degree-1 irreducible pairs, in the
  // (1,1) component; the defect is recorded, never asserted
  long long max_defect = 0;
  SubgroupEmbedding blocks = [&] {
    GroupPtr prod = direct_product(t.rw[1].group, t.rw[1].group);
    const long long ob = t.rw[1].group->order();
    std::vector<int> map(prod->order());
    for (int x = 0; x < prod->order(); ++x) {
      auto ea = t.rw[1].ambient.decode(t.rw[1].ambient_of[x / ob]);
      auto eb = t.rw[1].ambient.decode(t.rw[1].ambient_of[x % ob]);
      WreathShape::Elem big;
      big.perm = {0, 1};
      big.g = {ea.g[0], eb.g[0]};
      map[x] = t.rw[2].local_of.at(t.rw[2].ambient.encode(big));
    }
    SubgroupEmbedding emb{prod, t.rw[2].group, std::move(map)};
    emb.validate();
    return emb;
  }();
  GroupData prod_data = make_group_data(blocks.sub);
  const auto& t1 = t.rw_table[1];
  const long long o1 = t.rw[1].group->order();
  auto pair_mult = [&](const ClassFunction& f2, int a, int b) {
    Complex total = 0;
    for (int x = 0; x < o1; ++x)
      for (int y = 0; y < o1; ++y)
        total += f2.at_element(blocks.map[x * o1 + y]) *
                 std::conj(t1.chi[a][t1.g.classes->class_of[x]] *
                           t1.chi[b][t1.g.classes->class_of[y]]);
    return guarded_round(total / double(o1 * o1), "hopf defect multiplicity");
  };
  for (int i = 0; i < t1.irr_count(); ++i) {
    for (int j = 0; j < t1.irr_count(); ++j) {
      // product f_i f_j in degree 2
      ClassFunction prod = induced(blocks, t.rw_data[2],
                                   outer_tensor(prod_data, t1.irr(i), t1.irr(j)));
      for (int a = 0; a < t1.irr_count(); ++a)
        for (int b = 0; b < t1.irr_count(); ++b) {
          ++r.checked;
          long long lhs = pair_mult(prod, a, b);
          // rhs: (f_i (x) f_j + f_j (x) f_i)-type expansion of
          // comul(f_i) comul(f_j) in the (1,1) component:
          // comul(f)_{(1,1)} = f (x) f for degree-1 f, so the product of the
          // coproducts has (1,1) part (f_i f_j placed slotwise)
          long long rhs = (a == i && b == j ? 1 : 0) + (a == j && b == i ? 1 : 0);
          max_defect = std::max(max_defect, std::llabs(lhs - rhs));
        }
    }
  }
  r.notes.push_back("max |m*(fg) - m*(f)m*(g)| coefficient over degree-1 pairs: " +
                    std::to_string(max_defect));
  return r;
}

}  // namespace psh
