#include <doctest.h>

#include <cmath>

#include "psh/restricted.hpp"

using namespace psh;

TEST_CASE("restricted wreath orders") {
  auto z4 = cyclic_group(4);
  auto z2_in_z4 = resolve_subgroup(z4, "Z2");
  RWreath g422 = build_restricted(z4, z2_in_z4, 2);
  CHECK(g422.group->order() == 16);  // G(4,2,2)

  auto z2 = cyclic_group(2);
  RWreath g223 = build_restricted(z2, trivial_subgroup(z2), 3);
  CHECK(g223.group->order() == 24);  // G(2,2,3)

  // G_n(G,G) = S_n[G]
  RWreath full = build_restricted(z2, full_subgroup(z2), 2);
  CHECK(full.group->order() == 8);
  CHECK(full.group->order() == build_wreath(z2, 2).group->order());

  CHECK_THROWS(build_restricted(symmetric_group(3), trivial_subgroup(symmetric_group(3)), 2));
}

TEST_CASE("quotient group and the reduction map") {
  auto z4 = cyclic_group(4);
  auto emb = resolve_subgroup(z4, "Z2");
  QuotientGroup q = quotient_group(z4, emb);
  CHECK(q.q->order() == 2);
  RestrictedTower t = build_restricted_tower(z4, emb, 2);
  // tower construction validates phi elementwise; spot-check degrees
  CHECK(t.rw[2].group->order() == 16);
  CHECK(t.qw[2].group->order() == 4);
  CHECK(t.h_table.irr_count() == 2);
  // pullback of the trivial character is trivial and H^n-invariant
  std::vector<Complex> ones(t.qw_data[2].classes->count(), 1.0);
  ClassFunction triv(t.qw_data[2], std::move(ones));
  ClassFunction up = phi_star_pullback(t, 2, triv);
  for (int c = 0; c < up.class_count(); ++c)
    CHECK(std::abs(up.at_class(c) - 1.0) < 1e-12);
}

TEST_CASE("tau twist is an isometric action") {
  auto z4 = cyclic_group(4);
  auto emb = resolve_subgroup(z4, "Z2");
  RestrictedTower t = build_restricted_tower(z4, emb, 2);
  const auto& rt = t.rw_table[2];
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < rt.irr_count(); ++i) {
      ClassFunction tw = tau_twist(t, 2, l, rt.irr(i));
      CHECK(std::abs(cf_inner(tw, tw) - 1.0) < 1e-8);
    }
}

TEST_CASE("Psi_l inverts Phi_l and lift independence holds") {
  auto z4 = cyclic_group(4);
  auto emb = resolve_subgroup(z4, "Z2");
  RestrictedTower t = build_restricted_tower(z4, emb, 2);
  for (int l = 0; l < t.h_table.irr_count(); ++l) {
    for (int i = 0; i < t.qw_table[2].irr_count(); ++i) {
      ClassFunction back = Psi_l(t, 2, l, Phi_l(t, 2, l, t.qw_table[2].irr(i)));
      for (int c = 0; c < back.class_count(); ++c)
        CHECK(std::abs(back.at_class(c) - t.qw_table[2].chi[i][c]) < 1e-8);
    }
  }
}

TEST_CASE("theorem 28 for G(4,2,2): norms 1 and 2") {
  auto z4 = cyclic_group(4);
  auto emb = resolve_subgroup(z4, "Z2");
  auto r = verify_theorem28(z4, emb, 2);
  CAPTURE(r.witness);
  CHECK(r.pass);

  // the two-block basis elements have norm exactly [G:H] = 2
  RestrictedTower t = build_restricted_tower(z4, emb, 2);
  HStarComposition lambda{1, 1};
  ClassFunction img = big_phi(t, lambda, {0, 0});
  CHECK(std::llround(cf_inner(img, img).real()) == 2);
}

TEST_CASE("appendix propositions for G(4,2,n)") {
  auto z4 = cyclic_group(4);
  auto emb = resolve_subgroup(z4, "Z2");
  auto r = verify_appendix_props(z4, emb, 2);
  CAPTURE(r.witness);
  CHECK(r.pass);
}

TEST_CASE("theorem 28 for (Z2, 1): Phi is essentially the identity") {
  auto z2 = cyclic_group(2);
  auto emb = trivial_subgroup(z2);
  auto r = verify_theorem28(z2, emb, 2);
  CAPTURE(r.witness);
  CHECK(r.pass);
}

TEST_CASE("corollary 30 for usual wreath products") {
  auto r = verify_corollary30(cyclic_group(2), 2);
  CAPTURE(r.witness);
  CHECK(r.pass);
}

TEST_CASE("hopf defect measurement is informational") {
  auto z4 = cyclic_group(4);
  auto emb = resolve_subgroup(z4, "Z2");
  auto r = measure_hopf_defect(z4, emb, 2);
  CHECK(r.informational);
  REQUIRE_FALSE(r.notes.empty());
  // H = G: the defect must vanish (the Hopf axiom holds there)
  auto r2 = measure_hopf_defect(z4, full_subgroup(z4), 2);
  CHECK(r2.notes.back().ends_with(": 0"));
}
