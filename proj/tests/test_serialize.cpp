#include <doctest.h>

#include <random>

#include "psh/serialize.hpp"
#include "psh/wreath.hpp"
#include "psh/table_algebra.hpp"

using namespace psh;

TEST_CASE("schur vector json round trip is bit exact") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    SchurVector v;
    const int terms = int(rng() % 6);
    for (int t = 0; t < terms; ++t) {
      auto ps = partitions_of(int(rng() % 7));
      Int coeff = Int(int(rng() % 2001)) - 1000;
      // mix in a coefficient too large for 64 bits
      if (t == 0) coeff = Int("123456789012345678901234567890");
      v.add_term(ps[rng() % ps.size()], coeff);
    }
    std::string one = schur_to_json(v);
    SchurVector back = schur_from_json(one);
    CHECK(back == v);
    CHECK(schur_to_json(back) == one);  // bit-exact
  }
  CHECK(schur_from_json("[]").is_zero());
}

TEST_CASE("module table json round trip") {
  SchurAlgebra sa = schur_algebra(3);
  ModuleTable m = schur_power_module(sa, 2);
  std::string one = module_to_json(m);
  ModuleTable back = module_from_json(one);
  CHECK(back.twist() == m.twist());
  CHECK(back.cutoff() == m.cutoff());
  for (int d = 0; d <= 3; ++d) {
    REQUIRE(back.basis_size(d) == m.basis_size(d));
    for (const auto& b : m.basis_of_degree(d)) {
      CHECK(back.label(b) == m.label(b));
      CHECK(back.coact_basis(b) == m.coact_basis(b));
    }
  }
  for (const auto& h : m.algebra()->basis_up_to(3)) {
    if (h.deg == 0) continue;
    for (int dm = 0; h.deg + dm <= 3; ++dm)
      for (const auto& b : m.basis_of_degree(dm))
        CHECK(back.act_basis(h, b) == m.act_basis(h, b));
  }
  CHECK(module_to_json(back) == one);
  // the revived module still verifies
  CHECK(verify_k_hopf(back, 3).pass);
}

TEST_CASE("wreath module round trip through json") {
  auto z2 = cyclic_group(2);
  RgBasis rh = build_rg_basis(trivial_group(), 2);
  RgBasis rg = build_rg_basis(z2, 2);
  auto emb = trivial_subgroup(z2);
  AlgebraPtr alg = wreath_tower_algebra(rh);
  ModuleTable m = wreath_module(rh, rg, emb, alg);
  ModuleTable back = module_from_json(module_to_json(m));
  CHECK(back.twist() == 2);
  CHECK(verify_k_hopf(back, 2).pass);
  CHECK(check_module_axioms(back, 2).pass);
}

TEST_CASE("check result json shape") {
  CheckResult r;
  r.name = "demo";
  r.checked = 7;
  r.fail("w");
  std::string j = check_to_json(r);
  CHECK(j.find("\"check\":\"demo\"") != std::string::npos);
  CHECK(j.find("\"status\":\"fail\"") != std::string::npos);
  CHECK(j.find("\"witness\":\"w\"") != std::string::npos);
}
