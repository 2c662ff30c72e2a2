#include <doctest.h>

#include <cmath>
#include <set>

#include "psh/character.hpp"
#include "psh/group.hpp"
#include "psh/rep_maps.hpp"
#include "psh/schur.hpp"
#include "psh/sn_chars.hpp"

using namespace psh;

TEST_CASE("catalog construction and orders") {
  CHECK(trivial_group()->order() == 1);
  CHECK(cyclic_group(6)->order() == 6);
  CHECK(symmetric_group(3)->order() == 6);
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(alternating_group(4)->order() == 12);
  CHECK(dihedral_group(4)->order() == 8);
  CHECK(dihedral_group(6)->order() == 12);
  CHECK(quaternion_group()->order() == 8);
  CHECK(catalog_group("Z2xZ2")->order() == 4);
  CHECK_THROWS(catalog_group("E8"));
  CHECK(cyclic_group(5)->is_abelian());
  CHECK_FALSE(symmetric_group(3)->is_abelian());
}

TEST_CASE("conjugacy classes") {
  auto z3 = make_group_data(cyclic_group(3));
  CHECK(z3.classes->count() == 3);
  CHECK(z3.classes->sizes == std::vector<int>{1, 1, 1});

  auto s3 = make_group_data(symmetric_group(3));
  CHECK(s3.classes->count() == 3);
  CHECK(s3.classes->sizes == std::vector<int>{1, 3, 2});
  CHECK(s3.classes->reps[0] == 0);

  auto q8 = make_group_data(quaternion_group());
  std::multiset<int> q8_sizes(q8.classes->sizes.begin(), q8.classes->sizes.end());
  CHECK(q8_sizes == std::multiset<int>{1, 1, 2, 2, 2});
}

TEST_CASE("character tables: frozen small cases") {
  auto z2 = character_table(cyclic_group(2));
  REQUIRE(z2.irr_count() == 2);
  CHECK(z2.degrees == std::vector<int>{1, 1});
  CHECK(std::abs(z2.chi[0][0] - 1.0) < 1e-9);
  CHECK(std::abs(z2.chi[0][1] - 1.0) < 1e-9);
  CHECK(std::abs(z2.chi[1][0] - 1.0) < 1e-9);
  CHECK(std::abs(z2.chi[1][1] + 1.0) < 1e-9);

  auto s3 = character_table(symmetric_group(3));
  REQUIRE(s3.irr_count() == 3);
  CHECK(s3.degrees == std::vector<int>{1, 1, 2});
  // canonical order: trivial, sign, 2-dim with values (2, 0, -1)
  CHECK(std::abs(s3.chi[2][0] - 2.0) < 1e-8);
  CHECK(std::abs(s3.chi[2][1] - 0.0) < 1e-8);
  CHECK(std::abs(s3.chi[2][2] + 1.0) < 1e-8);

  auto q8 = character_table(quaternion_group());
  CHECK(q8.degrees == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("character table invariants over the catalog") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    auto t = character_table(g);
    CAPTURE(name);
    long long sq = 0;
    for (int d : t.degrees) sq += (long long)d * d;
    CHECK(sq == g->order());
    const int r = t.irr_count();
    REQUIRE(r == t.g.classes->count());
    // row orthogonality within 1e-8
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Complex ip = cf_inner(t.irr(i), t.irr(j));
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-8);
      }
    // column orthogonality within 1e-6
    for (int c = 0; c < r; ++c)
      for (int d = 0; d < r; ++d) {
        Complex ip = 0;
        for (int i = 0; i < r; ++i) ip += t.chi[i][c] * std::conj(t.chi[i][d]);
        double expect = c == d ? double(g->order()) / t.g.classes->sizes[c] : 0.0;
        CHECK(std::abs(ip - expect) < 1e-6);
      }
  }
}

TEST_CASE("character table cap") {
  CHECK_THROWS(character_table(symmetric_group(6)));          // order 720 over the default cap
  CHECK_NOTHROW(character_table(symmetric_group(6), 1000));   // raised cap
}

TEST_CASE("restriction matrices: frozen examples") {
  auto s3 = symmetric_group(3);
  auto s3_t = character_table(s3);

  SUBCASE("H = 1: single row of degrees") {
    auto emb = trivial_subgroup(s3);
    auto t1 = character_table(emb.sub);
    IntMatrix m = restriction_matrix(t1, s3_t, emb);
    REQUIRE(m.rows == 1);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 2);
  }

  SUBCASE("A3 in S3") {
    auto emb = resolve_subgroup(s3, "A3");
    CHECK(emb.sub->order() == 3);
    auto a3_t = character_table(emb.sub);
    IntMatrix m = restriction_matrix(a3_t, s3_t, emb);
    IntMatrix expect = IntMatrix::parse("1 1 0  0 0 1  0 0 1", 3, 3);
    CHECK(m == expect);
  }

  SUBCASE("center of Q8") {
    auto q8 = quaternion_group();
    auto emb = center_subgroup(q8);
    CHECK(emb.sub->order() == 2);
    auto z_t = character_table(emb.sub);
    IntMatrix m = restriction_matrix(z_t, character_table(q8), emb);
    IntMatrix expect = IntMatrix::parse("1 1 1 1 0  0 0 0 0 2", 2, 5);
    CHECK(m == expect);
  }
}

TEST_CASE("Frobenius reciprocity at matrix level, several pairs") {
  auto pairs = std::vector<std::pair<std::string, std::string>>{
      {"S3", "1"}, {"S3", "A3"}, {"S3", "Z2"}, {"Z4", "Z2"},
      {"Q8", "center"}, {"Z6", "Z3"}, {"D4", "center"}};
  for (auto& [gname, hspec] : pairs) {
    CAPTURE(gname);
    CAPTURE(hspec);
    auto g = catalog_group(gname);
    auto emb = resolve_subgroup(g, hspec);
    auto ht = character_table(emb.sub);
    auto gt = character_table(g);
    CHECK(restriction_matrix(ht, gt, emb) == induction_matrix(ht, gt, emb));
  }
}

TEST_CASE("inner_condition examples") {
  auto z4 = cyclic_group(4);
  CHECK(inner_condition(resolve_subgroup(z4, "Z2")));
  auto q8 = quaternion_group();
  CHECK(inner_condition(center_subgroup(q8)));
  auto s3 = symmetric_group(3);
  CHECK_FALSE(inner_condition(resolve_subgroup(s3, "A3")));  // conjugation inverts A3
  CHECK_FALSE(is_normal(resolve_subgroup(s3, "Z2")));
  for (const auto& name : {"Z6", "S3", "Q8", "A4"}) {
    auto g = catalog_group(name);
    CHECK(inner_condition(trivial_subgroup(g)));
    CHECK(inner_condition(full_subgroup(g)));
  }
}

TEST_CASE("centralizing coset representatives") {
  auto q8 = quaternion_group();
  CHECK(centralizing_reps_exist(center_subgroup(q8)));
  auto z4 = cyclic_group(4);
  CHECK(centralizing_reps_exist(resolve_subgroup(z4, "Z2")));
  auto s3 = symmetric_group(3);
  CHECK(centralizing_reps_exist(trivial_subgroup(s3)));
}

TEST_CASE("theorem 21") {
  auto s3 = symmetric_group(3);
  auto r1 = verify_theorem21(character_table(trivial_group()), character_table(s3),
                             trivial_subgroup(s3));
  CHECK(r1.pass);
  CHECK_FALSE(r1.informational);

  auto q8 = quaternion_group();
  auto zemb = center_subgroup(q8);
  auto r2 = verify_theorem21(character_table(zemb.sub), character_table(q8), zemb);
  CHECK(r2.pass);

  auto a3 = resolve_subgroup(s3, "A3");
  auto r3 = verify_theorem21(character_table(a3.sub), character_table(s3), a3);
  CHECK(r3.informational);
  // the recorded product is [[2,0,0],[0,1,1],[0,1,1]]
  IntMatrix m = restriction_matrix(character_table(a3.sub), character_table(s3), a3);
  IntMatrix expect = IntMatrix::parse("2 0 0  0 1 1  0 1 1", 3, 3);
  CHECK(m * m.transpose() == expect);
}

TEST_CASE("Murnaghan-Nakayama characters") {
  // S3 table by cycle type: classes (1,1,1), (2,1), (3)
  CHECK(sn_character(Partition({3}), Partition({1, 1, 1})) == 1);
  CHECK(sn_character(Partition({3}), Partition({2, 1})) == 1);
  CHECK(sn_character(Partition({3}), Partition({3})) == 1);
  CHECK(sn_character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  CHECK(sn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(sn_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(sn_character(Partition({2, 1}), Partition({3})) == -1);
  // S4: chi_{(2,2)} = (2, 0, 2, -1, 0) on (1^4),(2,1^2),(2^2),(3,1),(4)
  CHECK(sn_character(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
  CHECK(sn_character(Partition({2, 2}), Partition({2, 1, 1})) == 0);
  CHECK(sn_character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(sn_character(Partition({2, 2}), Partition({3, 1})) == -1);
  CHECK(sn_character(Partition({2, 2}), Partition({4})) == 0);
  // degree at the identity equals the hook-length dimension
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> ones(n, 1);
    for (const auto& lam : partitions_of(n))
      CHECK(sn_character(lam, Partition(ones)) == partition_dimension(lam));
  }
  // orthogonality of MN rows against the Burnside table of S4
  auto s4 = make_group_data(symmetric_group(4));
  for (const auto& lam : partitions_of(4)) {
    auto f = sn_class_function(lam, s4);
    CHECK(std::abs(cf_inner(f, f) - 1.0) < 1e-9);
  }
}

TEST_CASE("LR coefficient cross-check against the S6 character oracle") {
  // <chi_{(3,2,1)}, ind_{S3 x S3}^{S6} chi_{(2,1)} (x) chi_{(2,1)}> computed
  // entirely on the group side (MN characters + Frobenius induction formula).
  auto s6 = symmetric_group(6);
  auto s6d = make_group_data(s6);
  auto s3 = symmetric_group(3);
  auto prod = direct_product(s3, s3);
  auto prod_d = make_group_data(prod);

  // block embedding S3 x S3 -> S6 via permutation images
  const auto& perms3 = s3->perms();
  const auto& perms6 = s6->perms();
  std::map<std::vector<int>, int> index6;
  for (size_t i = 0; i < perms6.size(); ++i) index6[perms6[i]] = int(i);
  std::vector<int> emb_map(prod->order());
  for (int x = 0; x < prod->order(); ++x) {
    const auto& pa = perms3[x / 6];
    const auto& pb = perms3[x % 6];
    std::vector<int> big(6);
    for (int i = 0; i < 3; ++i) big[i] = pa[i];
    for (int i = 0; i < 3; ++i) big[3 + i] = pb[i] + 3;
    emb_map[x] = index6.at(big);
  }
  SubgroupEmbedding emb{prod, s6, emb_map};
  emb.validate();

  auto s3d = make_group_data(s3);
  auto chi21 = sn_class_function(Partition({2, 1}), s3d);
  auto outer = outer_tensor(prod_d, chi21, chi21);
  auto ind = induced(emb, s6d, outer);
  auto chi321 = sn_class_function(Partition({3, 2, 1}), s6d);
  long long mult = guarded_round(cf_inner(ind, chi321), "lr oracle");
  CHECK(mult == 2);
  CHECK(mult == lr_coeff(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1}))
                    .convert_to<long long>());
}

TEST_CASE("group file ingestion") {
  auto z4 = parse_group_text("cayley 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n", "file-z4");
  CHECK(z4->order() == 4);
  CHECK(z4->is_abelian());
  auto s3 = parse_group_text("perm 3\ngen 2 1 3\ngen 2 3 1\n", "file-s3");
  CHECK(s3->order() == 6);
  CHECK_THROWS(parse_group_text("cayley 2\n0 1\n1 1\n", "bad"));
  CHECK_THROWS(parse_group_text("perm 3\ngen 1 1 2\n", "bad"));
}

TEST_CASE("subgroup resolution from element-list files") {
  auto d4 = dihedral_group(4);
  auto emb = resolve_subgroup(d4, "elems:0,1,3,6");  // the rotations
  CHECK(emb.sub->order() == 4);
  CHECK(emb.sub->is_abelian());
  CHECK(is_normal(emb));
  CHECK_THROWS(resolve_subgroup(d4, "elems:0,1"));  // not closed
}

TEST_CASE("character table CSV export") {
  auto t = character_table(symmetric_group(3));
  std::string csv = character_table_csv(t);
  CHECK(csv.find("class_size,1,3,2") == 0);
  CHECK(csv.find("chi_2,2,0,-1") != std::string::npos);
}
