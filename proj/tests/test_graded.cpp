#include <doctest.h>

#include <random>

#include "psh/graded.hpp"
#include "psh/hopf_matrix.hpp"

using namespace psh;

namespace {
SchurVector s(std::initializer_list<int> parts) {
  return SchurVector::basis(Partition(std::vector<int>(parts)));
}
Partition p(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::vector<PartitionTuple> tuples_of_degree(int arity, int n) {
  std::vector<PartitionTuple> out;
  PartitionTuple cur(arity);
  std::function<void(int, int)> rec = [&](int slot, int rest) {
    if (slot == arity - 1) {
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
  rec(0, n);
  return out;
}
}  // namespace

TEST_CASE("comultiplication small cases") {
  GradedVector d1 = comul(s({1}));
  GradedVector expect1(2);
  expect1.add_term({p({1}), p({})}, 1);
  expect1.add_term({p({}), p({1})}, 1);
  CHECK(d1 == expect1);  // s_1 is primitive

  CHECK(comul(SchurVector::unit()) == GradedVector::unit(2));

  GradedVector d2 = comul(s({2}));
  GradedVector expect2(2);
  expect2.add_term({p({2}), p({})}, 1);
  expect2.add_term({p({1}), p({1})}, 1);
  expect2.add_term({p({}), p({2})}, 1);
  CHECK(d2 == expect2);
}

TEST_CASE("comul is adjoint to mul, degrees <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      GradedVector d = comul(SchurVector::basis(lam));
      for (int a = 0; a <= n; ++a) {
        for (const auto& mu : partitions_of(a))
          for (const auto& nu : partitions_of(n - a)) {
            Int lhs = inner(mul(SchurVector::basis(mu), SchurVector::basis(nu)),
                            SchurVector::basis(lam));
            Int rhs = d.coeff({mu, nu});
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("comul is cocommutative and coassociative, degrees <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      GradedVector d = comul(SchurVector::basis(lam));
      GradedVector swapped(2);
      for (const auto& [t, c] : d.terms()) swapped.add_term({t[1], t[0]}, c);
      CHECK(d == swapped);
      // (Delta (x) 1) Delta == (1 (x) Delta) Delta == comul_iter(.,3)
      GradedVector left(3), right(3);
      for (const auto& [t, c] : d.terms()) {
        GradedVector dl = comul(SchurVector::basis(t[0]));
        for (const auto& [u, cu] : dl.terms()) left.add_term({u[0], u[1], t[1]}, c * cu);
        GradedVector dr = comul(SchurVector::basis(t[1]));
        for (const auto& [u, cu] : dr.terms()) right.add_term({t[0], u[0], u[1]}, c * cu);
      }
      CHECK(left == right);
      CHECK(left == comul_iter(SchurVector::basis(lam), 3));
    }
  }
}

TEST_CASE("Hopf axiom: comul is an algebra morphism, total degree <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (int a = 1; a < n; ++a) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(n - a)) {
          GradedVector lhs = comul(mul(SchurVector::basis(mu), SchurVector::basis(nu)));
          GradedVector rhs = tensor_mul(comul(SchurVector::basis(mu)),
                                        comul(SchurVector::basis(nu)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("antipode identity mul(1 (x) T)comul = e e*, degrees <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      GradedVector d = comul(SchurVector::basis(lam));
      SchurVector acc;
      for (const auto& [t, c] : d.terms()) {
        SchurVector prod = mul(SchurVector::basis(t[0]), antipode(SchurVector::basis(t[1])));
        prod *= c;
        acc += prod;
      }
      CHECK(acc.is_zero());
    }
  }
  CHECK(hopf_power(0, SchurVector::unit()) == SchurVector::unit());
}

TEST_CASE("hopf_power basic values") {
  CHECK(hopf_power(1, s({2, 1})) == s({2, 1}));
  CHECK(hopf_power(0, s({2})).is_zero());
  CHECK(hopf_power(2, s({2})) == Int(3) * s({2}) + s({1, 1}));
  // matches the definition route through the tensor algebra
  for (int k = 0; k <= 3; ++k)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lam : partitions_of(n))
        CHECK(hopf_power(k, SchurVector::basis(lam)) ==
              hopf_power_via_tensor(k, SchurVector::basis(lam)));
}

TEST_CASE("Psi^k is an algebra morphism and self-adjoint (Prop 4)") {
  for (int k = 0; k <= 4; ++k) {
    for (int n = 2; n <= 4; ++n) {
      for (int a = 1; a < n; ++a)
        for (const auto& mu : partitions_of(a))
          for (const auto& nu : partitions_of(n - a)) {
            auto smu = SchurVector::basis(mu);
            auto snu = SchurVector::basis(nu);
            CHECK(hopf_power(k, mul(smu, snu)) == mul(hopf_power(k, smu), hopf_power(k, snu)));
          }
      for (const auto& lam : partitions_of(n))
        for (const auto& mu : partitions_of(n)) {
          auto sl = SchurVector::basis(lam);
          auto sm = SchurVector::basis(mu);
          CHECK(inner(hopf_power(k, sl), sm) == inner(sl, hopf_power(k, sm)));
        }
    }
  }
}

TEST_CASE("Prop 5: Psi^k Psi^l = Psi^kl and mul(Psi^k (x) Psi^l)comul = Psi^{k+l}") {
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      for (int n = 0; n <= 4; ++n) {
        for (const auto& lam : partitions_of(n)) {
          auto sl = SchurVector::basis(lam);
          CHECK(hopf_power(k, hopf_power(l, sl)) == hopf_power(k * l, sl));
          SchurVector acc;
          GradedVector dsl = comul(sl);
          for (const auto& [t, c] : dsl.terms()) {
            SchurVector prod = mul(hopf_power(k, SchurVector::basis(t[0])),
                                   hopf_power(l, SchurVector::basis(t[1])));
            prod *= c;
            acc += prod;
          }
          CHECK(acc == hopf_power(k + l, sl));
        }
      }
    }
  }
}

TEST_CASE("tensor_mul examples and unit law") {
  GradedVector a = tensor_concat(to_graded(s({1})), GradedVector::unit(1));   // s1 (x) 1
  GradedVector b = tensor_concat(GradedVector::unit(1), to_graded(s({1})));   // 1 (x) s1
  GradedVector ab = tensor_mul(a, b);
  GradedVector expect(2);
  expect.add_term({p({1}), p({1})}, 1);
  CHECK(ab == expect);

  GradedVector c = tensor_mul(expect, a);  // (s1 (x) s1)(s1 (x) 1)
  GradedVector expect2(2);
  expect2.add_term({p({2}), p({1})}, 1);
  expect2.add_term({p({1, 1}), p({1})}, 1);
  CHECK(c == expect2);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    GradedVector v(2);
    for (int t = 0; t < 3; ++t) {
      auto ps = partitions_of(int(rng() % 4));
      auto qs = partitions_of(int(rng() % 4));
      v.add_term({ps[rng() % ps.size()], qs[rng() % qs.size()]}, int(rng() % 5) - 2);
    }
    CHECK(tensor_mul(v, GradedVector::unit(2)) == v);
    CHECK(tensor_mul(GradedVector::unit(2), v) == v);
  }
}

TEST_CASE("psi_matrix collapses to known maps") {
  // 1x2 all-ones matrix is the multiplication
  HopfMatrix row(std::vector<std::vector<int>>{{1, 1}});
  GradedVector v(2);
  v.add_term({p({1}), p({1})}, 1);
  GradedVector got = psi_matrix(row, v);
  CHECK(to_schur(got) == s({2}) + s({1, 1}));

  // 1x1 [2] is the Hopf square
  HopfMatrix two(std::vector<std::vector<int>>{{2}});
  CHECK(to_schur(psi_matrix(two, to_graded(s({2})))) == hopf_power(2, s({2})));

  // identity matrix acts as the identity on basis tuples up to degree 4
  for (int k = 1; k <= 2; ++k) {
    HopfMatrix id = HopfMatrix::identity(k);
    for (int n = 0; n <= 4; ++n)
      for (const auto& t : tuples_of_degree(k, n))
        CHECK(psi_matrix(id, GradedVector::basis(t)) == GradedVector::basis(t));
  }
}

TEST_CASE("Prop 19: adjoints, products, sums of Hopf-matrix maps") {
  std::mt19937 rng(2024);
  auto random_matrix = [&](int l, int k) {
    HopfMatrix m(l, k, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < k; ++j) m.m[i][j] = int(rng() % 4);
    return m;
  };
  for (int trial = 0; trial < 6; ++trial) {
    int l = 1 + int(rng() % 2), k = 1 + int(rng() % 2), mdim = 1 + int(rng() % 2);
    HopfMatrix M = random_matrix(l, k);
    HopfMatrix N = random_matrix(k, mdim);

    // (1) (Psi^M)* = Psi^{M^T} via the pairing, per degree <= 3
    for (int n = 0; n <= 3; ++n) {
      for (const auto& u : tuples_of_degree(k, n))
        for (const auto& w : tuples_of_degree(l, n)) {
          Int lhs = tensor_inner(psi_matrix(M, GradedVector::basis(u)), GradedVector::basis(w));
          Int rhs = tensor_inner(GradedVector::basis(u),
                                 psi_matrix(M.transpose(), GradedVector::basis(w)));
          CHECK(lhs == rhs);
        }
    }

    // (2) Psi^M Psi^N = Psi^{MN}, degree <= 3
    for (int n = 0; n <= 3; ++n)
      for (const auto& u : tuples_of_degree(mdim, n))
        CHECK(psi_matrix(M, psi_matrix(N, GradedVector::basis(u))) ==
              psi_matrix(M * N, GradedVector::basis(u)));

    // (3) mu_l^(2)(Psi^{M1} (x) Psi^{M2})mu_k^*(2) = Psi^{M1+M2}, degree <= 3
    HopfMatrix M2 = random_matrix(l, k);
    for (int n = 0; n <= 3; ++n) {
      for (const auto& u : tuples_of_degree(k, n)) {
        GradedVector split = tensor_comul_iter(GradedVector::basis(u), 2);
        GradedVector acc(l);
        for (const auto& [t, c] : split.terms()) {
          PartitionTuple t1(t.begin(), t.begin() + k), t2(t.begin() + k, t.end());
          GradedVector prod = tensor_mul(psi_matrix(M, GradedVector::basis(t1)),
                                         psi_matrix(M2, GradedVector::basis(t2)));
          prod *= c;
          acc += prod;
        }
        CHECK(acc == psi_matrix(M + M2, GradedVector::basis(u)));
      }
    }
  }

  // (4) Psi^{nI} equals the tensor-algebra Hopf power, degree <= 3
  for (int k = 1; k <= 2; ++k) {
    for (int n = 0; n <= 2; ++n) {
      HopfMatrix nid = HopfMatrix::identity(k);
      for (auto& row : nid.m)
        for (auto& e : row) e *= n;
      for (int d = 0; d <= 3; ++d)
        for (const auto& u : tuples_of_degree(k, d))
          CHECK(psi_matrix(nid, GradedVector::basis(u)) ==
                tensor_hopf_power(n, GradedVector::basis(u)));
    }
  }
}

TEST_CASE("graded vector parsing round trip") {
  GradedVector v(2);
  v.add_term({p({2}), p({})}, 3);
  v.add_term({p({1}), p({1})}, -1);
  CHECK(parse_graded(v.to_string(), 2) == v);
}
