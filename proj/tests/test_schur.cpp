#include <doctest.h>

#include <atomic>
#include <thread>

#include "oracles.hpp"
#include "psh/schur.hpp"

using namespace psh;

namespace {
SchurVector s(std::initializer_list<int> parts) {
  return SchurVector::basis(Partition(std::vector<int>(parts)));
}
}  // namespace

TEST_CASE("lr_coeff frozen values") {
  // degree-1 Pieri case: s_1 * s_1 = s_2 + s_11
  CHECK(lr_coeff(Partition({1, 1}), Partition({1}), Partition({1})) == 1);
  CHECK(lr_coeff(Partition({2}), Partition({1}), Partition({1})) == 1);
  // degree mismatch is 0, totally
  CHECK(lr_coeff(Partition({3}), Partition({2}), Partition({2})) == 0);
  // c^{(3,2,1)}_{(2,1),(2,1)} = 2 (also cross-checked against the S_6
  // character oracle in test_wreath.cpp)
  CHECK(lr_coeff(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
}

TEST_CASE("mul matches the Pieri oracle") {
  CHECK(s({1}) * s({1}) == s({2}) + s({1, 1}));
  CHECK(s({2}) * s({1}) == s({3}) + s({2, 1}));
  CHECK(s({2, 1}) * s({1}) == s({3, 1}) + s({2, 2}) + s({2, 1, 1}));

  for (int n = 0; n <= 4; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int k = 1; k <= 3; ++k) {
        auto row = mul(SchurVector::basis(mu), SchurVector::basis(Partition({k})));
        CHECK(row == testing::pieri_row(mu, k));
        std::vector<int> ones(k, 1);
        auto col = mul(SchurVector::basis(mu), SchurVector::basis(Partition(ones)));
        CHECK(col == testing::pieri_column(mu, k));
      }
    }
  }
}

TEST_CASE("mul is commutative and associative, basis elements degree <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int a = 1; a < n; ++a) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(n - a)) {
          CHECK(mul(SchurVector::basis(mu), SchurVector::basis(nu)) ==
                mul(SchurVector::basis(nu), SchurVector::basis(mu)));
        }
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    for (int a = 1; a <= n - 2; ++a) {
      for (int b = 1; b <= n - a - 1; ++b) {
        for (const auto& x : partitions_of(a))
          for (const auto& y : partitions_of(b))
            for (const auto& z : partitions_of(n - a - b)) {
              auto sx = SchurVector::basis(x);
              auto sy = SchurVector::basis(y);
              auto sz = SchurVector::basis(z);
              CHECK(mul(mul(sx, sy), sz) == mul(sx, mul(sy, sz)));
            }
      }
    }
  }
}

TEST_CASE("positivity of structure constants") {
  for (int n = 2; n <= 5; ++n)
    for (int a = 1; a < n; ++a)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(n - a))
          CHECK(mul(SchurVector::basis(mu), SchurVector::basis(nu)).is_positive());
}

TEST_CASE("inner product") {
  CHECK(inner(s({2}), s({2})) == 1);
  CHECK(inner(s({2}), s({1, 1})) == 0);
  CHECK(inner(s({1}) * s({1}), s({2})) == 1);
  CHECK(inner(s({1}) * s({1}), s({1}) * s({1})) == 2);
}

TEST_CASE("antipode closed form and small cases") {
  CHECK(antipode(SchurVector::unit()) == SchurVector::unit());
  CHECK(antipode(s({1})) == Int(-1) * s({1}));
  // degree-2 antipode recursion: T(s_2) = s_1^2 - s_2 = s_{11}
  SchurVector t2 = s({1}) * s({1}) - s({2});
  CHECK(antipode(s({2})) == t2);
  CHECK(t2 == s({1, 1}));
}

TEST_CASE("schur vector arithmetic, printing, parsing") {
  SchurVector v = Int(3) * s({2}) + s({1, 1});
  CHECK(v.to_string() == "3*s[2] + 1*s[1,1]");
  CHECK(parse_schur("3*s[2] + 1*s[1,1]") == v);
  CHECK(parse_schur("s[2,1] - s[3]") == s({2, 1}) - s({3}));
  CHECK(parse_schur("0").is_zero());
  SchurVector z = v - v;
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  CHECK(v.homogeneous(2) == v);
  CHECK(v.homogeneous(3).is_zero());
  CHECK(v.is_positive());
  CHECK_FALSE((v - Int(5) * s({2})).is_positive());
}

TEST_CASE("schur_dimension") {
  CHECK(schur_dimension(Partition({5})) == 1);
  CHECK(schur_dimension(Partition({2, 1})) == 2);
  CHECK(schur_dimension(Partition({2, 2})) == 2);
}

TEST_CASE("lr memo is safe under concurrent callers") {
  // hammer the same coefficients from several threads; results must agree
  // with a fresh sequential computation
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&ok] {
      for (int rep = 0; rep < 50; ++rep) {
        for (const auto& lam : partitions_of(6))
          for (const auto& mu : partitions_of(3))
            for (const auto& nu : partitions_of(3)) {
              Int a = lr_coeff(lam, mu, nu);
              if (a < 0) ok = false;
            }
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(ok);
  CHECK(lr_coeff(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
}
