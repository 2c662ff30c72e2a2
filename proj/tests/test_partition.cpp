#include <doctest.h>

#include <set>

#include "psh/partition.hpp"

using namespace psh;

TEST_CASE("partition basics") {
  Partition empty{};
  CHECK(empty.size() == 0);
  CHECK(empty.rows() == 0);
  CHECK(empty.to_string() == "[]");

  Partition lam({3, 1, 1});
  CHECK(lam.size() == 5);
  CHECK(lam.part(0) == 3);
  CHECK(lam.part(7) == 0);
  CHECK(lam.conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  CHECK(Partition({4, 1}).conjugate() == Partition({2, 1, 1, 1}));

  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("canonical order: degree first, then reverse-lex") {
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));
  CHECK(Partition({2}) < Partition({1, 1}));
  CHECK(Partition({2}) < Partition({3}));  // lower degree first
  // counts p(0..8) = 1,1,2,3,5,7,11,15,22
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == size_t(expected[n]));
}

TEST_CASE("containment and enumeration with containment") {
  Partition mu({2, 1});
  auto ext = partitions_of_containing(4, mu);
  std::set<std::string> names;
  for (auto& p : ext) names.insert(p.to_string());
  CHECK(names == std::set<std::string>{"[3,1]", "[2,2]", "[2,1,1]"});
}

TEST_CASE("hook length dimensions") {
  CHECK(partition_dimension(Partition{}) == 1);
  CHECK(partition_dimension(Partition({4})) == 1);
  CHECK(partition_dimension(Partition({2, 1})) == 2);
  CHECK(partition_dimension(Partition({2, 2})) == 2);
  CHECK(partition_dimension(Partition({3, 2})) == 5);
  CHECK(partition_dimension(Partition({3, 3, 1})) == 21);
}

TEST_CASE("sum of squared dimensions is n!") {
  Int fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    Int total = 0;
    for (const auto& lam : partitions_of(n)) {
      Int d = partition_dimension(lam);
      total += d * d;
    }
    CHECK(total == fact);
  }
}

TEST_CASE("cycle type") {
  CHECK(cycle_type({0, 1, 2}) == Partition({1, 1, 1}));
  CHECK(cycle_type({1, 0, 2}) == Partition({2, 1}));
  CHECK(cycle_type({1, 2, 0}) == Partition({3}));
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2,1") == Partition({2, 1}));
  CHECK(parse_partition("[3,2,1]") == Partition({3, 2, 1}));
  CHECK(parse_partition("[]") == Partition{});
  CHECK(parse_partition("") == Partition{});
}
