#include "generators.hpp"

#include "multischur/errors.hpp"
#include "multischur/partition.hpp"

#include <doctest.h>

#include <set>

using namespace multischur;

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("4,2,1") == Partition({4, 2, 1}));
  CHECK(Partition::parse("").empty());
  CHECK(Partition({3, 1, 0, 0}).length() == 2);
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition({2, -1}), ValidationError);
  CHECK(Partition({4, 2, 1}).to_string() == "4,2,1");
  CHECK(Partition({4, 2, 1}).size() == 7);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
}

TEST_CASE("fermionic set examples") {
  CHECK(fermionic_set(Partition({4, 2, 1}), -4).elements == std::vector<int>{3, 0, -2, -4});
  CHECK(fermionic_set(Partition(), -3).elements == std::vector<int>{-1, -2, -3});
  CHECK(fermionic_set(Partition({1}), -2).elements == std::vector<int>{0, -2});
  CHECK_THROWS_AS(fermionic_set(Partition({1, 1, 1}), -2), ValidationError);
}

TEST_CASE("partition_from_set rejects sets that are not a vacuum deformation") {
  FermionicSet s;
  s.window_low = -3;
  s.elements = {2, -1};  // wrong charge
  CHECK_THROWS_AS(partition_from_set(s), ValidationError);
}

TEST_CASE("hook counts") {
  CHECK(hook_count(Partition()) == 1);
  CHECK(hook_count(Partition({2, 1})) == 2);
  CHECK(hook_count(Partition({3, 2})) == 5);
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_partitions(0).size() == 1);
  const auto three = enumerate_partitions(3);
  REQUIRE(three.size() == 7);
  CHECK(three[2] == Partition({2}));
  CHECK(three[3] == Partition({1, 1}));
  CHECK(three[5] == Partition({2, 1}));
  CHECK(enumerate_partitions(10).size() == 139);
  CHECK_THROWS_AS(enumerate_partitions(41), ValidationError);
  CHECK(enumerate_partitions(41, 50).size() > 0);
}

TEST_CASE("enumerator restarts") {
  PartitionEnumerator e(4);
  int a = 0;
  while (e.next()) ++a;
  e.reset();
  int b = 0;
  while (e.next()) ++b;
  CHECK(a == b);
  CHECK(a == 12);
}

TEST_CASE("invariants on all partitions up to size 12") {
  std::set<Partition> seen;
  for (const Partition& p : enumerate_partitions(12)) {
    CHECK(seen.insert(p).second);
    const Partition c = conjugate(p);
    CHECK(conjugate(c) == p);
    CHECK(c.size() == p.size());
    CHECK(c.length() == p.first());
    const FermionicSet s = fermionic_set(p, -p.length() - 2);
    CHECK(partition_from_set(s) == p);
    CHECK(s.elements.front() == p.first() - 1);
    CHECK_FALSE(s.contains(-p.length()));
    CHECK(s.contains(-p.length() - 1));
  }
}

TEST_CASE("sum of squared hook counts is k!") {
  BigInt fact = 1;
  for (int k = 0; k <= 8; ++k) {
    if (k > 0) fact *= k;
    BigInt sum = 0;
    for (const Partition& p : enumerate_partitions(k))
      if (p.size() == k) sum += hook_count(p) * hook_count(p);
    CHECK(sum == fact);
  }
}

TEST_CASE("property: random partitions round-trip through S(lambda)") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition p = gen::partition(rng, rng.uniform(0, 60));
    const int low = -p.length() - rng.uniform(0, 5);
    CHECK(partition_from_set(fermionic_set(p, low)) == p);
    CHECK(conjugate(conjugate(p)) == p);
  }
}
