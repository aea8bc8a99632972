#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "permball/classes.hpp"
#include "permball/cycle_type.hpp"
#include "permball/permutation.hpp"
#include "test_support.hpp"

using namespace permball;
using permball::testing::generated_order;
using permball::testing::random_permutation;
using permball::testing::symmetric_group;

namespace {

Permutation cyc(int n, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(n, cycles); }

}  // namespace

TEST_CASE("compose applies the left factor first") {
  CHECK(compose(cyc(3, {{1, 2}}), Permutation(3)) == cyc(3, {{1, 2}}));
  // 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  CHECK(compose(cyc(3, {{1, 2}}), cyc(3, {{1, 3}})) == Permutation::from_images({2, 3, 1}));
  CHECK(compose(cyc(3, {{1, 2}}), cyc(3, {{1, 2}})).is_identity());
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("inverse and conjugate") {
  CHECK(conjugate(cyc(3, {{1, 2}}), Permutation(3)) == cyc(3, {{1, 2}}));
  CHECK(conjugate(cyc(3, {{1, 2}}), cyc(3, {{2, 3}})) == cyc(3, {{1, 3}}));
  CHECK(inverse(cyc(3, {{1, 2, 3}})) == cyc(3, {{1, 3, 2}}));
  CHECK_THROWS_AS(conjugate(Permutation(2), Permutation(3)), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    const auto s = random_permutation(n, rng);
    const auto d = random_permutation(n, rng);
    CHECK(conjugate(s, d) == compose(compose(inverse(d), s), d));
  }
}

TEST_CASE("the worked example of pushing a pair into [2r]") {
  // pi = (1 3 8 6), sigma = (1 3 8 11 12), tau = (12 11 6 1) in S_12; delta = (11 2 12 4).
  const auto pi = cyc(12, {{1, 3, 8, 6}});
  const auto sigma = cyc(12, {{1, 3, 8, 11, 12}});
  const auto tau = cyc(12, {{12, 11, 6, 1}});
  const auto delta = cyc(12, {{11, 2, 12, 4}});
  CHECK(compose(sigma, tau) == pi);
  CHECK(moved_points(cyc(10, {{1, 3, 8, 6}})) == std::vector<int>{1, 3, 6, 8});
  CHECK(conjugate(pi, delta) == pi);
  CHECK(conjugate(sigma, delta) == cyc(12, {{1, 3, 8, 2, 4}}));
  CHECK(conjugate(tau, delta) == cyc(12, {{4, 2, 6, 1}}));
}

TEST_CASE("moved points") {
  CHECK(moved_points(Permutation(4)).empty());
  CHECK(moved_points(cyc(5, {{1, 2}})) == std::vector<int>{1, 2});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const auto s = random_permutation(n, rng);
    const auto d = random_permutation(n, rng);
    CHECK(moved_count(s) == moved_count(inverse(s)));
    CHECK(moved_count(conjugate(s, d)) == moved_count(s));
    CHECK(cycle_type(conjugate(s, d)) == cycle_type(s));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const auto a = random_permutation(n, rng), b = random_permutation(n, rng), c = random_permutation(n, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("hamming distance") {
  const auto s = cyc(5, {{1, 4, 2}});
  CHECK(hamming_distance(s, s) == 0);
  CHECK(hamming_distance(cyc(3, {{1, 2}}), cyc(3, {{1, 3}})) == 3);
  CHECK(hamming_distance(cyc(3, {{1, 2}}), Permutation(3)) == 2);
  CHECK_THROWS_AS(hamming_distance(Permutation(2), Permutation(3)), std::invalid_argument);
}

TEST_CASE("hamming distance is a metric that never takes the value 1") {
  for (int n = 1; n <= 5; ++n) {
    const auto group = symmetric_group(n);
    for (const auto& a : group) {
      for (const auto& b : group) {
        const int dab = hamming_distance(a, b);
        CHECK(dab == moved_count(compose(a, inverse(b))));
        CHECK(dab != 1);
        CHECK((dab == 0) == (a == b));
        CHECK(dab == hamming_distance(b, a));
      }
    }
    if (n > 4) continue;  // triangle inequality over all triples, n <= 4
    for (const auto& a : group)
      for (const auto& b : group)
        for (const auto& c : group) CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
  }
}

TEST_CASE("enumerate_T counts") {
  auto count = [](int n, int r) {
    std::size_t c = 0;
    enumerate_T(n, r, [&](const Permutation&) { ++c; });
    return c;
  };
  CHECK(count(6, 0) == 1);
  CHECK(count(4, 2) == 7);
  CHECK(count(6, 5) == 455);  // 720 - D_6
  CHECK(count(1, 1) == 1);
  CHECK(count(5, 1) == 1);
  CHECK(count_T(6, 5) == 455);
  CHECK(count_T(14, 7) == count(14, 7));
  CHECK_THROWS_AS(enumerate_T(4, 5, [](const Permutation&) {}), std::out_of_range);
  CHECK_THROWS_AS(enumerate_T(4, -1, [](const Permutation&) {}), std::out_of_range);
}

TEST_CASE("enumerate_T matches a direct filter of S_n") {
  for (int n = 1; n <= 7; ++n) {
    const auto group = symmetric_group(n);
    for (int r = 0; r <= n; ++r) {
      std::set<Permutation> expected;
      for (const auto& p : group) {
        if (moved_count(p) <= r) expected.insert(p);
      }
      std::set<Permutation> seen;
      std::size_t visits = 0;
      enumerate_T(n, r, [&](const Permutation& p) {
        ++visits;
        seen.insert(p);
      });
      CHECK(visits == expected.size());
      CHECK(seen == expected);
      CHECK(count_T(n, r) == static_cast<unsigned long>(expected.size()));
    }
  }
}

TEST_CASE("class representatives") {
  auto nontrivial = [](int n) { return class_representatives(n, n).size() - 1; };
  CHECK(nontrivial(10) == 41);
  // p(12) = 77 and p(14) = 135 count the identity class too.
  CHECK(class_representatives(12, 12).size() == 77);
  CHECK(class_representatives(14, 14).size() == 135);
  CHECK(nontrivial(12) == 76);
  CHECK(nontrivial(14) == 134);

  const auto small = class_representatives(4, 2);
  REQUIRE(small.size() == 2);
  CHECK(small[0].cycle_type.is_identity());
  CHECK(format_cycle_type(small[1].cycle_type) == "2");

  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& info : class_representatives(n, n)) {
      total += info.class_size;
      CHECK(info.class_size * info.centralizer_order == factorial(static_cast<unsigned long>(n)));
      CHECK(cycle_type(info.representative) == info.cycle_type);
    }
    CHECK(total == factorial(static_cast<unsigned long>(n)));
  }

  const auto reps = class_representatives(7, 7);
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(canonical_less(reps[i - 1].cycle_type, reps[i].cycle_type));
  CHECK(canonical_representative(parse_cycle_type("3,2^2", 8)) == cyc(8, {{1, 2, 3}, {4, 5}, {6, 7}}));
  CHECK_THROWS_AS(class_representatives(4, 5), std::out_of_range);
}

TEST_CASE("class sizes agree with an enumeration of S_n") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, long> counted;
    for (const auto& p : symmetric_group(n)) ++counted[format_cycle_type(cycle_type(p))];
    for (const auto& ct : class_types(n, n)) CHECK(class_size(ct) == counted[format_cycle_type(ct)]);
  }
  CHECK(centralizer_order(CycleType(4)) == 24);
  CHECK(class_size(CycleType(4)) == 1);
  CHECK(class_size(parse_cycle_type("2", 4)) == 6);
}

TEST_CASE("centralizer of a transposition has order 2 (n-2)!") {
  for (int n = 2; n <= 6; ++n) {
    const auto t = cyc(n, {{1, 2}});
    long commuting = 0;
    for (const auto& p : symmetric_group(n)) commuting += compose(p, t) == compose(t, p);
    CHECK(commuting == 2 * factorial(static_cast<unsigned long>(n - 2)));
    CHECK(centralizer_order(cycle_type(t)) == commuting);
  }
}

TEST_CASE("cycle type strings") {
  const auto two = parse_cycle_type("2", 10);
  CHECK(two.multiplicities() == CycleType::Multiplicities{{2, 1}});
  const auto mixed = parse_cycle_type("3,2^2", 10);
  CHECK(mixed.multiplicities() == CycleType::Multiplicities{{3, 1}, {2, 2}});
  CHECK(mixed.moved_count() == 7);
  CHECK(format_cycle_type(parse_cycle_type("2^2,4,3", 12)) == "4,3,2^2");
  CHECK(format_cycle_type(CycleType(5)) == "1");
  CHECK(parse_cycle_type("1", 5).is_identity());

  CHECK_THROWS_AS(parse_cycle_type("2^8", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("1,2", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("2,,3", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("2^0", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("2^", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("x", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycle_type("99999999999", 10), std::out_of_range);

  for (int n = 1; n <= 12; ++n) {
    for (const auto& ct : class_types(n, n)) CHECK(parse_cycle_type(format_cycle_type(ct), n) == ct);
  }
}

TEST_CASE("centralizer generators generate the full centralizer") {
  CHECK(generated_order(3, centralizer_generators(Permutation(3))) == 6);
  CHECK(generated_order(4, centralizer_generators(cyc(4, {{1, 2}}))) == 4);
  CHECK(generated_order(4, centralizer_generators(cyc(4, {{1, 2}, {3, 4}}))) == 8);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& info : class_representatives(n, n)) {
      const auto gens = centralizer_generators(info.representative);
      for (const auto& g : gens) CHECK(compose(g, info.representative) == compose(info.representative, g));
      CHECK(generated_order(n, gens) == info.centralizer_order.get_ui());
    }
  }
}

TEST_CASE("permutation construction errors") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(0), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK(Permutation(1).is_identity());
  CHECK(cyc(5, {{2, 5}, {1, 3, 4}}).to_cycle_string() == "(1 3 4)(2 5)");
}
