#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permball/classes.hpp"
#include "permball/oracle.hpp"
#include "test_support.hpp"

using namespace permball;
using permball::testing::random_permutation;

namespace {

Permutation transposition(int n) { return Permutation::from_cycles(n, {{1, 2}}); }

// Pairs (sigma, tau) in T x T with sigma tau = pi, straight from the definition.
long pair_count(int n, int r, const Permutation& pi) {
  std::vector<Permutation> t;
  enumerate_T(n, r, [&](const Permutation& p) { t.push_back(p); });
  long count = 0;
  for (const auto& a : t)
    for (const auto& b : t) count += compose(a, b) == pi;
  return count;
}

}  // namespace

TEST_CASE("omega_size matches the pair definition") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int trial = 0; trial < 6; ++trial) {
        const auto pi = random_permutation(n, rng);
        CHECK(oracle::omega_size(n, r, pi) == pair_count(n, r, pi));
      }
    }
  }
}

TEST_CASE("omega_size reference values") {
  CHECK(oracle::omega_size(6, 3, Permutation(6)) == count_T(6, 3));
  CHECK(oracle::omega_size(6, 5, transposition(6)) == 358);
  CHECK(oracle::omega_size(9, 5, transposition(9)) == 2564);
  CHECK_THROWS_AS(oracle::omega_size(10, 5, transposition(10)), std::out_of_range);
  oracle::Options forced;
  forced.force = true;
  // 32/3*1000 - 89*100 + 739/3*10 - 220
  CHECK(oracle::omega_size(10, 5, transposition(10), forced) == 4010);
  CHECK_THROWS_AS(oracle::omega_size(5, 0, transposition(5)), std::out_of_range);
  CHECK_THROWS_AS(oracle::omega_size(5, 2, transposition(4)), std::invalid_argument);
}

TEST_CASE("omega_size invariances") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    const int r = 1 + trial % n;
    const auto pi = random_permutation(n, rng);
    const auto delta = random_permutation(n, rng);
    const BigInt base = oracle::omega_size(n, r, pi);
    CHECK(oracle::omega_size(n, r, conjugate(pi, delta)) == base);
    CHECK(oracle::omega_size(n, r, inverse(pi)) == base);
    if (r < n) CHECK(oracle::omega_size(n, r + 1, pi) >= base);
  }
}

TEST_CASE("omega_size depends only on the padded cycle type") {
  // pi in S_4 embedded in S_7 at different positions.
  const auto a = Permutation::from_cycles(7, {{1, 2, 3}, {4, 5}});
  const auto b = Permutation::from_cycles(7, {{7, 2, 5}, {1, 6}});
  for (int r = 1; r <= 7; ++r) CHECK(oracle::omega_size(7, r, a) == oracle::omega_size(7, r, b));
  const auto small = Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(oracle::omega_size(7, 4, small.extended(7)) == oracle::omega_size(7, 4, a));
}

TEST_CASE("each ordered pair of T x T is counted once over all classes") {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      BigInt total = 0;
      for (const auto& info : class_representatives(n, n)) {
        total += info.class_size * oracle::omega_size(n, r, info.representative);
      }
      const BigInt t = count_T(n, r);
      CHECK(total == t * t);
    }
  }
}

TEST_CASE("intersection_max") {
  CHECK(oracle::intersection_max(6, 5, 2) == 0);
  CHECK(oracle::intersection_max(6, 2, 5) == 358);
  for (int n = 3; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) CHECK(oracle::intersection_max(n, 2, r) == oracle::omega_size(n, r, transposition(n)));
  }
  // Moving exactly 4 points in S_6: classes 4 and 2^2.
  const BigInt four = oracle::omega_size(6, 3, Permutation::from_cycles(6, {{1, 2, 3, 4}}));
  const BigInt double_swap = oracle::omega_size(6, 3, Permutation::from_cycles(6, {{1, 2}, {3, 4}}));
  CHECK(oracle::intersection_max(6, 4, 3) == (four > double_swap ? four : double_swap));
  CHECK(oracle::intersection_max(5, 0, 2) == count_T(5, 2));
  CHECK_THROWS_AS(oracle::intersection_max(6, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(oracle::intersection_max(6, 7, 3), std::out_of_range);
}

TEST_CASE("n_bruteforce") {
  const auto n52 = oracle::n_bruteforce(5, 2);
  CHECK(n52.value == 3);
  // At radius 2 the maximum comes from 3-cycles, (a b)(b c); a transposition only gets 2.
  CHECK_FALSE(n52.transposition_attains());
  REQUIRE(n52.maximizers.size() == 1);
  CHECK(format_cycle_type(n52.maximizers[0]) == "3");
  CHECK(oracle::omega_size(5, 2, transposition(5)) == 2);
  CHECK(oracle::n_bruteforce(6, 3).value == 18);  // 4n - 6 at n = 6
  const auto full = oracle::n_bruteforce(5, 5);
  CHECK(full.value == 120);
  CHECK(full.maximizers.size() == class_types(5, 5).size() - 1);  // every class ties at n!
  CHECK_THROWS_AS(oracle::n_bruteforce(5, 1), std::out_of_range);
  CHECK_THROWS_AS(oracle::n_bruteforce(12, 3), std::out_of_range);

  oracle::Options threaded;
  threaded.threads = 4;
  const auto serial = oracle::n_bruteforce(7, 4);
  const auto parallel = oracle::n_bruteforce(7, 4, threaded);
  CHECK(serial.value == parallel.value);
  CHECK(serial.maximizers == parallel.maximizers);
}

TEST_CASE("brute force N(n, r) small-radius closed forms") {
  for (int n = 4; n <= 7; ++n) {
    CHECK(oracle::n_bruteforce(n, 2).value == 3);
    CHECK(oracle::n_bruteforce(n, 3).value == 4 * n - 6);
    CHECK(oracle::n_bruteforce(n, 4).value == 7 * n * n - 31 * n + 36);
  }
}
