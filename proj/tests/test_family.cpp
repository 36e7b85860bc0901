#include "doctest.h"

#include <vector>

#include "psg/family.hpp"

using namespace psg;

namespace {

const PrimeTable& table() {
  static PrimeTable t = PrimeTable::sieve_upto(100000);
  return t;
}

}  // namespace

TEST_CASE("compute_summary small families") {
  auto s1 = compute_summary(1, table());
  CHECK(s1.p == 2);
  CHECK(s1.f == 1);
  CHECK(s1.g == 1);
  CHECK(s1.e == 2);
  CHECK(s1.u == 3);
  CHECK(s1.atoms == std::vector<i64>{2, 3});
  CHECK(!s1.f_even.has_value());  // explicit absence, never 0
  CHECK(s1.certified);

  auto s2 = compute_summary(2, table());
  CHECK(s2.p == 3);
  CHECK(s2.f == 4);
  CHECK(s2.g == 3);
  CHECK(s2.e == 3);
  CHECK(s2.u == 7);
  CHECK(s2.f_even == 4);

  auto s5 = compute_summary(5, table());
  CHECK(s5.p == 11);
  CHECK(s5.f == 27);
  CHECK(s5.g == 19);
  CHECK(s5.e == 7);
  CHECK(s5.u == 31);
  CHECK(s5.f_even == 20);
  CHECK(s5.atoms == std::vector<i64>{11, 13, 17, 19, 23, 29, 31});
}

TEST_CASE("compute_summary argument and sieve errors") {
  CHECK_THROWS_AS(compute_summary(0, table()), std::invalid_argument);
  PrimeTable tiny = PrimeTable::sieve_upto(150);
  // p_30 = 113, first window 509 outgrows the table
  CHECK_THROWS_AS(compute_summary(30, tiny), std::out_of_range);
  CHECK_THROWS_AS(compute_summary(100000, table()), std::out_of_range);
  CHECK_THROWS_AS(compute_summary(3, table(), Rational{1, 1}), WindowTooSmall);
}

TEST_CASE("summaries are window stable") {
  for (i64 n : {1, 2, 7, 25, 60}) {
    auto a = compute_summary(n, table(), {9, 2});
    auto b = compute_summary(n, table(), {11, 2});
    CHECK(a.f == b.f);
    CHECK(a.g == b.g);
    CHECK(a.e == b.e);
    CHECK(a.u == b.u);
    CHECK(a.atoms == b.atoms);
    CHECK(a.f_even == b.f_even);
  }
}

TEST_CASE("compute_range ordering and determinism across jobs") {
  auto serial = compute_range(1, 60, table(), 1);
  auto parallel = compute_range(1, 60, table(), 4);
  REQUIRE(serial.size() == 60);
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < serial.size(); ++i)
    CHECK(serial[i].n == static_cast<i64>(i) + 1);

  std::vector<i64> fs;
  for (i64 n = 1; n <= 5; ++n) fs.push_back(serial[static_cast<std::size_t>(n - 1)].f);
  CHECK(fs == std::vector<i64>{1, 4, 9, 16, 27});

  auto single = compute_range(2, 2, table(), 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].f == 4);
}

TEST_CASE("family invariants on a medium sweep") {
  auto rows = compute_range(1, 120, table(), 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& s = rows[i];
    CHECK(s.p == table().nth_prime(s.n));
    CHECK(s.certified);
    CHECK(s.f >= 3 * s.p - 6);
    CHECK(s.e == static_cast<i64>(s.atoms.size()));
    CHECK(s.u == s.atoms.back());
    if (i + 1 < rows.size()) CHECK(s.f <= rows[i + 1].f);  // nested semigroups

    if (s.n >= 2) {
      for (i64 a : s.atoms) CHECK(a % 2 == 1);
      // every prime in [p, 3p) is an atom
      auto low_primes = table().primes_in(s.p, 3 * s.p);
      CHECK(std::includes(s.atoms.begin(), s.atoms.end(), low_primes.begin(), low_primes.end()));
      CHECK(s.e >= table().prime_count(3 * s.p) - s.n + 1);
    }
  }
}

TEST_CASE("compute_range propagates the offending index") {
  PrimeTable small = PrimeTable::sieve_upto(600);
  // n=25 (p=97) needs a 437-wide window: fine; n=40 (p=173) does not fit,
  // so the sweep locally re-sieves and still succeeds
  auto rows = compute_range(25, 40, small, 2);
  CHECK(rows.size() == 16);
  CHECK(rows.back().certified);
  auto reference = compute_range(25, 40, table(), 2);
  CHECK(rows == reference);
}

TEST_CASE("selmer bound values and hypothesis flag") {
  // n=3: N = pi(15) - 2 = 4, a_N = 13, bound = 2*13*floor(5/4) - 5 = 21
  auto b3 = selmer_bound(3, table());
  CHECK(b3.terms == 4);
  CHECK(b3.largest_generator == 13);
  CHECK(b3.bound == 21);
  CHECK(!b3.hypothesis_violated);

  // n=1: N = pi(6) - 1 + 1 = 3 > p_1 = 2, outside the theorem's hypothesis
  auto b1 = selmer_bound(1, table());
  CHECK(b1.terms == 3);
  CHECK(b1.hypothesis_violated);

  // n=2: N = pi(9) - 1 = 3 = p_2, the hypothesis N <= a_1 just holds
  auto b2 = selmer_bound(2, table());
  CHECK(b2.terms == 3);
  CHECK(!b2.hypothesis_violated);

  // n=429: the bound caps f_429
  auto b429 = selmer_bound(429, table());
  CHECK(!b429.hypothesis_violated);
  auto s429 = compute_summary(429, table());
  CHECK(s429.f == 9015);
  CHECK(s429.f <= b429.bound);
  CHECK(s429.f < 429 * 429);
}

TEST_CASE("cross-check policy triggers the apery backend") {
  CrossCheckPolicy cc;
  CHECK(cc.applies(1));
  CHECK(cc.applies(100));
  CHECK(!cc.applies(101));
  CHECK(cc.applies(200));
  cc.enabled = false;
  CHECK(!cc.applies(1));
  // a sweep with the policy on matches one with it off
  auto with = compute_range(1, 40, table(), 2, {9, 2}, CrossCheckPolicy{true, 100, 100});
  auto without = compute_range(1, 40, table(), 2, {9, 2}, CrossCheckPolicy{false, 0, 1});
  CHECK(with == without);
}

TEST_CASE("sieve_limit_for covers the sweep") {
  for (i64 n : {1, 10, 100, 2000}) {
    i64 limit = sieve_limit_for(n, {9, 2});
    PrimeTable t = PrimeTable::sieve_upto(limit);
    CHECK(t.size() >= n);
    CHECK(limit >= (9 * t.nth_prime(n) + 1) / 2);
  }
}
