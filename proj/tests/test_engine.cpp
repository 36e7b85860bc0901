#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "psg/apery.hpp"
#include "psg/engine.hpp"
#include "psg/primes.hpp"

using namespace psg;

namespace {

const PrimeTable& table() {
  static PrimeTable t = PrimeTable::sieve_upto(5000);
  return t;
}

std::set<i64> nonmembers(const MembershipMap& m) {
  std::set<i64> out;
  for (i64 x = 0; x < m.window; ++x)
    if (!m.contains(x)) out.insert(x);
  return out;
}

// quadratic multi oracle: x is a sum of two nonzero members
std::vector<char> multi_oracle(const std::vector<char>& member, i64 window) {
  std::vector<char> multi(static_cast<std::size_t>(window), 0);
  for (i64 y = 1; y < window; ++y) {
    if (!member[static_cast<std::size_t>(y)]) continue;
    for (i64 z = y; y + z < window; ++z) {
      if (member[static_cast<std::size_t>(z)]) multi[static_cast<std::size_t>(y + z)] = 1;
    }
  }
  return multi;
}

MembershipMap build(i64 p, i64 window) {
  auto gens = table().primes_in(p, window);
  return build_membership(p, gens, window);
}

}  // namespace

TEST_CASE("membership examples") {
  std::vector<i64> g357{3, 5, 7};
  auto m = build_membership(3, g357, 20);
  CHECK(nonmembers(m) == std::set<i64>{1, 2, 4});

  std::vector<i64> g23{2, 3};
  CHECK(nonmembers(build_membership(2, g23, 10)) == std::set<i64>{1});

  std::vector<i64> g5{5, 7, 11, 13};
  CHECK(nonmembers(build_membership(5, g5, 30)) == std::set<i64>{1, 2, 3, 4, 6, 8, 9});
}

TEST_CASE("membership argument errors") {
  std::vector<i64> g{3, 5, 7};
  CHECK_THROWS_AS(build_membership(3, g, 5), WindowTooSmall);
  CHECK_THROWS_AS(build_membership(3, std::vector<i64>{}, 20), std::invalid_argument);
  CHECK_THROWS_AS(build_membership(5, g, 20), std::invalid_argument);  // min(G) != p
  std::vector<i64> too_big{3, 25};
  CHECK_THROWS_AS(build_membership(3, too_big, 20), std::invalid_argument);
}

TEST_CASE("frobenius scan and certificate") {
  auto m = build(3, 20);
  auto scan = frobenius(m);
  CHECK(scan.frobenius_candidate == 4);
  CHECK(scan.run_start == 5);
  CHECK(scan.window_ok);
  auto cert = certify(m, scan, table().primes_in_span(3, 3 + scan.frobenius_candidate + 1));
  CHECK(cert.valid());

  auto m23 = build(2, 10);
  CHECK(frobenius(m23).frobenius_candidate == 1);

  auto m5 = build(5, 25);
  auto scan5 = frobenius(m5);
  CHECK(scan5.frobenius_candidate == 9);
  CHECK(scan5.window_ok);
  CHECK(certify(m5, scan5, table().primes_in_span(5, 15)).valid());
}

TEST_CASE("certificate failure on truncated window") {
  // window 2p+1 is far below f+p for p=11, so the scan cannot certify
  auto gens = table().primes_in(11, 23);
  auto m = build_membership(11, gens, 23);
  auto scan = frobenius(m);
  CHECK(!scan.window_ok);
  auto cert = certify(m, scan, gens);
  CHECK(!cert.valid());
  CHECK_THROWS_AS(genus(m, cert), UncertifiedData);
  CHECK_THROWS_AS(atoms(m, cert), UncertifiedData);
  CHECK_THROWS_AS(largest_even_gap(m, cert), UncertifiedData);
  CHECK_THROWS_AS(gap_histogram(m, cert), UncertifiedData);
}

TEST_CASE("genus atoms and even gap examples") {
  auto check = [](i64 p, i64 window, i64 want_f, i64 want_g, std::vector<i64> want_atoms) {
    auto m = build(p, window);
    auto scan = frobenius(m);
    auto cert = certify(m, scan, table().primes_in_span(p, p + scan.frobenius_candidate + 1));
    REQUIRE(cert.valid());
    CHECK(cert.frobenius_candidate == want_f);
    CHECK(genus(m, cert) == want_g);
    CHECK(atoms(m, cert) == want_atoms);
  };
  check(2, 12, 1, 1, {2, 3});
  check(3, 20, 4, 3, {3, 5, 7});
  check(5, 25, 9, 7, {5, 7, 11, 13});
  check(7, 35, 16, 12, {7, 11, 13, 17, 19, 23});  // S_4: e=6, u=23=p+f

  auto m = build(3, 20);
  auto cert = certify(m, frobenius(m), table().primes_in_span(3, 8));
  CHECK(largest_even_gap(m, cert) == 4);

  auto m23 = build(2, 10);
  auto cert23 = certify(m23, frobenius(m23), table().primes_in_span(2, 4));
  CHECK(!largest_even_gap(m23, cert23).has_value());

  auto m11 = build(11, 50);
  auto cert11 = certify(m11, frobenius(m11), table().primes_in_span(11, 11 + 27 + 1));
  REQUIRE(cert11.valid());
  CHECK(cert11.frobenius_candidate == 27);
  CHECK(largest_even_gap(m11, cert11) == 20);
}

TEST_CASE("gap histogram") {
  auto m = build(3, 20);
  auto cert = certify(m, frobenius(m), table().primes_in_span(3, 8));
  auto alpha = gap_histogram(m, cert);  // gaps {1,2,4}, p=3
  REQUIRE(alpha.size() == 3);           // k = 0..ceil(4/3) = 0..2
  CHECK(alpha[0] == Rational{2, 4});
  CHECK(alpha[1] == Rational{1, 4});
  CHECK(alpha[2] == Rational{0, 4});

  auto m11 = build(11, 50);
  auto cert11 = certify(m11, frobenius(m11), table().primes_in_span(11, 39));
  auto alpha11 = gap_histogram(m11, cert11);
  CHECK(alpha11[0] == Rational{10, 12});  // S_5: every x in [1,10] is a gap
}

TEST_CASE("engine equals naive oracle on random generator sets") {
  std::mt19937_64 rng(20240817);
  const std::vector<i64> small_primes = table().primes_in(2, 50);
  for (int iter = 0; iter < 40; ++iter) {
    i64 p = small_primes[rng() % small_primes.size()];
    i64 window = 2 * p + 1 + static_cast<i64>(rng() % (10 * p));
    // random subset of the primes in [p, window), always keeping p
    std::vector<i64> gens{p};
    for (i64 q : table().primes_in(p + 1, window))
      if (rng() % 3 != 0) gens.push_back(q);

    auto m = build_membership(p, gens, window);
    auto naive = naive_reachability_oracle(gens, window);
    for (i64 x = 0; x < window; ++x) {
      REQUIRE(m.contains(x) == (naive[static_cast<std::size_t>(x)] != 0));
    }
    auto multi = multi_oracle(naive, window);
    for (i64 x = 0; x < window; ++x) {
      REQUIRE(m.is_multi(x) == (multi[static_cast<std::size_t>(x)] != 0));
    }
  }
}

TEST_CASE("membership structural invariants") {
  std::mt19937_64 rng(7);
  for (i64 p : {3, 11, 23, 47}) {
    i64 window = 6 * p;
    auto m = build(p, window);
    CHECK(m.contains(0));
    for (i64 x = 1; x < p; ++x) CHECK(!m.contains(x));

    // closure spot-check on random member pairs
    for (int k = 0; k < 200; ++k) {
      i64 x = static_cast<i64>(rng() % window);
      i64 y = static_cast<i64>(rng() % window);
      if (m.contains(x) && m.contains(y) && x + y < window) CHECK(m.contains(x + y));
    }

    // every positive member is a generator or a proper sum
    for (i64 x = 1; x < window; ++x) {
      if (!m.contains(x)) continue;
      bool in_g = std::binary_search(m.generators.begin(), m.generators.end(), x);
      CHECK((in_g || m.is_multi(x)));
      if (m.is_multi(x)) CHECK(x >= 2 * p);
    }

    // odd generators only: every even member is a proper sum
    if (p >= 3)
      for (i64 x = 2; x < window; x += 2)
        if (m.contains(x)) CHECK(m.is_multi(x));
  }
}

TEST_CASE("monotonicity in the generator set") {
  for (i64 p : {5, 13, 31}) {
    i64 window = 6 * p;
    auto all = table().primes_in(p, window);
    auto half = table().primes_in(p, window / 2);
    auto m_half = build_membership(p, half, window);
    auto m_all = build_membership(p, all, window);
    for (i64 x = 0; x < window; ++x)
      if (m_half.contains(x)) CHECK(m_all.contains(x));
    CHECK(frobenius(m_all).frobenius_candidate <= frobenius(m_half).frobenius_candidate);
  }
}

TEST_CASE("certificate soundness under window doubling") {
  for (i64 p : {3, 7, 19, 53}) {
    i64 window = 5 * p;
    auto m = build(p, window);
    auto scan = frobenius(m);
    REQUIRE(scan.window_ok);
    auto cert = certify(m, scan, table().primes_in_span(p, p + scan.frobenius_candidate + 1));
    REQUIRE(cert.valid());

    auto m2 = build(p, 2 * window);
    auto scan2 = frobenius(m2);
    auto cert2 = certify(m2, scan2, table().primes_in_span(p, p + scan2.frobenius_candidate + 1));
    REQUIRE(cert2.valid());
    CHECK(scan.frobenius_candidate == scan2.frobenius_candidate);
    CHECK(genus(m, cert) == genus(m2, cert2));
    CHECK(atoms(m, cert) == atoms(m2, cert2));
  }
}

TEST_CASE("atoms stay inside [p, p+f]") {
  for (i64 p : {2, 3, 11, 41, 97}) {
    auto m = build(p, 6 * p);
    auto scan = frobenius(m);
    auto cert = certify(m, scan, table().primes_in_span(p, p + scan.frobenius_candidate + 1));
    REQUIRE(cert.valid());
    for (i64 a : atoms(m, cert)) {
      CHECK(a >= p);
      CHECK(a <= p + cert.frobenius_candidate);
      CHECK(table().is_prime(a));
    }
  }
}
