#include "doctest.h"

#include <cmath>

#include "psg/conjectures.hpp"

using namespace psg;

namespace {

const PrimeTable& table() {
  static PrimeTable t = PrimeTable::sieve_upto(100000);
  return t;
}

const std::vector<SemigroupSummary>& first_rows() {
  static std::vector<SemigroupSummary> rows = compute_range(1, 30, table(), 2);
  return rows;
}

const SemigroupSummary& row(i64 n) { return first_rows()[static_cast<std::size_t>(n - 1)]; }

}  // namespace

TEST_CASE("evaluate_row margins") {
  auto r2 = evaluate_row(row(2), row(3), table());
  CHECK(r2.prop1_margin == 1);  // 4 - (9 - 6)
  CHECK(r2.wilf_lhs == Rational{3, 5});
  CHECK(r2.wilf_rhs == Rational{2, 3});
  CHECK(r2.wilf_ok);
  CHECK(r2.c1_ratio == Rational{4, 3});

  auto r4 = evaluate_row(row(4), row(5), table());
  CHECK(r4.c2_margin == 1);  // 4*7 - 27, the tight case
  CHECK(!r4.c3_odd);         // f_4 = 16

  auto r3 = evaluate_row(row(3), row(4), table());
  CHECK(r3.c2b_margin == 1);  // 16 - 15
  CHECK(r3.limsup_probe == Rational{16, 5});

  auto r5 = evaluate_row(row(5), row(6), table());
  CHECK(r5.c3_odd);
  CHECK(r5.fe_ratio == Rational{20, 11});
  CHECK(r5.lemma4_ok);  // n=5 is exempt from f <= n^2 (f_5 = 27 > 25)
  REQUIRE(r5.twin_ok.has_value());  // f_5 = 27 < 33
  CHECK(*r5.twin_ok);
}

TEST_CASE("evaluate_row preconditions") {
  CHECK_THROWS_AS(evaluate_row(row(2), row(4), table()), std::invalid_argument);
  SemigroupSummary bad = row(2);
  bad.certified = false;
  CHECK_THROWS_AS(evaluate_row(bad, row(3), table()), UncertifiedData);
}

TEST_CASE("goldbach witnesses") {
  auto w4 = goldbach_witness(4, table());
  CHECK(w4.p == 2);
  CHECK(w4.q == 2);
  CHECK(w4.constraint_ok);

  auto w10 = goldbach_witness(10, table());
  CHECK(w10.p == 3);
  CHECK(w10.q == 7);

  auto w8 = goldbach_witness(8, table());
  CHECK(w8.p == 3);
  CHECK(w8.q == 5);

  CHECK_THROWS_AS(goldbach_witness(7, table()), std::invalid_argument);
  CHECK_THROWS_AS(goldbach_witness(2, table()), std::invalid_argument);
}

TEST_CASE("goldbach witness constraints hold on a sweep") {
  for (i64 x = 4; x <= 5000; x += 2) {
    auto w = goldbach_witness(x, table());
    CHECK(w.p + w.q == x);
    CHECK(w.p <= w.q);
    CHECK(4 * w.p > x);
    CHECK(2 * w.p <= x);
    CHECK(table().is_prime(w.p));
    CHECK(table().is_prime(w.q));
  }
  CHECK(goldbach_gaps_in_range(100000, table()).empty());
}

TEST_CASE("check_prop3") {
  auto w1 = check_prop3(1, table());
  CHECK(w1.x == 8);
  CHECK(w1.p == 3);
  CHECK(w1.q == 5);

  auto w2 = check_prop3(2, table());
  CHECK(w2.p == 5);
  CHECK(w2.q == 7);

  auto w4 = check_prop3(4, table());
  CHECK(w4.p == 11);
  CHECK(w4.q == 17);

  for (i64 n = 1; n <= 300; ++n) {
    auto w = check_prop3(n, table());
    CHECK(w.p >= table().nth_prime(n + 1));
    CHECK(w.p <= w.q);
    CHECK(w.p + w.q == 4 * table().nth_prime(n));
  }
}

TEST_CASE("three prime witnesses prefer balance") {
  auto w33 = three_prime_witness(33, 11, table());
  REQUIRE(w33.has_value());
  CHECK(w33->q1 == 11);
  CHECK(w33->q2 == 11);
  CHECK(w33->q3 == 11);
  CHECK(w33->deviation == Rational{0, 1});

  auto w35 = three_prime_witness(35, 11, table());
  REQUIRE(w35.has_value());
  CHECK(w35->q1 == 11);
  CHECK(w35->q2 == 11);
  CHECK(w35->q3 == 13);

  auto w9 = three_prime_witness(9, 3, table());
  REQUIRE(w9.has_value());
  CHECK(w9->q1 == 3);
  CHECK(w9->q2 == 3);
  CHECK(w9->q3 == 3);

  CHECK_THROWS_AS(three_prime_witness(34, 11, table()), std::invalid_argument);
  CHECK_THROWS_AS(three_prime_witness(33, 12, table()), std::invalid_argument);
}

TEST_CASE("asymptotics report on the first five rows") {
  std::vector<SemigroupSummary> rows(first_rows().begin(), first_rows().begin() + 5);
  auto rep = asymptotics_report(rows, table());
  const TrendSeries* fp = find_series(rep, "f/p");
  REQUIRE(fp != nullptr);
  REQUIRE(fp->points.size() == 5);
  CHECK(fp->points[0].second == Rational{1, 2});
  CHECK(fp->points[1].second == Rational{4, 3});
  CHECK(fp->points[2].second == Rational{9, 5});
  CHECK(fp->points[3].second == Rational{16, 7});
  CHECK(fp->points[4].second == Rational{27, 11});

  CHECK(rep.max_probe == Rational{27, 7});
  CHECK(rep.argmax_n == 4);
  CHECK(rep.empirical_n0 == 5);
  CHECK(rep.empirical_c0 == doctest::Approx(3.8572).epsilon(1e-12));

  // single row: ratios echoed, no windowed mean
  std::vector<SemigroupSummary> one(first_rows().begin(), first_rows().begin() + 1);
  auto rep1 = asymptotics_report(one, table());
  CHECK(find_series(rep1, "f/p")->points.size() == 1);
  CHECK(!decade_mean(*find_series(rep1, "f/p"), 1).has_value());
}

TEST_CASE("lambda2 bound") {
  // lambda2(429) < 431 with a visible margin
  CHECK(lambda2(429.0) < 431.0);
  CHECK(lambda2(429.0) > 430.0);
  auto rep = check_lambda2(429, 100000, 1);
  CHECK(rep.checked == 100000 - 429 + 1);
  CHECK(rep.violations.empty());
  CHECK(rep.inconclusive.empty());
}
