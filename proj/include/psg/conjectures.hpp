#ifndef PSG_CONJECTURES_HPP
#define PSG_CONJECTURES_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psg/family.hpp"
#include "psg/primes.hpp"
#include "psg/rational.hpp"

namespace psg {

// Per-index margins and flags for every inequality under test. All fields are
// exact; comparisons cross-multiply integers.
struct ConjectureRow {
  i64 n = 0;
  i64 prop1_margin = 0;        // f - (3p - 6), expected >= 0
  Rational c1_ratio{0, 1};     // f / p
  i64 c2_margin = 0;           // 4 p_n - f_{n+1}, expected > 0
  i64 c2b_margin = 0;          // f_{n+1} - 3 p_n, expected > 0 for n >= 3
  bool c3_odd = false;         // f odd
  Rational wilf_lhs{0, 1};     // g / (1 + f)
  Rational wilf_rhs{0, 1};     // (e - 1) / e
  bool wilf_ok = false;
  bool pi3_lower_ok = false;   // pi(3p) > 2n
  bool pi3_upper_ok = false;   // pi(3p) < 3n
  bool lemma4_ok = false;      // f < n^2 when n >= 429, f <= n^2 when n != 5
  std::optional<bool> twin_ok;  // only when f < 3p: twin pair in [p, 3p+4]
  std::optional<Rational> fe_ratio;  // f_even / p
  Rational limsup_probe{0, 1};       // f_{n+1} / p_n
};

// next must be the summary for n+1; both certified.
ConjectureRow evaluate_row(const SemigroupSummary&, const SemigroupSummary& next,
                           const PrimeTable&);

struct GoldbachWitness {
  i64 x = 0, p = 0, q = 0;
  bool constraint_ok = false;  // p + q = x, p <= q, x/4 < p <= x/2
};

// Smallest prime p in ]x/4, x/2] with x - p prime. Throws CounterexampleFound
// when none exists.
GoldbachWitness goldbach_witness(i64 x, const PrimeTable&);

// Every even x in [4, max_even] has a witness; returns the x's that do not
// (expected empty). Builds a local primality bitmap once.
std::vector<i64> goldbach_gaps_in_range(i64 max_even, const PrimeTable&);

// Witness for x = 4 p_n with the extra constraint p >= p_{n+1}.
GoldbachWitness check_prop3(i64 n, const PrimeTable&);

struct ThreePrimeWitness {
  i64 q1 = 0, q2 = 0, q3 = 0;
  Rational deviation{0, 1};  // max_i |q_i - N/3|
};

// Primes lo <= q1 <= q2 <= q3 with q1+q2+q3 = N, preferring the most balanced
// split (q1 maximal, then q2 maximal). Absence is reported, not fatal.
std::optional<ThreePrimeWitness> three_prime_witness(i64 N, i64 lo, const PrimeTable&);

struct TrendSeries {
  std::string name;
  double limit_value = 0;
  std::vector<std::pair<i64, Rational>> points;
};

struct TrendReport {
  std::vector<TrendSeries> series;  // f/p, u/p, e/2n, pi(u)/3n, g/p, g/(1+f), f_even/p
  Rational max_probe{0, 1};  // running max of f_{n+1}/p_n
  i64 argmax_n = 0;          // first n attaining it
  i64 empirical_n0 = 0;      // argmax_n + 1
  double empirical_c0 = 0;   // max_probe rounded up at the fourth decimal
};

TrendReport asymptotics_report(std::span<const SemigroupSummary>, const PrimeTable&);

const TrendSeries* find_series(const TrendReport&, const std::string& name);

// Mean over the points with index in (at_n/10, at_n]; absent when fewer than
// two points fall inside the window.
std::optional<double> decade_mean(const TrendSeries&, i64 at_n);

double lambda2(double x);

// lambda2(x) < x + 2 on the grid {x_lo, x_lo+step, ...} ∩ [max(x_lo,429), x_hi].
BoundReport check_lambda2(i64 x_lo, i64 x_hi, i64 step);

}  // namespace psg

#endif  // PSG_CONJECTURES_HPP
