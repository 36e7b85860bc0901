#include "psg/conjectures.hpp"

#include <algorithm>
#include <cmath>

namespace psg {

ConjectureRow evaluate_row(const SemigroupSummary& s, const SemigroupSummary& next,
                           const PrimeTable& table) {
  if (next.n != s.n + 1)
    throw std::invalid_argument("evaluate_row: successor summary must be for n+1");
  if (!s.certified || !next.certified)
    throw UncertifiedData("evaluate_row: refusing uncertified summaries");

  ConjectureRow r;
  r.n = s.n;
  r.prop1_margin = s.f - (3 * s.p - 6);
  r.c1_ratio = {s.f, s.p};
  r.c2_margin = 4 * s.p - next.f;
  r.c2b_margin = next.f - 3 * s.p;
  r.c3_odd = (s.f % 2) != 0;
  r.wilf_lhs = {s.g, 1 + s.f};
  r.wilf_rhs = {s.e - 1, s.e};
  r.wilf_ok = s.g * s.e <= (1 + s.f) * (s.e - 1);
  const i64 pi3 = table.prime_count(3 * s.p);
  r.pi3_lower_ok = pi3 > 2 * s.n;
  r.pi3_upper_ok = pi3 < 3 * s.n;
  r.lemma4_ok = (s.n < 429 || s.f < s.n * s.n) && (s.n == 5 || s.f <= s.n * s.n);
  if (s.f < 3 * s.p) r.twin_ok = table.twin_pair_in(s.p, 3 * s.p + 4).has_value();
  if (s.f_even) r.fe_ratio = Rational{*s.f_even, s.p};
  r.limsup_probe = {next.f, s.p};
  return r;
}

GoldbachWitness goldbach_witness(i64 x, const PrimeTable& table) {
  if (x < 4 || x % 2 != 0)
    throw std::invalid_argument("goldbach_witness: x must be an even number >= 4");
  if (x > table.limit())
    throw ResieveNeeded(x, "goldbach_witness: x beyond sieve limit");
  for (i64 p : table.primes_in_span(x / 4 + 1, x / 2 + 1))
    if (table.is_prime(x - p)) return {x, p, x - p, true};
  throw CounterexampleFound(x, "goldbach_witness: no decomposition with x/4 < p <= x/2");
}

std::vector<i64> goldbach_gaps_in_range(i64 max_even, const PrimeTable& table) {
  if (max_even > table.limit())
    throw ResieveNeeded(max_even, "goldbach_gaps_in_range: bound beyond sieve limit");
  max_even -= max_even % 2;  // normalize odd bounds down
  std::vector<i64> missing;
  if (max_even < 4) return missing;

  std::vector<char> prime(static_cast<std::size_t>(max_even) + 1, 0);
  for (i64 q : table.primes_in_span(2, max_even + 1)) prime[static_cast<std::size_t>(q)] = 1;

  const auto& primes = table.primes();
  for (i64 x = 4; x <= max_even; x += 2) {
    auto it = std::upper_bound(primes.begin(), primes.end(), x / 4);
    bool found = false;
    for (; it != primes.end() && *it * 2 <= x; ++it) {
      if (prime[static_cast<std::size_t>(x - *it)]) {
        found = true;
        break;
      }
    }
    if (!found) missing.push_back(x);
  }
  return missing;
}

GoldbachWitness check_prop3(i64 n, const PrimeTable& table) {
  if (n < 1) throw std::invalid_argument("check_prop3: n must be at least 1");
  const i64 x = 4 * table.nth_prime(n);
  if (x > table.limit()) throw ResieveNeeded(x, "check_prop3: 4p beyond sieve limit");
  const i64 p_next = table.nth_prime(n + 1);
  for (i64 p : table.primes_in_span(p_next, x / 2 + 1))
    if (table.is_prime(x - p)) return {x, p, x - p, true};
  throw CounterexampleFound(x, "check_prop3: no decomposition 4p_n = p + q with p >= p_{n+1}");
}

std::optional<ThreePrimeWitness> three_prime_witness(i64 N, i64 lo, const PrimeTable& table) {
  if (N % 2 == 0 || N < 3 * lo)
    throw std::invalid_argument("three_prime_witness: N must be odd and at least 3*lo");
  if (N > table.limit()) throw ResieveNeeded(N, "three_prime_witness: N beyond sieve limit");

  const auto& primes = table.primes();
  auto idx_below = [&primes](i64 x) {  // index of the largest prime <= x, or -1
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    return static_cast<i64>(it - primes.begin()) - 1;
  };

  for (i64 i = idx_below(N / 3); i >= 0; --i) {
    const i64 q1 = primes[static_cast<std::size_t>(i)];
    if (q1 < lo) break;
    const i64 rest = N - q1;
    for (i64 j = idx_below(rest / 2); j >= i; --j) {
      const i64 q2 = primes[static_cast<std::size_t>(j)];
      const i64 q3 = rest - q2;
      if (!table.is_prime(q3)) continue;
      i64 dev3 = std::max({3 * q3 - N, N - 3 * q1, 3 * q2 > N ? 3 * q2 - N : N - 3 * q2});
      return ThreePrimeWitness{q1, q2, q3, reduced(dev3, 3)};
    }
  }
  return std::nullopt;
}

TrendReport asymptotics_report(std::span<const SemigroupSummary> rows, const PrimeTable& table) {
  if (rows.empty()) throw std::invalid_argument("asymptotics_report: no rows");
  TrendReport rep;
  TrendSeries f_p{"f/p", 3.0, {}};
  TrendSeries u_p{"u/p", 3.0, {}};
  TrendSeries e_2n{"e/2n", 1.0, {}};
  TrendSeries piu_3n{"pi(u)/3n", 1.0, {}};
  TrendSeries g_p{"g/p", 2.5, {}};
  TrendSeries g_1f{"g/(1+f)", 5.0 / 6.0, {}};
  TrendSeries fe_p{"f_even/p", 2.0, {}};

  for (const auto& s : rows) {
    if (!s.certified) throw UncertifiedData("asymptotics_report: refusing uncertified rows");
    f_p.points.push_back({s.n, {s.f, s.p}});
    u_p.points.push_back({s.n, {s.u, s.p}});
    e_2n.points.push_back({s.n, {s.e, 2 * s.n}});
    piu_3n.points.push_back({s.n, {table.prime_count(s.u), 3 * s.n}});
    g_p.points.push_back({s.n, {s.g, s.p}});
    g_1f.points.push_back({s.n, {s.g, 1 + s.f}});
    if (s.f_even) fe_p.points.push_back({s.n, {*s.f_even, s.p}});
  }

  bool have_probe = false;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    Rational probe{rows[i + 1].f, rows[i].p};
    if (!have_probe || rat_less(rep.max_probe, probe)) {
      rep.max_probe = probe;
      rep.argmax_n = rows[i].n;
      have_probe = true;
    }
  }
  if (have_probe) {
    rep.empirical_n0 = rep.argmax_n + 1;
    rep.empirical_c0 = std::ceil(rep.max_probe.value() * 1e4) / 1e4;
  }

  rep.series = {std::move(f_p), std::move(u_p),   std::move(e_2n), std::move(piu_3n),
                std::move(g_p), std::move(g_1f),  std::move(fe_p)};
  return rep;
}

const TrendSeries* find_series(const TrendReport& rep, const std::string& name) {
  for (const auto& s : rep.series)
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<double> decade_mean(const TrendSeries& series, i64 at_n) {
  double sum = 0;
  i64 count = 0;
  for (const auto& [n, r] : series.points) {
    if (n > at_n / 10 && n <= at_n) {
      sum += r.value();
      ++count;
    }
  }
  if (count < 2) return std::nullopt;
  return sum / static_cast<double>(count);
}

double lambda2(double x) {
  double l3x = std::log(3 * x);
  double lx = std::log(x);
  return 6.0 * (l3x + std::log(l3x)) * (lx + std::log(lx));
}

BoundReport check_lambda2(i64 x_lo, i64 x_hi, i64 step) {
  if (step < 1) throw std::invalid_argument("check_lambda2: step must be positive");
  BoundReport rep;
  for (i64 x = std::max<i64>(x_lo, 429); x <= x_hi; x += step) {
    double lhs = lambda2(static_cast<double>(x));
    double rhs = static_cast<double>(x) + 2.0;
    ++rep.checked;
    Verdict v = strict_less(lhs, rhs, 1e-9);
    if (v == Verdict::fail) rep.violations.push_back({"lambda2", x, lhs, rhs});
    else if (v == Verdict::inconclusive) rep.inconclusive.push_back({"lambda2", x, lhs, rhs});
  }
  return rep;
}

}  // namespace psg
