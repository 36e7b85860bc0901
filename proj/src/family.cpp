#include "psg/family.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "psg/apery.hpp"

namespace psg {

std::vector<i64> GeneratorUniverse::generators_in(const PrimeTable& table, i64 lo, i64 hi) const {
  if (all_primes()) return table.primes_in(lo, hi);
  return table.primes_in_progression(a, d, lo, hi);
}

namespace {

i64 ceil_mul(const Rational& factor, i64 p) {
  return (factor.num * p + factor.den - 1) / factor.den;
}

}  // namespace

SemigroupSummary summarize_generated(i64 label, i64 p, const PrimeTable& table,
                                     Rational window_factor, const GeneratorUniverse& universe,
                                     int max_doublings) {
  if (window_factor.num <= 0 || window_factor.den <= 0)
    throw std::invalid_argument("summarize_generated: window factor must be positive");
  if (ceil_mul(window_factor, p) < 2 * p)
    throw WindowTooSmall("summarize_generated: window factor below 2");

  for (int doubling = 0; doubling <= max_doublings; ++doubling) {
    const Rational factor = reduced(window_factor.num << doubling, window_factor.den);
    const i64 window = ceil_mul(factor, p);
    if (window > table.limit() + 1)
      throw ResieveNeeded(window, "summarize_generated: window beyond sieve limit");

    const std::vector<i64> gens = universe.generators_in(table, p, window);
    if (gens.empty() || gens.front() != p)
      throw std::invalid_argument("summarize_generated: universe has no prime at the multiplicity");
    if (gens.size() < 2) continue;  // a single generator never certifies; widen

    const MembershipMap m = build_membership(p, gens, window);
    const FrobeniusScan scan = frobenius(m);
    if (!scan.window_ok) continue;

    const std::vector<i64> required =
        universe.generators_in(table, p, p + scan.frobenius_candidate + 1);
    const ExactnessCertificate cert = certify(m, scan, required);
    if (!cert.valid()) continue;

    SemigroupSummary s;
    s.n = label;
    s.p = p;
    s.f = cert.frobenius_candidate;
    s.g = genus(m, cert);
    s.atoms = atoms(m, cert);
    s.e = static_cast<i64>(s.atoms.size());
    s.u = s.atoms.back();
    s.f_even = largest_even_gap(m, cert);
    s.alpha = gap_histogram(m, cert);
    s.window_factor = factor;
    s.certified = true;
    return s;
  }
  throw ComputationFailed(label, "summarize_generated: window doubling cap exceeded");
}

SemigroupSummary compute_summary(i64 n, const PrimeTable& table, Rational window_factor) {
  if (n < 1) throw std::invalid_argument("compute_summary: n must be at least 1");
  const i64 p = table.nth_prime(n);
  return summarize_generated(n, p, table, window_factor, GeneratorUniverse{});
}

namespace {

SemigroupSummary summary_with_crosscheck(i64 n, const PrimeTable& table, Rational window_factor,
                                         const CrossCheckPolicy& cc) {
  SemigroupSummary s = compute_summary(n, table, window_factor);
  if (cc.applies(n)) {
    const i64 window = ceil_mul(s.window_factor, s.p);
    const AperyTable t = compute_apery(s.p, table.primes_in_span(s.p, window));
    if (apery_frobenius(t) != s.f || apery_genus(t) != s.g)
      throw ComputationFailed(n, "backend disagreement between sumset engine and Apery table");
  }
  return s;
}

}  // namespace

std::vector<SemigroupSummary> compute_range(i64 n_lo, i64 n_hi, const PrimeTable& table, int jobs,
                                            Rational window_factor, CrossCheckPolicy cross_check) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("compute_range: bad index range");
  const i64 count = n_hi - n_lo + 1;
  std::vector<SemigroupSummary> out(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<i64> resieve(static_cast<std::size_t>(count), 0);

  if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(std::min<i64>(jobs, count));

  std::atomic<i64> cursor{n_lo};
  auto worker = [&] {
    for (;;) {
      const i64 n = cursor.fetch_add(1);
      if (n > n_hi) break;
      const std::size_t slot = static_cast<std::size_t>(n - n_lo);
      try {
        out[slot] = summary_with_crosscheck(n, table, window_factor, cross_check);
      } catch (const ResieveNeeded& e) {
        resieve[slot] = e.needed_limit();
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < errors.size(); ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  // Rare path: some window outgrew the shared sieve. Redo those indices
  // against a larger local table; results do not depend on which table
  // served them.
  i64 needed = *std::max_element(resieve.begin(), resieve.end());
  if (needed > 0) {
    const PrimeTable larger = PrimeTable::sieve_upto(needed * 2);
    for (std::size_t i = 0; i < resieve.size(); ++i)
      if (resieve[i] > 0)
        out[i] = summary_with_crosscheck(n_lo + static_cast<i64>(i), larger, window_factor,
                                         cross_check);
  }
  return out;
}

SelmerBound selmer_bound(i64 n, const PrimeTable& table) {
  SelmerBound b;
  const i64 p = table.nth_prime(n);
  const i64 pi3 = table.prime_count(3 * p);
  b.terms = pi3 - n + 1;
  b.largest_generator = table.nth_prime(pi3);
  b.bound = 2 * b.largest_generator * (p / b.terms) - p;
  b.hypothesis_violated = b.terms > p;
  return b;
}

i64 sieve_limit_for(i64 n_hi, Rational window_factor) {
  // p_k < k (log k + log log k) for k >= 6 sizes the largest multiplicity.
  double p_bound = 13.0;
  if (n_hi >= 6) {
    double lk = std::log(static_cast<double>(n_hi));
    p_bound = static_cast<double>(n_hi) * (lk + std::log(lk));
  }
  double factor = std::max(window_factor.value(), 3.0) + 0.5;
  return static_cast<i64>(p_bound * factor) + 64;
}

}  // namespace psg
