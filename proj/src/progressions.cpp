#include "psg/progressions.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace psg {

ProgressionSpec ProgressionSpec::normalized(i64 a, i64 d, i64 start_index,
                                            Rational window_factor) {
  if (d < 1) throw std::invalid_argument("progression: modulus must be positive");
  i64 r = ((a % d) + d) % d;
  if (r == 0 || std::gcd(r, d) != 1)
    throw std::invalid_argument("progression: residue must be a unit mod d");
  if (start_index < 1) throw std::invalid_argument("progression: start index must be >= 1");
  return {r, d, start_index, window_factor};
}

Rational ProgressionSpec::effective_window_factor() const {
  if (window_factor.num > 0) return window_factor;
  return {predicted_limit(d) + 2, 1};
}

i64 predicted_limit(i64 d) {
  if (d < 1) throw std::invalid_argument("predicted_limit: modulus must be positive");
  return d % 2 == 0 ? d + 1 : 2 * d + 1;
}

SemigroupSummary compute_progression_summary(const ProgressionSpec& spec, i64 k,
                                             const PrimeTable& table) {
  if (k < 1) throw std::invalid_argument("compute_progression_summary: k must be >= 1");
  // locate the k-th progression prime
  i64 seen = 0, p = -1;
  for (i64 q : table.primes()) {
    if (q % spec.d == spec.a && ++seen == k) {
      p = q;
      break;
    }
  }
  if (p < 0)
    throw ResieveNeeded(table.limit() * 2,
                        "compute_progression_summary: fewer than k progression primes sieved");
  GeneratorUniverse universe{spec.a, spec.d};
  return summarize_generated(k, p, table, spec.effective_window_factor(), universe);
}

ProgressionSweep progression_sweep(const ProgressionSpec& spec, i64 k_lo, i64 k_hi,
                                   const PrimeTable& table, int jobs) {
  if (k_lo < 1 || k_lo > k_hi) throw std::invalid_argument("progression_sweep: bad index range");
  const i64 count = k_hi - k_lo + 1;
  ProgressionSweep sweep;
  sweep.predicted = predicted_limit(spec.d);
  sweep.records.resize(static_cast<std::size_t>(count));

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(std::min<i64>(jobs, count));
  std::atomic<i64> cursor{k_lo};
  auto worker = [&] {
    for (;;) {
      const i64 k = cursor.fetch_add(1);
      if (k > k_hi) break;
      const std::size_t slot = static_cast<std::size_t>(k - k_lo);
      try {
        sweep.records[slot] = compute_progression_summary(spec, k, table);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  sweep.ratios.reserve(sweep.records.size());
  for (const auto& s : sweep.records) sweep.ratios.push_back({s.n, Rational{s.f, s.p}});
  return sweep;
}

}  // namespace psg
