#ifndef PSG_FAMILY_HPP
#define PSG_FAMILY_HPP

#include <optional>
#include <vector>

#include "psg/engine.hpp"
#include "psg/primes.hpp"
#include "psg/rational.hpp"

namespace psg {

// Exact invariants of one prime-generated numerical semigroup.
struct SemigroupSummary {
  i64 n = 0;  // family index (or progression step)
  i64 p = 0;  // multiplicity
  i64 f = 0;  // Frobenius number
  i64 g = 0;  // genus
  i64 e = 0;  // embedding dimension
  i64 u = 0;  // largest atom
  std::optional<i64> f_even;   // largest even gap; absent when every gap is odd
  std::vector<i64> atoms;
  std::vector<Rational> alpha;  // gap densities per multiplicity band
  Rational window_factor{0, 1};  // effective X/p factor after any doubling
  bool certified = false;

  friend bool operator==(const SemigroupSummary&, const SemigroupSummary&) = default;
};

// Generator universe: all primes (d == 1) or the primes ≡ a (mod d).
struct GeneratorUniverse {
  i64 a = 0;
  i64 d = 1;
  bool all_primes() const { return d == 1; }
  std::vector<i64> generators_in(const PrimeTable&, i64 lo, i64 hi) const;
};

// Core driver shared by the prime family and the progression study: builds
// membership on X = ceil(factor*p), doubling the window (up to max_doublings)
// until the exactness certificate holds, then extracts every invariant.
// Throws ResieveNeeded when the table cannot cover a window, and
// ComputationFailed when the doubling cap is exhausted.
SemigroupSummary summarize_generated(i64 label, i64 p, const PrimeTable&, Rational window_factor,
                                     const GeneratorUniverse&, int max_doublings = 6);

// S_n: the semigroup generated by all primes >= p_n.
SemigroupSummary compute_summary(i64 n, const PrimeTable&, Rational window_factor = {9, 2});

// Sampled redundancy against the Apéry backend during sweeps.
struct CrossCheckPolicy {
  bool enabled = true;
  i64 dense_upto = 100;  // every n up to here
  i64 stride = 100;      // plus every stride-th n
  bool applies(i64 n) const { return enabled && (n <= dense_upto || n % stride == 0); }
};

// Summaries for every n in [n_lo, n_hi], in index order, bitwise identical
// regardless of the jobs setting.
std::vector<SemigroupSummary> compute_range(i64 n_lo, i64 n_hi, const PrimeTable&, int jobs,
                                            Rational window_factor = {9, 2},
                                            CrossCheckPolicy cross_check = {});

// Selmer-type upper bound for f_n via the primes in [p_n, 3p_n).
struct SelmerBound {
  i64 bound = 0;
  i64 terms = 0;              // N = pi(3 p_n) - n + 1
  i64 largest_generator = 0;  // the largest prime below 3 p_n
  bool hypothesis_violated = false;  // N > p_n, outside the theorem's hypothesis
};
SelmerBound selmer_bound(i64 n, const PrimeTable&);

// Sieve limit comfortably covering a sweep to n_hi at the given window factor.
i64 sieve_limit_for(i64 n_hi, Rational window_factor);

}  // namespace psg

#endif  // PSG_FAMILY_HPP
