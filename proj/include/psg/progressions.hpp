#ifndef PSG_PROGRESSIONS_HPP
#define PSG_PROGRESSIONS_HPP

#include <utility>
#include <vector>

#include "psg/family.hpp"
#include "psg/primes.hpp"
#include "psg/rational.hpp"

namespace psg {

// Study family: semigroups generated by the primes ≡ a (mod d) from the k-th
// such prime onward.
struct ProgressionSpec {
  i64 a = 1;
  i64 d = 2;
  i64 start_index = 1;           // smallest k the study uses
  Rational window_factor{0, 1};  // {0,1} means default (predicted_limit(d) + 2)

  // Normalizes a into [0, d) and validates gcd(a, d) = 1.
  static ProgressionSpec normalized(i64 a, i64 d, i64 start_index = 1,
                                    Rational window_factor = {0, 1});
  Rational effective_window_factor() const;
};

// Conjectured limit of f/p for the progression family: d+1 when d is even,
// 2d+1 when d is odd.
i64 predicted_limit(i64 d);

// Invariants of the semigroup generated by the progression primes from the
// k-th one on; the summary's n field carries k and p the k-th such prime.
SemigroupSummary compute_progression_summary(const ProgressionSpec&, i64 k, const PrimeTable&);

struct ProgressionSweep {
  std::vector<SemigroupSummary> records;          // ordered by k
  std::vector<std::pair<i64, Rational>> ratios;   // (k, f/p)
  i64 predicted = 0;
};

ProgressionSweep progression_sweep(const ProgressionSpec&, i64 k_lo, i64 k_hi, const PrimeTable&,
                                   int jobs = 1);

}  // namespace psg

#endif  // PSG_PROGRESSIONS_HPP
