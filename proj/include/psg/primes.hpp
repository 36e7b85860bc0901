#ifndef PSG_PRIMES_HPP
#define PSG_PRIMES_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psg/errors.hpp"
#include "psg/rational.hpp"

namespace psg {

// Immutable ascending table of primes up to a fixed limit, built by a
// segmented sieve. Queries are pure; callers that outgrow the table sieve a
// larger one. Safe to share across threads after construction.
class PrimeTable {
 public:
  static PrimeTable sieve_upto(i64 limit);

  i64 limit() const { return limit_; }
  i64 size() const { return static_cast<i64>(primes_.size()); }
  const std::vector<i64>& primes() const { return primes_; }

  // 1-based: nth_prime(1) == 2.
  i64 nth_prime(i64 n) const;

  // pi(x); requires x <= limit.
  i64 prime_count(i64 x) const;

  // requires x <= limit.
  bool is_prime(i64 x) const;

  // Ascending primes q with lo <= q < hi; requires hi <= limit + 1.
  std::vector<i64> primes_in(i64 lo, i64 hi) const;
  std::span<const i64> primes_in_span(i64 lo, i64 hi) const;

  // Ascending primes q ≡ a (mod d) with lo <= q < hi. Requires gcd(a,d) = 1
  // and a not ≡ 0; otherwise the progression holds at most one prime.
  std::vector<i64> primes_in_progression(i64 a, i64 d, i64 lo, i64 hi) const;

  // Smallest twin pair (q, q+2), both prime, lo <= q and q+2 <= hi.
  std::optional<std::pair<i64, i64>> twin_pair_in(i64 lo, i64 hi) const;

 private:
  PrimeTable(i64 limit, std::vector<i64> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  i64 limit_;
  std::vector<i64> primes_;
};

enum class Verdict { pass, fail, inconclusive };

// Strict comparison lhs < rhs with a relative slack band: near-ties are
// reported as inconclusive instead of being forced to a side.
Verdict strict_less(double lhs, double rhs, double rel_margin = 1e-9);

struct BoundCheck {
  std::string bound;  // "pi-upper", "pi-lower", "pk-upper", "lambda2"
  i64 at = 0;
  double lhs = 0, rhs = 0;  // the check asserts lhs < rhs
};

struct BoundReport {
  i64 checked = 0;
  std::vector<BoundCheck> violations;
  std::vector<BoundCheck> inconclusive;
  bool clean() const { return violations.empty() && inconclusive.empty(); }
};

// Explicit prime bounds on the grid {x_lo, x_lo+step, ...} ∩ [x_lo, x_hi]:
//   pi(x) < x / (log x - 3/2)   for x > e^{3/2}
//   pi(x) > x / (log x - 1/2)   for x >= 67
//   p_k  < k (log k + log log k) for k >= 6, k on the same grid
BoundReport check_rs_bounds(const PrimeTable&, i64 x_lo, i64 x_hi, i64 step);

}  // namespace psg

#endif  // PSG_PRIMES_HPP
