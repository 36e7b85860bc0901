#include "psg/primes.hpp"

#include <algorithm>
#include <cmath>

namespace psg {

namespace {

// Segment size in numbers, not bytes; keeps the working set in L2.
constexpr i64 kSegment = 1 << 18;

i64 isqrt(i64 x) {
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

PrimeTable PrimeTable::sieve_upto(i64 limit) {
  if (limit < 2) throw std::invalid_argument("sieve_upto: limit must be at least 2");

  const i64 root = isqrt(limit);
  std::vector<char> small(static_cast<std::size_t>(root) + 1, 1);
  for (i64 i = 2; i * i <= root; ++i)
    if (small[static_cast<std::size_t>(i)])
      for (i64 j = i * i; j <= root; j += i) small[static_cast<std::size_t>(j)] = 0;

  std::vector<i64> base;  // sieving primes <= sqrt(limit)
  for (i64 i = 2; i <= root; ++i)
    if (small[static_cast<std::size_t>(i)]) base.push_back(i);

  std::vector<i64> primes;
  primes.reserve(static_cast<std::size_t>(
      limit < 100 ? 32 : 1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));

  std::vector<char> seg(static_cast<std::size_t>(std::min(kSegment, limit + 1)));
  for (i64 low = 2; low <= limit; low += kSegment) {
    const i64 high = std::min(low + kSegment - 1, limit);
    std::fill(seg.begin(), seg.begin() + static_cast<std::size_t>(high - low + 1), 1);
    for (i64 q : base) {
      if (q * q > high) break;
      i64 start = std::max(q * q, ((low + q - 1) / q) * q);
      for (i64 j = start; j <= high; j += q) seg[static_cast<std::size_t>(j - low)] = 0;
    }
    for (i64 x = low; x <= high; ++x)
      if (seg[static_cast<std::size_t>(x - low)]) primes.push_back(x);
  }
  return PrimeTable(limit, std::move(primes));
}

i64 PrimeTable::nth_prime(i64 n) const {
  if (n < 1 || n > size())
    throw std::out_of_range("nth_prime: table holds " + std::to_string(size()) +
                            " primes, asked for n=" + std::to_string(n));
  return primes_[static_cast<std::size_t>(n - 1)];
}

i64 PrimeTable::prime_count(i64 x) const {
  if (x > limit_)
    throw ResieveNeeded(x, "prime_count: x=" + std::to_string(x) + " beyond sieve limit " +
                               std::to_string(limit_));
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<i64>(it - primes_.begin());
}

bool PrimeTable::is_prime(i64 x) const {
  if (x > limit_)
    throw ResieveNeeded(x, "is_prime: x beyond sieve limit");
  return std::binary_search(primes_.begin(), primes_.end(), x);
}

std::span<const i64> PrimeTable::primes_in_span(i64 lo, i64 hi) const {
  if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
  if (hi > limit_ + 1)
    throw ResieveNeeded(hi, "primes_in: range end " + std::to_string(hi) +
                                " beyond sieve limit " + std::to_string(limit_));
  auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
  auto last = std::lower_bound(first, primes_.end(), hi);
  return {primes_.data() + (first - primes_.begin()), static_cast<std::size_t>(last - first)};
}

std::vector<i64> PrimeTable::primes_in(i64 lo, i64 hi) const {
  auto s = primes_in_span(lo, hi);
  return {s.begin(), s.end()};
}

std::vector<i64> PrimeTable::primes_in_progression(i64 a, i64 d, i64 lo, i64 hi) const {
  if (d < 1) throw std::invalid_argument("primes_in_progression: modulus must be positive");
  i64 r = ((a % d) + d) % d;
  if (r == 0 || std::gcd(r, d) != 1)
    throw std::invalid_argument("primes_in_progression: residue " + std::to_string(a) +
                                " mod " + std::to_string(d) + " is not a unit");
  std::vector<i64> out;
  for (i64 q : primes_in_span(lo, hi))
    if (q % d == r) out.push_back(q);
  return out;
}

std::optional<std::pair<i64, i64>> PrimeTable::twin_pair_in(i64 lo, i64 hi) const {
  if (hi > limit_)
    throw ResieveNeeded(hi, "twin_pair_in: range end beyond sieve limit");
  auto it = std::lower_bound(primes_.begin(), primes_.end(), lo);
  for (; it != primes_.end() && it + 1 != primes_.end(); ++it) {
    if (*it + 2 > hi) break;
    if (*(it + 1) == *it + 2) return std::make_pair(*it, *it + 2);
  }
  return std::nullopt;
}

Verdict strict_less(double lhs, double rhs, double rel_margin) {
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
  double m = (rhs - lhs) / scale;
  if (m > rel_margin) return Verdict::pass;
  if (m < -rel_margin) return Verdict::fail;
  return Verdict::inconclusive;
}

BoundReport check_rs_bounds(const PrimeTable& table, i64 x_lo, i64 x_hi, i64 step) {
  if (step < 1) throw std::invalid_argument("check_rs_bounds: step must be positive");
  if (x_hi > table.limit())
    throw ResieveNeeded(x_hi, "check_rs_bounds: grid end beyond sieve limit");

  BoundReport rep;
  auto record = [&rep](Verdict v, const char* name, i64 at, double lhs, double rhs) {
    ++rep.checked;
    if (v == Verdict::fail) rep.violations.push_back({name, at, lhs, rhs});
    else if (v == Verdict::inconclusive) rep.inconclusive.push_back({name, at, lhs, rhs});
  };

  const double e32 = std::exp(1.5);
  for (i64 x = x_lo; x <= x_hi; x += step) {
    double lx = std::log(static_cast<double>(x));
    double pi_x = static_cast<double>(table.prime_count(x));
    if (static_cast<double>(x) > e32)
      record(strict_less(pi_x, x / (lx - 1.5), 1e-9), "pi-upper", x, pi_x, x / (lx - 1.5));
    if (x >= 67)
      record(strict_less(x / (lx - 0.5), pi_x, 1e-9), "pi-lower", x, x / (lx - 0.5), pi_x);
  }
  const i64 k_hi = std::min(x_hi, table.size());
  for (i64 k = std::max<i64>(x_lo, 6); k <= k_hi; k += step) {
    double lk = std::log(static_cast<double>(k));
    double rhs = static_cast<double>(k) * (lk + std::log(lk));
    double pk = static_cast<double>(table.nth_prime(k));
    record(strict_less(pk, rhs, 1e-9), "pk-upper", k, pk, rhs);
  }
  return rep;
}

}  // namespace psg
