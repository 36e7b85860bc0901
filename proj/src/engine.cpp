#include "psg/engine.hpp"

#include <algorithm>

namespace psg {

MembershipMap build_membership(i64 p, std::span<const i64> generators, i64 window) {
  if (generators.empty()) throw std::invalid_argument("build_membership: empty generator list");
  if (p < 2) throw std::invalid_argument("build_membership: multiplicity must be at least 2");
  if (window < 2 * p)
    throw WindowTooSmall("build_membership: window " + std::to_string(window) +
                         " below 2p = " + std::to_string(2 * p));
  if (generators.front() != p)
    throw std::invalid_argument("build_membership: min(G) must equal the multiplicity");
  if (generators.back() >= window)
    throw std::invalid_argument("build_membership: generators must lie below the window");
  for (std::size_t i = 1; i < generators.size(); ++i)
    if (generators[i] <= generators[i - 1])
      throw std::invalid_argument("build_membership: generators must be strictly ascending");

  MembershipMap m;
  m.window = window;
  m.multiplicity = p;
  m.generators.assign(generators.begin(), generators.end());
  m.multi = BitVec(window);

  // Layered sumset walk. cur holds the elements first reachable with exactly
  // j summands; each element enters cur once, at its minimal summand count,
  // which is enough to reach every longer sum through it.
  BitVec cur(window);
  for (i64 g : generators) cur.set(g);
  BitVec seen = cur;
  seen.set(0);
  BitVec next(window);

  while (true) {
    auto [wlo, whi] = cur.word_bounds();
    if (wlo < 0) break;
    next.clear_all();
    for (i64 g : generators) next.or_shifted(cur, g, wlo, whi);
    next.mask_tail();
    m.multi.or_with(next);     // every bit of next is a sum of >= 2 generators
    next.andnot_with(seen);    // keep only first-time discoveries
    if (next.none()) break;
    seen.or_with(next);
    cur.swap(next);
  }

  m.member = std::move(seen);
  return m;
}

FrobeniusScan frobenius(const MembershipMap& m) {
  i64 f = m.member.highest_zero_below(m.window);
  if (f < 0)
    throw std::logic_error("frobenius: no gap on the window (malformed membership)");
  FrobeniusScan s;
  s.frobenius_candidate = f;
  s.run_start = f + 1;
  s.window_ok = f + m.multiplicity < m.window;
  return s;
}

ExactnessCertificate certify(const MembershipMap& m, const FrobeniusScan& s,
                             std::span<const i64> required_generators) {
  ExactnessCertificate cert;
  cert.frobenius_candidate = s.frobenius_candidate;
  cert.run_start = s.run_start;
  cert.window_ok = s.window_ok;
  cert.generators_ok = std::includes(m.generators.begin(), m.generators.end(),
                                     required_generators.begin(), required_generators.end());
  return cert;
}

namespace {

void require_valid(const ExactnessCertificate& cert, const char* op) {
  if (!cert.valid())
    throw UncertifiedData(std::string(op) + ": certificate invalid, window truncates the semigroup");
}

}  // namespace

i64 genus(const MembershipMap& m, const ExactnessCertificate& cert) {
  require_valid(cert, "genus");
  return m.member.count_zeros(1, cert.frobenius_candidate + 1);
}

std::vector<i64> atoms(const MembershipMap& m, const ExactnessCertificate& cert) {
  require_valid(cert, "atoms");
  std::vector<i64> out;
  BitVec a = m.member;
  a.andnot_with(m.multi);
  a.for_each_set([&out](i64 x) {
    if (x > 0) out.push_back(x);
  });
  return out;
}

std::optional<i64> largest_even_gap(const MembershipMap& m, const ExactnessCertificate& cert) {
  require_valid(cert, "largest_even_gap");
  i64 f = cert.frobenius_candidate;
  for (i64 x = (f % 2 == 0) ? f : f - 1; x >= 2; x -= 2)
    if (!m.member.test(x)) return x;
  return std::nullopt;
}

std::vector<Rational> gap_histogram(const MembershipMap& m, const ExactnessCertificate& cert) {
  require_valid(cert, "gap_histogram");
  const i64 p = m.multiplicity;
  const i64 f = cert.frobenius_candidate;
  const i64 k_max = (f + p - 1) / p;  // ceil(f/p)
  std::vector<Rational> alpha;
  alpha.reserve(static_cast<std::size_t>(k_max) + 1);
  for (i64 k = 0; k <= k_max; ++k) {
    i64 hi = std::min((k + 1) * p, m.window - 1);  // inclusive interval [k·p, (k+1)·p]
    alpha.push_back({m.member.count_zeros(k * p, hi + 1), p + 1});
  }
  return alpha;
}

}  // namespace psg
