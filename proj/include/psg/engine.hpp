#ifndef PSG_ENGINE_HPP
#define PSG_ENGINE_HPP

#include <optional>
#include <span>
#include <vector>

#include "psg/bitvec.hpp"
#include "psg/errors.hpp"
#include "psg/rational.hpp"

namespace psg {

// Membership window of the semigroup T generated by G on [0, X).
//   member[x] = 1  iff  x ∈ T ∪ {0}
//   multi[x]  = 1  iff  x is a sum of at least two generators (x ∈ T* + T*)
// Atoms of T are exactly the set bits of member & ~multi above zero.
struct MembershipMap {
  i64 window = 0;        // X, exclusive
  i64 multiplicity = 0;  // p = min(G)
  std::vector<i64> generators;
  BitVec member;
  BitVec multi;

  bool contains(i64 x) const { return x >= 0 && x < window && member.test(x); }
  bool is_multi(i64 x) const { return x >= 0 && x < window && multi.test(x); }
};

// Windowed sumset closure by word-level shift-OR over summand layers.
// Requires: generators ascending primes, within [p, window), min = p.
MembershipMap build_membership(i64 p, std::span<const i64> generators, i64 window);

struct FrobeniusScan {
  i64 frobenius_candidate = 0;  // highest nonmember on the window (lower bound for f)
  i64 run_start = 0;            // candidate + 1; start of the all-member run
  bool window_ok = false;       // candidate + p < window, so the run spans p bits
};

// Top-down scan for the highest zero. Everything above it inside the window
// is a member, so window_ok alone already proves f(T) == candidate.
FrobeniusScan frobenius(const MembershipMap&);

struct ExactnessCertificate {
  i64 frobenius_candidate = 0;
  i64 run_start = 0;
  bool window_ok = false;
  bool generators_ok = false;
  bool valid() const { return window_ok && generators_ok; }
};

// required_generators: the ambient semigroup's generators lying in
// [p, p + candidate]. When all of them are present in the map, the windowed T
// equals the ambient semigroup and every derived invariant below is exact.
ExactnessCertificate certify(const MembershipMap&, const FrobeniusScan&,
                             std::span<const i64> required_generators);

// Number of gaps. Refuses uncertified data.
i64 genus(const MembershipMap&, const ExactnessCertificate&);

// Ascending minimal generating set; always inside [p, p + f].
std::vector<i64> atoms(const MembershipMap&, const ExactnessCertificate&);

// Largest even gap, absent when every gap is odd.
std::optional<i64> largest_even_gap(const MembershipMap&, const ExactnessCertificate&);

// alpha_k = (gaps in [k·p, (k+1)·p]) / (p+1) for k = 0 .. ceil(f/p).
std::vector<Rational> gap_histogram(const MembershipMap&, const ExactnessCertificate&);

}  // namespace psg

#endif  // PSG_ENGINE_HPP
