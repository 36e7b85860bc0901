#ifndef PSG_APERY_HPP
#define PSG_APERY_HPP

#include <span>
#include <vector>

#include "psg/rational.hpp"

namespace psg {

// Apéry table of the semigroup generated by G, with respect to its
// multiplicity p: w[i] is the least element congruent to i mod p.
// Independent of the bit-vector engine; used as a cross-check backend.
struct AperyTable {
  i64 multiplicity = 0;
  std::vector<i64> w;  // length p, w[0] == 0
};

// Shortest-path relaxation on the residue graph mod p (edges r -> r+q mod p of
// weight q for each generator q). Requires ascending generators with min == p;
// throws invalid_argument when they do not span all residues (gcd > 1).
AperyTable compute_apery(i64 p, std::span<const i64> generators);

// f = max w[i] - p
i64 apery_frobenius(const AperyTable&);

// g = sum over i of (w[i] - i) / p, each term a nonnegative integer
i64 apery_genus(const AperyTable&);

// x ∈ T  iff  x >= w[x mod p]
bool apery_contains(const AperyTable&, i64 x);

// Plain per-element reachability, no bit tricks: member[x] = 1 iff x == 0 or
// some generator g <= x has member[x - g] = 1. Window is [0, limit).
// Ground-truth oracle for tests.
std::vector<char> naive_reachability_oracle(std::span<const i64> generators, i64 limit);

}  // namespace psg

#endif  // PSG_APERY_HPP
