#include "psg/apery.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace psg {

AperyTable compute_apery(i64 p, std::span<const i64> generators) {
  if (generators.empty() || generators.front() != p)
    throw std::invalid_argument("compute_apery: generators must start at the multiplicity");
  constexpr i64 kInf = std::numeric_limits<i64>::max();
  std::vector<i64> dist(static_cast<std::size_t>(p), kInf);
  dist[0] = 0;

  using Node = std::pair<i64, i64>;  // (distance, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (i64 q : generators) {
      if (q % p == 0) continue;  // the multiplicity itself is a self-loop
      i64 r2 = (r + q) % p;
      i64 d2 = d + q;
      if (d2 < dist[static_cast<std::size_t>(r2)]) {
        dist[static_cast<std::size_t>(r2)] = d2;
        pq.emplace(d2, r2);
      }
    }
  }
  for (i64 v : dist)
    if (v == kInf)
      throw std::invalid_argument("compute_apery: generators do not span all residues mod p");
  return {p, std::move(dist)};
}

i64 apery_frobenius(const AperyTable& t) {
  i64 top = 0;
  for (i64 v : t.w) top = std::max(top, v);
  return top - t.multiplicity;
}

i64 apery_genus(const AperyTable& t) {
  i64 g = 0;
  for (i64 i = 1; i < t.multiplicity; ++i)
    g += (t.w[static_cast<std::size_t>(i)] - i) / t.multiplicity;
  return g;
}

bool apery_contains(const AperyTable& t, i64 x) {
  if (x < 0) return false;
  return x >= t.w[static_cast<std::size_t>(x % t.multiplicity)];
}

std::vector<char> naive_reachability_oracle(std::span<const i64> generators, i64 limit) {
  std::vector<char> member(static_cast<std::size_t>(limit), 0);
  if (limit > 0) member[0] = 1;
  for (i64 x = 1; x < limit; ++x) {
    for (i64 g : generators) {
      if (g > x) break;
      if (member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return member;
}

}  // namespace psg
