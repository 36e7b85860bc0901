#ifndef PSG_BITVEC_HPP
#define PSG_BITVEC_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "psg/rational.hpp"

namespace psg {

// Fixed-width packed bit vector carrying just what the sumset engine needs:
// word-level shift-OR, masked AND-NOT, range popcounts, top-down zero scan.
class BitVec {
  using u64 = std::uint64_t;

 public:
  BitVec() = default;
  explicit BitVec(i64 nbits)
      : nbits_(nbits), w_(static_cast<std::size_t>((nbits + 63) >> 6), 0) {}

  i64 size() const { return nbits_; }
  i64 words() const { return static_cast<i64>(w_.size()); }

  bool test(i64 i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  void set(i64 i) { w_[static_cast<std::size_t>(i >> 6)] |= u64{1} << (i & 63); }

  void clear_all() { std::fill(w_.begin(), w_.end(), 0); }

  bool none() const {
    for (u64 v : w_)
      if (v) return false;
    return true;
  }

  void or_with(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  void andnot_with(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

  // this |= (src << shift), reading only src words [wlo, whi] (inclusive).
  // Bits shifted past size() land in the tail word; call mask_tail() after a
  // batch of shifts.
  void or_shifted(const BitVec& src, i64 shift, i64 wlo, i64 whi) {
    const i64 nw = words();
    const i64 off = shift >> 6;
    const int b = static_cast<int>(shift & 63);
    for (i64 i = wlo; i <= whi; ++i) {
      u64 v = src.w_[static_cast<std::size_t>(i)];
      if (!v) continue;
      i64 j = i + off;
      if (j >= nw) break;
      if (b == 0) {
        w_[static_cast<std::size_t>(j)] |= v;
      } else {
        w_[static_cast<std::size_t>(j)] |= v << b;
        if (j + 1 < nw) w_[static_cast<std::size_t>(j + 1)] |= v >> (64 - b);
      }
    }
  }

  void mask_tail() {
    int r = static_cast<int>(nbits_ & 63);
    if (r && !w_.empty()) w_.back() &= (u64{1} << r) - 1;
  }

  // [first, last] nonzero word indices; {-1, -2} when empty.
  std::pair<i64, i64> word_bounds() const {
    i64 lo = -1, hi = -2;
    for (i64 i = 0; i < words(); ++i)
      if (w_[static_cast<std::size_t>(i)]) { lo = i; break; }
    if (lo >= 0)
      for (i64 i = words() - 1; i >= lo; --i)
        if (w_[static_cast<std::size_t>(i)]) { hi = i; break; }
    return {lo, hi};
  }

  // Largest i in [0, hi) with test(i) == false; -1 if none.
  i64 highest_zero_below(i64 hi) const {
    if (hi > nbits_) hi = nbits_;
    if (hi <= 0) return -1;
    i64 k = (hi - 1) >> 6;
    int top = static_cast<int>((hi - 1) & 63);
    for (; k >= 0; --k, top = 63) {
      u64 inv = ~w_[static_cast<std::size_t>(k)];
      if (top < 63) inv &= (u64{1} << (top + 1)) - 1;
      if (inv) return (k << 6) + (63 - std::countl_zero(inv));
    }
    return -1;
  }

  // Population count over [lo, hi).
  i64 count_ones(i64 lo, i64 hi) const {
    if (hi > nbits_) hi = nbits_;
    if (lo < 0) lo = 0;
    if (lo >= hi) return 0;
    i64 wl = lo >> 6, wh = (hi - 1) >> 6;
    u64 first_mask = ~u64{0} << (lo & 63);
    u64 last_mask = (hi & 63) ? (u64{1} << (hi & 63)) - 1 : ~u64{0};
    if (wl == wh) return std::popcount(w_[static_cast<std::size_t>(wl)] & first_mask & last_mask);
    i64 total = std::popcount(w_[static_cast<std::size_t>(wl)] & first_mask);
    for (i64 i = wl + 1; i < wh; ++i) total += std::popcount(w_[static_cast<std::size_t>(i)]);
    total += std::popcount(w_[static_cast<std::size_t>(wh)] & last_mask);
    return total;
  }

  i64 count_zeros(i64 lo, i64 hi) const {
    if (hi > nbits_) hi = nbits_;
    if (lo < 0) lo = 0;
    if (lo >= hi) return 0;
    return (hi - lo) - count_ones(lo, hi);
  }

  template <class F>
  void for_each_set(F&& fn) const {
    for (i64 i = 0; i < words(); ++i) {
      u64 v = w_[static_cast<std::size_t>(i)];
      while (v) {
        int b = std::countr_zero(v);
        fn((i << 6) + b);
        v &= v - 1;
      }
    }
  }

  void swap(BitVec& o) noexcept {
    std::swap(nbits_, o.nbits_);
    w_.swap(o.w_);
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  i64 nbits_ = 0;
  std::vector<u64> w_;
};

}  // namespace psg

#endif  // PSG_BITVEC_HPP
