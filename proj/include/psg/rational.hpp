#ifndef PSG_RATIONAL_HPP
#define PSG_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace psg {

using i64 = std::int64_t;

// Exact rational with i64 components and positive denominator.
// Comparisons cross-multiply in 128-bit so they never round.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational reduced(i64 num, i64 den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

// -1, 0, 1 for a < b, a == b, a > b. Requires positive denominators.
inline int compare(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline bool rat_less(const Rational& a, const Rational& b) { return compare(a, b) < 0; }

// Exact decimal rendering ("4.5", "9"); falls back to "num/den" when the
// reduced denominator has a prime factor other than 2 or 5.
inline std::string decimal_string(const Rational& r0) {
  Rational r = reduced(r0.num, r0.den);
  i64 d = r.den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d != 1) return std::to_string(r.num) + "/" + std::to_string(r.den);
  bool neg = r.num < 0;
  i64 num = neg ? -r.num : r.num;
  std::string s = (neg ? "-" : "") + std::to_string(num / r.den);
  i64 rem = num % r.den;
  if (rem == 0) return s;
  s += '.';
  while (rem != 0) {
    rem *= 10;
    s += static_cast<char>('0' + rem / r.den);
    rem %= r.den;
  }
  return s;
}

// Parses "4", "4.5", ".25". Sign allowed, exponent not.
inline Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_decimal: empty string");
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  i64 num = 0, den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("parse_decimal: bad number: " + text);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      if (num < 0 || den < 0) throw std::invalid_argument("parse_decimal: overflow: " + text);
    } else {
      throw std::invalid_argument("parse_decimal: bad character in: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_decimal: bad number: " + text);
  return reduced(neg ? -num : num, den);
}

}  // namespace psg

#endif  // PSG_RATIONAL_HPP
