#ifndef PSG_ERRORS_HPP
#define PSG_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "psg/rational.hpp"

namespace psg {

// Window cannot hold two multiplicity steps; a sumset build on it would be
// meaningless.
class WindowTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Query or build needs primes beyond the current sieve limit; the caller
// re-sieves a larger table and retries.
class ResieveNeeded : public std::out_of_range {
 public:
  ResieveNeeded(i64 needed_limit, const std::string& what)
      : std::out_of_range(what), needed_limit_(needed_limit) {}
  i64 needed_limit() const { return needed_limit_; }

 private:
  i64 needed_limit_;
};

// Derived quantity requested from an uncertified membership window.
class UncertifiedData : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A per-index computation that should always succeed did not (window cap
// exceeded, backend disagreement).
class ComputationFailed : public std::runtime_error {
 public:
  ComputationFailed(i64 n, const std::string& what)
      : std::runtime_error(what + " (n=" + std::to_string(n) + ")"), n_(n) {}
  i64 index() const { return n_; }

 private:
  i64 n_;
};

// A searched witness does not exist where the statement under test predicts
// one. Carries the offending point; this is a reportable finding, not a bug.
class CounterexampleFound : public std::runtime_error {
 public:
  CounterexampleFound(i64 at, const std::string& what)
      : std::runtime_error(what + " (at=" + std::to_string(at) + ")"), at_(at) {}
  i64 at() const { return at_; }

 private:
  i64 at_;
};

}  // namespace psg

#endif  // PSG_ERRORS_HPP
