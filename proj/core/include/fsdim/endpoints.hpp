#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "fsdim/digits.hpp"
#include "fsdim/rational.hpp"

namespace fsdim {

inline constexpr std::size_t kDefaultLookahead = 64;

/// Canonical base-b expansion of a real in [0,1), produced lazily.
///
/// Three sources are supported: an exact rational (long division), a plain
/// DigitStream, and x + c or x - c for a stream x and a rational c (digit
/// arithmetic with carry/borrow resolved by scanning ahead at most
/// `lookahead` digits). Expansions memoize what they have produced, so an
/// instance must not be shared between threads; copies are independent.
class Expansion {
 public:
  static Expansion exact(const Rational& value, unsigned base);
  static Expansion of(const DigitStream& x, std::size_t lookahead = kDefaultLookahead);
  /// x + sign * c, which the caller guarantees lies in [0,1).
  static Expansion shifted(const DigitStream& x, const Rational& c, int sign,
                           std::size_t lookahead = kDefaultLookahead);

  Expansion(const Expansion& other);
  Expansion& operator=(const Expansion& other);
  Expansion(Expansion&&) noexcept;
  Expansion& operator=(Expansion&&) noexcept;
  ~Expansion();

  unsigned base() const;
  Digit digit(std::size_t i);
  /// True iff every digit at position >= i is zero. Throws InsufficientDigits
  /// when a non-exact source shows no nonzero digit within the lookahead.
  bool tail_is_zero(std::size_t i);
  const std::optional<Rational>& exact_value() const;

  struct State;

 private:
  explicit Expansion(std::unique_ptr<State> state);
  std::unique_ptr<State> state_;
};

/// Three-way comparison of a rational r in [0,1) with the real e expands.
int compare(const Rational& r, Expansion& e);

/// True iff x + c >= 1, decided digitwise (c rational, x a stream).
bool sum_reaches_one(const DigitStream& x, const Rational& c,
                     std::size_t lookahead = kDefaultLookahead);

/// The open interval (x - delta, x + delta) intersected with [0,1).
///
/// `lower` is the canonical expansion of max(0, x - delta); `upper` is the
/// expansion of x + delta and is absent when x + delta >= 1. The exact
/// rational endpoints are present only when x is exactly known.
struct Endpoints {
  unsigned base = 2;
  bool lower_clamped = false;  // x - delta < 0
  bool upper_clamped = false;  // x + delta >= 1
  std::optional<Rational> lower_value;
  std::optional<Rational> upper_value;
  Expansion lower;
  std::optional<Expansion> upper;

  /// x - delta < r < x + delta (strict), for r in [0,1).
  bool contains(const Rational& r);
};

/// Throws SpecOutOfRange (delta <= 0) and InsufficientDigits.
Endpoints interval_endpoints(const DigitStream& x, const Rational& delta,
                             std::size_t lookahead = kDefaultLookahead);

}  // namespace fsdim
