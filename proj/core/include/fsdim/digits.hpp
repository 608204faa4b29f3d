#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsdim/rational.hpp"

namespace fsdim {

using Digit = std::uint8_t;
using Digits = std::vector<Digit>;
using DigitView = std::span<const Digit>;

inline constexpr unsigned kMinBase = 2;
inline constexpr unsigned kMaxBase = 10;

/// Throws Error(InvalidBase) unless 2 <= base <= 10.
void check_base(unsigned base);

/// Parses ASCII digit text ("0110") into digit values, checking each is < base.
Digits parse_digits(std::string_view text, unsigned base);

/// ASCII rendering of a digit string; empty input renders as "".
std::string to_string(DigitView digits);

/// Throws Error(InvalidDigit) if any digit is >= base.
void check_digits(DigitView digits, unsigned base);

/// real_b(w) = sum_i w[i] * b^{-(i+1)}, exactly. real_value({}) == 0.
Rational real_value(DigitView w, unsigned base);

/// Positionwise complement: comp(w)[i] = b - 1 - w[i].
Digits comp(DigitView w, unsigned base);

// ---------------------------------------------------------------------------
// Real specifications

struct RationalSpec {
  Integer numerator;
  Integer denominator;
};

/// real_b(pattern pattern pattern ...).
struct PeriodicSpec {
  std::string pattern;
};

/// real_b(w); a finite expansion.
struct DyadicSpec {
  std::string digits;
};

/// Concatenation of the base-b numerals 1, 2, 3, ...
struct ChampernowneSpec {};

struct DigitFileSpec {
  std::filesystem::path path;
};

using RealSpec =
    std::variant<RationalSpec, PeriodicSpec, DyadicSpec, ChampernowneSpec, DigitFileSpec>;

/// Parses `rat:P/Q`, `periodic:W`, `dyadic:W`, `champernowne`, `digitfile:PATH`.
RealSpec parse_real_spec(std::string_view text);
std::string to_string(const RealSpec& spec);

/// Reads a digit file: ASCII digits, whitespace ignored, '#' comments to end of line.
Digits read_digit_file(const std::filesystem::path& path, unsigned base);

namespace detail {
class DigitSource;
}

/// The canonical base-b expansion seq_b(x) of a real x in [0,1), read on
/// demand. Immutable and cheap to copy; digit access is pure by position.
class DigitStream {
 public:
  /// Throws InvalidBase, SpecOutOfRange, InvalidDigit, Io.
  static DigitStream open(const RealSpec& spec, unsigned base);
  static DigitStream from_rational(const Rational& x, unsigned base);
  /// A stream known only through a finite prefix (digit files).
  static DigitStream from_prefix(Digits digits, unsigned base);
  static DigitStream champernowne(unsigned base);

  unsigned base() const { return base_; }

  /// S[i]. Throws InsufficientDigits past the end of a finite prefix.
  Digit digit(std::size_t i) const;
  Digits prefix(std::size_t n) const;

  /// real_b(S restricted to the first m digits).
  Rational exact_value_up_to(std::size_t m) const;

  /// The value of x when it is rational and known exactly.
  const std::optional<Rational>& exact_value() const { return exact_; }

  /// Number of digits available, for finite-prefix streams.
  std::optional<std::size_t> available() const;

 private:
  DigitStream(unsigned base, std::shared_ptr<const detail::DigitSource> source,
              std::optional<Rational> exact);

  unsigned base_;
  std::shared_ptr<const detail::DigitSource> source_;
  std::optional<Rational> exact_;
};

/// First `count` digits of seq_b(x).
Digits seq_digits(const RealSpec& spec, unsigned base, std::size_t count);

}  // namespace fsdim
