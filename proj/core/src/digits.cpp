#include "fsdim/digits.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "fsdim/error.hpp"

namespace fsdim {

void check_base(unsigned base) {
  if (base < kMinBase || base > kMaxBase) {
    throw Error(ErrorCode::InvalidBase,
                "base " + std::to_string(base) + " outside [2,10]");
  }
}

Digits parse_digits(std::string_view text, unsigned base) {
  check_base(base);
  Digits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= base) {
      throw Error(ErrorCode::InvalidDigit, "digit '" + std::string(1, c) +
                                               "' not in base " + std::to_string(base));
    }
    out.push_back(static_cast<Digit>(c - '0'));
  }
  return out;
}

std::string to_string(DigitView digits) {
  std::string out;
  out.reserve(digits.size());
  for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
  return out;
}

void check_digits(DigitView digits, unsigned base) {
  for (Digit d : digits) {
    if (d >= base) {
      throw Error(ErrorCode::InvalidDigit, "digit " + std::to_string(d) +
                                               " not in base " + std::to_string(base));
    }
  }
}

Rational real_value(DigitView w, unsigned base) {
  check_base(base);
  check_digits(w, base);
  if (w.empty()) return Rational(0);
  Integer num(to_string(w), static_cast<int>(base));
  return make_rational(num, int_pow(base, w.size()));
}

Digits comp(DigitView w, unsigned base) {
  check_base(base);
  check_digits(w, base);
  Digits out(w.size());
  std::transform(w.begin(), w.end(), out.begin(),
                 [base](Digit d) { return static_cast<Digit>(base - 1 - d); });
  return out;
}

// ---------------------------------------------------------------------------

RealSpec parse_real_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string_view kind = text.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{}
                                                         : text.substr(colon + 1);
  auto need_arg = [&] {
    if (colon == std::string_view::npos || arg.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "real spec '" + std::string(text) + "' needs an argument");
    }
  };
  if (kind == "rat") {
    need_arg();
    auto slash = arg.find('/');
    if (slash == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "rat spec needs P/Q: '" + std::string(text) + "'");
    }
    Integer p = parse_integer(arg.substr(0, slash));
    Integer q = parse_integer(arg.substr(slash + 1));
    return RationalSpec{p, q};
  }
  if (kind == "periodic") {
    need_arg();
    return PeriodicSpec{std::string(arg)};
  }
  if (kind == "dyadic") {
    need_arg();
    return DyadicSpec{std::string(arg)};
  }
  if (kind == "champernowne") {
    if (colon != std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "champernowne takes no argument");
    }
    return ChampernowneSpec{};
  }
  if (kind == "digitfile") {
    need_arg();
    return DigitFileSpec{std::filesystem::path(std::string(arg))};
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown real spec '" + std::string(text) +
                  "' (expected rat:P/Q, periodic:W, dyadic:W, champernowne, digitfile:PATH)");
}

std::string to_string(const RealSpec& spec) {
  struct Visitor {
    std::string operator()(const RationalSpec& s) const {
      return "rat:" + s.numerator.get_str() + "/" + s.denominator.get_str();
    }
    std::string operator()(const PeriodicSpec& s) const { return "periodic:" + s.pattern; }
    std::string operator()(const DyadicSpec& s) const { return "dyadic:" + s.digits; }
    std::string operator()(const ChampernowneSpec&) const { return "champernowne"; }
    std::string operator()(const DigitFileSpec& s) const {
      return "digitfile:" + s.path.string();
    }
  };
  return std::visit(Visitor{}, spec);
}

Digits read_digit_file(const std::filesystem::path& path, unsigned base) {
  check_base(base);
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open digit file '" + path.string() + "'");
  }
  Digits out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char c : line) {
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= base) {
        throw Error(ErrorCode::InvalidDigit, path.string() + ":" + std::to_string(lineno) +
                                                 ": '" + std::string(1, c) +
                                                 "' is not a base-" + std::to_string(base) +
                                                 " digit");
      }
      out.push_back(static_cast<Digit>(c - '0'));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

class DigitSource {
 public:
  virtual ~DigitSource() = default;
  virtual Digit digit(std::size_t i) const = 0;
  virtual Digits prefix(std::size_t n) const = 0;
  virtual std::optional<std::size_t> available() const { return std::nullopt; }
};

namespace {

class RationalSource final : public DigitSource {
 public:
  RationalSource(Rational x, unsigned base) : x_(std::move(x)), base_(base) {}

  Digit digit(std::size_t i) const override {
    // Remainder after i steps of long division is p * b^i mod q.
    Integer r;
    Integer b(base_);
    Integer e(static_cast<unsigned long>(i));
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), x_.get_den_mpz_t());
    r = (r * x_.get_num()) % x_.get_den();
    Integer d = (r * base_) / x_.get_den();
    return static_cast<Digit>(d.get_ui());
  }

  // floor(x * b^n) written in base b is exactly the first n digits.
  Digits prefix(std::size_t n) const override {
    Digits out(n, 0);
    Integer q = (x_.get_num() * int_pow(base_, n)) / x_.get_den();
    if (q == 0) return out;
    std::string text = q.get_str(static_cast<int>(base_));
    std::size_t offset = n - text.size();
    for (std::size_t k = 0; k < text.size(); ++k) out[offset + k] = static_cast<Digit>(text[k] - '0');
    return out;
  }

 private:
  Rational x_;
  unsigned base_;
};

class ChampernowneSource final : public DigitSource {
 public:
  explicit ChampernowneSource(unsigned base) : base_(base) {}

  Digit digit(std::size_t i) const override {
    // Numerals of width d: (b-1) * b^{d-1} of them.
    std::uint64_t remaining = i;
    std::uint64_t first = 1;  // b^{d-1}
    for (std::uint64_t width = 1;; ++width) {
      std::uint64_t count = (base_ - 1) * first;
      std::uint64_t span = count * width;
      if (remaining < span) {
        std::uint64_t numeral = first + remaining / width;
        std::uint64_t pos = remaining % width;
        for (std::uint64_t k = width - 1; k > pos; --k) numeral /= base_;
        return static_cast<Digit>(numeral % base_);
      }
      remaining -= span;
      first *= base_;
    }
  }

  Digits prefix(std::size_t n) const override {
    Digits out;
    out.reserve(n + 64);
    Digits numeral;
    for (std::uint64_t k = 1; out.size() < n; ++k) {
      numeral.clear();
      for (std::uint64_t v = k; v > 0; v /= base_) numeral.push_back(static_cast<Digit>(v % base_));
      out.insert(out.end(), numeral.rbegin(), numeral.rend());
    }
    out.resize(n);
    return out;
  }

 private:
  unsigned base_;
};

class FiniteSource final : public DigitSource {
 public:
  explicit FiniteSource(Digits digits) : digits_(std::move(digits)) {}

  Digit digit(std::size_t i) const override {
    if (i >= digits_.size()) {
      throw Error(ErrorCode::InsufficientDigits,
                  "digit " + std::to_string(i) + " requested but only " +
                      std::to_string(digits_.size()) + " available");
    }
    return digits_[i];
  }

  Digits prefix(std::size_t n) const override {
    if (n > digits_.size()) digit(n - 1);
    return Digits(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n));
  }

  std::optional<std::size_t> available() const override { return digits_.size(); }

 private:
  Digits digits_;
};

}  // namespace
}  // namespace detail

DigitStream::DigitStream(unsigned base, std::shared_ptr<const detail::DigitSource> source,
                         std::optional<Rational> exact)
    : base_(base), source_(std::move(source)), exact_(std::move(exact)) {}

DigitStream DigitStream::from_rational(const Rational& x, unsigned base) {
  check_base(base);
  if (x < 0 || x >= 1) {
    throw Error(ErrorCode::SpecOutOfRange, "value " + to_string(x) + " not in [0,1)");
  }
  return DigitStream(base, std::make_shared<detail::RationalSource>(x, base), x);
}

DigitStream DigitStream::from_prefix(Digits digits, unsigned base) {
  check_base(base);
  check_digits(digits, base);
  return DigitStream(base, std::make_shared<detail::FiniteSource>(std::move(digits)),
                     std::nullopt);
}

DigitStream DigitStream::champernowne(unsigned base) {
  check_base(base);
  return DigitStream(base, std::make_shared<detail::ChampernowneSource>(base), std::nullopt);
}

DigitStream DigitStream::open(const RealSpec& spec, unsigned base) {
  check_base(base);
  struct Visitor {
    unsigned base;
    DigitStream operator()(const RationalSpec& s) const {
      if (s.denominator <= 0 || s.numerator < 0 || s.numerator >= s.denominator) {
        throw Error(ErrorCode::SpecOutOfRange, "rat:" + s.numerator.get_str() + "/" +
                                                   s.denominator.get_str() +
                                                   " not in [0,1)");
      }
      return from_rational(make_rational(s.numerator, s.denominator), base);
    }
    DigitStream operator()(const PeriodicSpec& s) const {
      Digits w = parse_digits(s.pattern, base);
      if (w.empty()) throw Error(ErrorCode::EmptyPattern, "periodic spec has empty pattern");
      Integer num = 0;
      for (Digit d : w) num = num * base + d;
      Integer den = int_pow(base, w.size()) - 1;
      if (num == den) {
        throw Error(ErrorCode::SpecOutOfRange,
                    "periodic:" + s.pattern + " equals 1 in base " + std::to_string(base));
      }
      return from_rational(make_rational(num, den), base);
    }
    DigitStream operator()(const DyadicSpec& s) const {
      return from_rational(real_value(parse_digits(s.digits, base), base), base);
    }
    DigitStream operator()(const ChampernowneSpec&) const { return champernowne(base); }
    DigitStream operator()(const DigitFileSpec& s) const {
      return from_prefix(read_digit_file(s.path, base), base);
    }
  };
  return std::visit(Visitor{base}, spec);
}

Digit DigitStream::digit(std::size_t i) const { return source_->digit(i); }

Digits DigitStream::prefix(std::size_t n) const { return source_->prefix(n); }

Rational DigitStream::exact_value_up_to(std::size_t m) const {
  return real_value(prefix(m), base_);
}

std::optional<std::size_t> DigitStream::available() const { return source_->available(); }

Digits seq_digits(const RealSpec& spec, unsigned base, std::size_t count) {
  return DigitStream::open(spec, base).prefix(count);
}

}  // namespace fsdim
