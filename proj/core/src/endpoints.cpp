#include "fsdim/endpoints.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fsdim/error.hpp"

namespace fsdim {

namespace {
constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();
// Hard stop for comparisons that never resolve (a finite digit file that
// happens to equal a rational).
constexpr std::size_t kCompareLimit = std::size_t{1} << 24;

[[noreturn]] void insufficient(std::size_t at, std::size_t lookahead) {
  throw Error(ErrorCode::InsufficientDigits,
              "expansion undecided after " + std::to_string(lookahead) +
                  " digits of lookahead at position " + std::to_string(at));
}
}  // namespace

struct Expansion::State {
  explicit State(unsigned b) : base(b) {}
  virtual ~State() = default;
  virtual std::unique_ptr<State> clone() const = 0;
  virtual Digit digit(std::size_t i) = 0;
  virtual bool tail_is_zero(std::size_t i) = 0;

  unsigned base;
  std::optional<Rational> exact;
};

namespace {

class ExactState final : public Expansion::State {
 public:
  ExactState(const Rational& v, unsigned b) : State(b), rem_(v.get_num()), den_(v.get_den()) {
    exact = v;
    if (rem_ == 0) zero_from_ = 0;
  }

  std::unique_ptr<State> clone() const override { return std::make_unique<ExactState>(*this); }

  Digit digit(std::size_t i) override {
    if (i >= zero_from_) return 0;
    extend(i + 1);
    return i < cache_.size() ? cache_[i] : 0;
  }

  bool tail_is_zero(std::size_t i) override {
    extend(i);
    return zero_from_ <= i;
  }

 private:
  // Long division in chunks: rem * b^k / den yields k digits at once.
  void extend(std::size_t n) {
    while (cache_.size() < n && zero_from_ == kNpos) {
      std::size_t chunk = std::max<std::size_t>({64, n - cache_.size(), cache_.size()});
      Integer scaled = rem_ * int_pow(base, chunk);
      Integer q;
      mpz_tdiv_qr(q.get_mpz_t(), rem_.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
      append_digits(q, chunk);
      if (rem_ == 0) {
        std::size_t last = cache_.size();
        while (last > 0 && cache_[last - 1] == 0) --last;
        zero_from_ = last;
      }
    }
  }

  void append_digits(const Integer& q, std::size_t width) {
    std::size_t start = cache_.size();
    cache_.resize(start + width, 0);
    if (q == 0) return;
    std::string text = q.get_str(static_cast<int>(base));
    std::size_t offset = start + width - text.size();
    for (std::size_t k = 0; k < text.size(); ++k) {
      cache_[offset + k] = static_cast<Digit>(text[k] - '0');
    }
  }

  Integer rem_;
  Integer den_;
  Digits cache_;
  std::size_t zero_from_ = kNpos;
};

// Digits of x read in growing blocks; prefix() is much cheaper per digit than
// random access for generated streams.
class DigitCache {
 public:
  explicit DigitCache(DigitStream x) : x_(std::move(x)) {}

  Digit operator[](std::size_t i) {
    if (i >= digits_.size()) {
      std::size_t want = std::max<std::size_t>({i + 1, 2 * digits_.size(), 256});
      if (auto avail = x_.available(); avail && want > *avail) {
        if (i >= *avail) return x_.digit(i);  // throws InsufficientDigits
        want = *avail;
      }
      digits_ = x_.prefix(want);
    }
    return digits_[i];
  }

  const DigitStream& stream() const { return x_; }

 private:
  DigitStream x_;
  Digits digits_;
};

class StreamState final : public Expansion::State {
 public:
  StreamState(DigitStream x, std::size_t lookahead)
      : State(x.base()), x_(std::move(x)), lookahead_(lookahead) {}

  std::unique_ptr<State> clone() const override { return std::make_unique<StreamState>(*this); }

  Digit digit(std::size_t i) override { return x_[i]; }

  bool tail_is_zero(std::size_t i) override {
    for (std::size_t j = i; j < i + lookahead_; ++j) {
      if (x_[j] != 0) return false;
    }
    insufficient(i, lookahead_);
  }

 private:
  DigitCache x_;
  std::size_t lookahead_;
};

// x + c (sign > 0) or x - c (sign < 0), digit by digit.
class ShiftedState final : public Expansion::State {
 public:
  ShiftedState(DigitStream x, const Rational& c, int sign, std::size_t lookahead)
      : State(x.base()), x_(std::move(x)), c_(c, x_.stream().base()), adding_(sign > 0),
        lookahead_(lookahead) {}

  std::unique_ptr<State> clone() const override { return std::make_unique<ShiftedState>(*this); }

  Digit digit(std::size_t i) override {
    if (i < out_.size()) return out_[i];
    for (std::size_t j = out_.size(); j <= i; ++j) out_.push_back(compute(j));
    return out_[i];
  }

  bool tail_is_zero(std::size_t i) override {
    for (std::size_t j = i; j < i + lookahead_; ++j) {
      if (digit(j) != 0) return false;
    }
    insufficient(i, lookahead_);
  }

  /// Carry (or borrow) flowing into position k - 1 from the tail at k.
  int carry(std::size_t k) {
    if (memo_start_ <= k && k <= memo_pos_) return memo_carry_;
    const unsigned top = base - 1;
    for (std::size_t j = k;; ++j) {
      if (j - k > lookahead_) insufficient(k, lookahead_);
      int result = -1;
      if (!adding_ && c_.tail_is_zero(j)) {
        result = 0;  // tail(x) >= 0 = tail(c)
      } else {
        unsigned xj = x_[j];
        unsigned cj = c_.digit(j);
        if (adding_) {
          if (xj + cj != top) result = xj + cj > top ? 1 : 0;
        } else if (xj != cj) {
          result = xj < cj ? 1 : 0;
        }
      }
      if (result >= 0) {
        memo_start_ = k;
        memo_pos_ = j;
        memo_carry_ = result;
        return result;
      }
    }
  }

 private:
  Digit compute(std::size_t i) {
    int xi = x_[i];
    int ci = c_.digit(i);
    int k = carry(i + 1);
    int b = static_cast<int>(base);
    int v = adding_ ? xi + ci + k : xi - ci - k;
    v = ((v % b) + b) % b;
    return static_cast<Digit>(v);
  }

  DigitCache x_;
  Digits out_;
  ExactState c_;
  bool adding_;
  std::size_t lookahead_;
  std::size_t memo_start_ = kNpos;
  std::size_t memo_pos_ = 0;
  int memo_carry_ = 0;
};

}  // namespace

Expansion::Expansion(std::unique_ptr<State> state) : state_(std::move(state)) {}
Expansion::Expansion(const Expansion& other) : state_(other.state_->clone()) {}
Expansion& Expansion::operator=(const Expansion& other) {
  if (this != &other) state_ = other.state_->clone();
  return *this;
}
Expansion::Expansion(Expansion&&) noexcept = default;
Expansion& Expansion::operator=(Expansion&&) noexcept = default;
Expansion::~Expansion() = default;

Expansion Expansion::exact(const Rational& value, unsigned base) {
  check_base(base);
  if (value < 0 || value >= 1) {
    throw Error(ErrorCode::SpecOutOfRange, "value " + to_string(value) + " not in [0,1)");
  }
  return Expansion(std::make_unique<ExactState>(value, base));
}

Expansion Expansion::of(const DigitStream& x, std::size_t lookahead) {
  if (x.exact_value()) return exact(*x.exact_value(), x.base());
  return Expansion(std::make_unique<StreamState>(x, lookahead));
}

Expansion Expansion::shifted(const DigitStream& x, const Rational& c, int sign,
                             std::size_t lookahead) {
  if (c < 0 || c >= 1) {
    throw Error(ErrorCode::InvalidArgument, "shift " + to_string(c) + " not in [0,1)");
  }
  if (x.exact_value()) {
    Rational v = sign > 0 ? Rational(*x.exact_value() + c) : Rational(*x.exact_value() - c);
    return exact(v, x.base());
  }
  return Expansion(std::make_unique<ShiftedState>(x, c, sign, lookahead));
}

unsigned Expansion::base() const { return state_->base; }
Digit Expansion::digit(std::size_t i) { return state_->digit(i); }
bool Expansion::tail_is_zero(std::size_t i) { return state_->tail_is_zero(i); }
const std::optional<Rational>& Expansion::exact_value() const { return state_->exact; }

int compare(const Rational& r, Expansion& e) {
  if (e.exact_value()) {
    int c = cmp(r, *e.exact_value());
    return (c > 0) - (c < 0);
  }
  Expansion er = Expansion::exact(r, e.base());
  for (std::size_t i = 0; i < kCompareLimit; ++i) {
    if (er.tail_is_zero(i)) return e.tail_is_zero(i) ? 0 : -1;
    Digit a = er.digit(i);
    Digit b = e.digit(i);
    if (a != b) return a < b ? -1 : 1;
  }
  insufficient(0, kCompareLimit);
}

bool sum_reaches_one(const DigitStream& x, const Rational& c, std::size_t lookahead) {
  if (c >= 1) return true;
  if (x.exact_value()) return *x.exact_value() + c >= 1;
  ShiftedState s(x, c, +1, lookahead);
  return s.carry(0) == 1;
}

bool Endpoints::contains(const Rational& r) {
  if (!lower_clamped) {
    bool above = lower_value ? r > *lower_value : compare(r, lower) > 0;
    if (!above) return false;
  }
  if (!upper_clamped) {
    bool below = upper_value ? r < *upper_value : compare(r, *upper) < 0;
    if (!below) return false;
  }
  return true;
}

Endpoints interval_endpoints(const DigitStream& x, const Rational& delta, std::size_t lookahead) {
  if (delta <= 0) {
    throw Error(ErrorCode::SpecOutOfRange, "precision " + to_string(delta) + " must be > 0");
  }
  const unsigned base = x.base();
  if (const auto& v = x.exact_value()) {
    Rational lo = *v - delta;
    Rational hi = *v + delta;
    bool lo_clamped = lo < 0;
    bool hi_clamped = hi >= 1;
    Rational lo_c = lo_clamped ? Rational(0) : lo;
    Rational hi_c = hi_clamped ? Rational(1) : hi;
    std::optional<Expansion> upper;
    if (!hi_clamped) upper = Expansion::exact(hi, base);
    return Endpoints{base, lo_clamped, hi_clamped, lo_c, hi_c,
                     Expansion::exact(lo_c, base), std::move(upper)};
  }

  bool lo_clamped = true;
  if (delta < 1) {
    Expansion ex = Expansion::of(x, lookahead);
    lo_clamped = compare(delta, ex) > 0;
  }
  Expansion lower = lo_clamped ? Expansion::exact(Rational(0), base)
                               : Expansion::shifted(x, delta, -1, lookahead);
  bool hi_clamped = sum_reaches_one(x, delta, lookahead);
  std::optional<Expansion> upper;
  if (!hi_clamped) upper = Expansion::shifted(x, delta, +1, lookahead);
  std::optional<Rational> lo_value;
  if (lo_clamped) lo_value = Rational(0);
  std::optional<Rational> hi_value;
  if (hi_clamped) hi_value = Rational(1);
  return Endpoints{base, lo_clamped, hi_clamped, lo_value, hi_value, std::move(lower),
                   std::move(upper)};
}

}  // namespace fsdim
