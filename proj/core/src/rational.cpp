#include "fsdim/rational.hpp"

#include "fsdim/error.hpp"

namespace fsdim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::InvalidDigit: return "InvalidDigit";
    case ErrorCode::SpecOutOfRange: return "SpecOutOfRange";
    case ErrorCode::InsufficientDigits: return "InsufficientDigits";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingTransition: return "MissingTransition";
    case ErrorCode::DuplicateTransition: return "DuplicateTransition";
    case ErrorCode::StateOutOfRange: return "StateOutOfRange";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::InsufficientTraining: return "InsufficientTraining";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::AllRowsFlagged: return "AllRowsFlagged";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) {
    throw Error(ErrorCode::InvalidArgument,
                "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorCode::InvalidArgument,
                  "malformed rational '" + std::string(whole) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return parse_integer(text, text); }

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  return make_rational(parse_integer(text.substr(0, slash), text),
                       parse_integer(text.substr(slash + 1), text));
}

Integer int_pow(unsigned base, std::size_t exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Rational inverse_power(unsigned base, std::size_t n) {
  return make_rational(Integer(1), int_pow(base, n));
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace fsdim
