#pragma once

#include <string_view>

#include "fsdim/digits.hpp"
#include "fsdim/fst.hpp"
#include "fsdim/rational.hpp"

namespace fsdim::testing {

inline Digits bits(std::string_view s, unsigned base = 2) { return parse_digits(s, base); }

// One state, each digit written twice.
inline Fst doubling(unsigned base = 2) {
  std::vector<Edge> edges;
  for (unsigned a = 0; a < base; ++a) {
    edges.push_back({0, Digits{static_cast<Digit>(a), static_cast<Digit>(a)}});
  }
  return Fst(base, 1, 0, std::move(edges));
}

inline Rational q(long p, long d) { return make_rational(Integer(p), Integer(d)); }

inline DigitStream rat(long p, long d, unsigned base = 2) {
  return DigitStream::from_rational(q(p, d), base);
}

}  // namespace fsdim::testing
