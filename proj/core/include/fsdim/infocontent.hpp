#pragma once

#include <cstddef>
#include <string_view>

#include "fsdim/digits.hpp"
#include "fsdim/fst.hpp"

namespace fsdim {

enum class CostStatus { Found, Unreachable, CapExceeded };

std::string_view to_string(CostStatus status);

/// An information-content answer. When Found, run(t, witness_input) ==
/// witness_output and |witness_input| == cost.
struct CostResult {
  CostStatus status = CostStatus::CapExceeded;
  std::size_t cost = 0;
  Digits witness_input;
  Digits witness_output;

  bool found() const { return status == CostStatus::Found; }
};

/// K^T(w): length of the shortest input pi with T(pi) == w.
///
/// Breadth-first search over configurations (state, matched output length),
/// each reached once. Among shortest witnesses the lexicographically smallest
/// input is returned. Found only when the cost is <= cap; if the minimum lies
/// beyond the cap the result is CapExceeded, and Unreachable means no input at
/// all produces w.
CostResult kt(const Fst& t, DigitView w, std::size_t cap);

/// Brute-force K^T(w): inputs in length-then-lex order up to max_len. It can
/// never prove unreachability, so a miss is always CapExceeded.
CostResult kt_oracle(const Fst& t, DigitView w, std::size_t max_len);

}  // namespace fsdim
