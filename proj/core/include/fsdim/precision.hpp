#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fsdim/digits.hpp"
#include "fsdim/endpoints.hpp"
#include "fsdim/fst.hpp"
#include "fsdim/infocontent.hpp"
#include "fsdim/rational.hpp"

namespace fsdim {

/// A request for K^T_delta(x): the cheapest T-output within delta of x.
struct PrecisionQuery {
  DigitStream x;
  Rational delta;
  std::size_t cap_input = 0;
  std::size_t cap_output = 0;
  std::size_t lookahead = kDefaultLookahead;
};

/// 4 * (n + 2).
std::size_t default_cap_input(std::size_t n);

/// Query at delta = b^{-n} with the default caps for transducer t.
PrecisionQuery grid_query(const DigitStream& x, std::size_t n, const Fst& t);

/// K^T_delta(x) = min { K^T(w) : |real_b(w) - x| < delta }.
///
/// Breadth-first over (state, output length) configurations whose output is
/// a prefix of the canonical expansion E of max(0, x - delta). After each
/// transition the accumulated output w is classified exactly against E and
/// the expansion of x + delta: accepted when real_b(w) lies strictly inside
/// the interval, kept when w is still a prefix of E, pruned otherwise. The
/// first acceptance in level order gives the minimal cost and, among those,
/// the lexicographically smallest input.
///
/// Throws InvalidBase (t and x disagree), InsufficientDigits.
CostResult kdelta(const Fst& t, const PrecisionQuery& q);

/// Brute force: every input up to max_len in length-then-lex order, each
/// output tested directly with exact rational arithmetic. CapExceeded on miss.
CostResult kdelta_oracle(const Fst& t, const PrecisionQuery& q, std::size_t max_len);

/// One row of a precision profile at delta = b^{-n}.
struct ProfileRow {
  std::size_t n = 0;
  CostStatus status = CostStatus::CapExceeded;
  std::size_t cost = 0;     // valid when status == Found
  Rational ratio;           // cost / n
  std::optional<Rational> running_inf;
  bool flagged = false;     // some transducer did not finish; row excluded
  std::size_t best = 0;     // index of the cheapest transducer
};

/// Cap policy for profiles: when unset, default_cap_input(n) and
/// max_burst * cap_input.
struct ProfileCaps {
  std::optional<std::size_t> cap_input;
  std::optional<std::size_t> cap_output;
  std::size_t lookahead = kDefaultLookahead;
};

/// Rows for n = 1..n_max with K_n = min over the family of K^T_{b^-n}(x).
std::vector<ProfileRow> kdelta_profile(std::span<const Fst> family, const DigitStream& x,
                                       std::size_t n_max, const ProfileCaps& caps = {});

/// Fills running_inf over unflagged rows, in order.
void fill_running_inf(std::vector<ProfileRow>& rows);

}  // namespace fsdim
