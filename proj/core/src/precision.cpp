#include "fsdim/precision.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fsdim/error.hpp"

namespace fsdim {

std::size_t default_cap_input(std::size_t n) { return 4 * (n + 2); }

PrecisionQuery grid_query(const DigitStream& x, std::size_t n, const Fst& t) {
  std::size_t cap_in = default_cap_input(n);
  return {x, inverse_power(x.base(), n), cap_in, std::max<std::size_t>(1, t.max_burst()) * cap_in,
          kDefaultLookahead};
}

namespace {

void check_compatible(const Fst& t, const PrecisionQuery& q) {
  if (t.base() != q.x.base()) {
    throw Error(ErrorCode::InvalidBase, "transducer base " + std::to_string(t.base()) +
                                            " differs from real base " +
                                            std::to_string(q.x.base()));
  }
  if (q.delta <= 0) {
    throw Error(ErrorCode::SpecOutOfRange, "precision must be > 0");
  }
}

constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

struct Node {
  StateId state;
  std::size_t out_len;
  std::uint32_t parent;
  Digit symbol;
};

enum class Verdict { Accept, Continue, Prune };

// Classifies w = E(L)[0..i) + piece against the open interval (L, U).
class Classifier {
 public:
  explicit Classifier(Endpoints& ends) : ends_(ends) {}

  Verdict classify(std::size_t i, const Digits& piece) {
    Expansion& lower = ends_.lower;
    std::size_t j = 0;
    while (j < piece.size() && piece[j] == lower.digit(i + j)) ++j;
    if (j == piece.size()) return Verdict::Continue;
    if (piece[j] < lower.digit(i + j)) return Verdict::Prune;
    // real(w) > L from here on; accept iff real(w) < U.
    if (ends_.upper_clamped) return Verdict::Accept;
    const std::size_t split = i + j;
    if (lower_and_upper_differ_before(split)) return Verdict::Accept;
    Expansion& upper = *ends_.upper;
    for (std::size_t k = j; k < piece.size(); ++k) {
      Digit u = upper.digit(i + k);
      if (piece[k] != u) return piece[k] < u ? Verdict::Accept : Verdict::Prune;
    }
    return upper.tail_is_zero(i + piece.size()) ? Verdict::Prune : Verdict::Accept;
  }

 private:
  // True iff E(L) and E(U) differ somewhere in [0, limit).
  bool lower_and_upper_differ_before(std::size_t limit) {
    if (first_diff_ && *first_diff_ < limit) return true;
    if (first_diff_) return false;
    for (; agree_ < limit; ++agree_) {
      if (ends_.lower.digit(agree_) != ends_.upper->digit(agree_)) {
        first_diff_ = agree_;
        return true;
      }
    }
    return false;
  }

  Endpoints& ends_;
  std::size_t agree_ = 0;
  std::optional<std::size_t> first_diff_;
};

Digits path_of(const std::vector<Node>& nodes, std::uint32_t idx) {
  Digits pi;
  for (; idx != kRoot && nodes[idx].parent != kRoot; idx = nodes[idx].parent) {
    pi.push_back(nodes[idx].symbol);
  }
  std::reverse(pi.begin(), pi.end());
  return pi;
}

}  // namespace

CostResult kdelta(const Fst& t, const PrecisionQuery& q) {
  check_compatible(t, q);
  Endpoints ends = interval_endpoints(q.x, q.delta, q.lookahead);
  if (ends.lower_clamped) return {CostStatus::Found, 0, {}, {}};

  Classifier classifier(ends);
  std::vector<Node> nodes{{t.start(), 0, kRoot, 0}};
  // seen[state][len] for kept configurations.
  std::vector<std::vector<bool>> seen(t.state_count());
  auto mark = [&](StateId s, std::size_t len) {
    auto& row = seen[s];
    if (row.size() <= len) row.resize(std::max(len + 1, 2 * row.size()), false);
    if (row[len]) return false;
    row[len] = true;
    return true;
  };
  mark(t.start(), 0);

  std::vector<std::uint32_t> frontier{0};
  bool truncated = false;
  for (std::size_t depth = 1; depth <= q.cap_input && !frontier.empty(); ++depth) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t idx : frontier) {
      const Node node = nodes[idx];
      for (unsigned a = 0; a < t.base(); ++a) {
        const Edge& e = t.edge(node.state, static_cast<Digit>(a));
        Verdict v = classifier.classify(node.out_len, e.output);
        if (v == Verdict::Prune) continue;
        if (v == Verdict::Accept) {
          if (truncated) return {CostStatus::CapExceeded, 0, {}, {}};
          Digits pi = path_of(nodes, idx);
          pi.push_back(static_cast<Digit>(a));
          Digits w;
          w.reserve(node.out_len + e.output.size());
          for (std::size_t k = 0; k < node.out_len; ++k) w.push_back(ends.lower.digit(k));
          w.insert(w.end(), e.output.begin(), e.output.end());
          return {CostStatus::Found, depth, std::move(pi), std::move(w)};
        }
        std::size_t len = node.out_len + e.output.size();
        if (len > q.cap_output) {
          truncated = true;
          continue;
        }
        if (!mark(e.next, len)) continue;
        nodes.push_back({e.next, len, idx, static_cast<Digit>(a)});
        next.push_back(static_cast<std::uint32_t>(nodes.size() - 1));
      }
    }
    frontier = std::move(next);
  }
  if (frontier.empty() && !truncated) return {CostStatus::Unreachable, 0, {}, {}};
  return {CostStatus::CapExceeded, 0, {}, {}};
}

CostResult kdelta_oracle(const Fst& t, const PrecisionQuery& q, std::size_t max_len) {
  check_compatible(t, q);
  // Acceptance test: |real(w) - x| < delta, directly, when x is exact.
  std::optional<Endpoints> ends;
  if (!q.x.exact_value()) ends = interval_endpoints(q.x, q.delta, q.lookahead);
  auto accepts = [&](const Digits& w) {
    Rational value = real_value(w, t.base());
    if (ends) return ends->contains(value);
    Rational diff = value - *q.x.exact_value();
    return abs(diff) < q.delta;
  };

  for (std::size_t len = 0; len <= max_len; ++len) {
    // Odometer over all inputs of this length in lexicographic order.
    Digits pi(len, 0);
    while (true) {
      Digits w = run(t, pi);
      if (accepts(w)) return {CostStatus::Found, len, pi, w};
      std::size_t k = len;
      while (k > 0 && pi[k - 1] == t.base() - 1) pi[--k] = 0;
      if (k == 0) break;
      ++pi[k - 1];
    }
  }
  return {CostStatus::CapExceeded, 0, {}, {}};
}

void fill_running_inf(std::vector<ProfileRow>& rows) {
  std::optional<Rational> best;
  for (ProfileRow& row : rows) {
    if (!row.flagged && row.status == CostStatus::Found && (!best || row.ratio < *best)) {
      best = row.ratio;
    }
    row.running_inf = best;
  }
}

std::vector<ProfileRow> kdelta_profile(std::span<const Fst> family, const DigitStream& x,
                                       std::size_t n_max, const ProfileCaps& caps) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "transducer family is empty");
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "nmax must be >= 1");
  std::vector<ProfileRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ProfileRow row;
    row.n = n;
    for (std::size_t k = 0; k < family.size(); ++k) {
      PrecisionQuery pq = grid_query(x, n, family[k]);
      if (caps.cap_input) pq.cap_input = *caps.cap_input;
      pq.cap_output = caps.cap_output
                          ? *caps.cap_output
                          : std::max<std::size_t>(1, family[k].max_burst()) * pq.cap_input;
      pq.lookahead = caps.lookahead;
      CostResult r = kdelta(family[k], pq);
      if (!r.found()) {
        row.flagged = true;
        continue;
      }
      if (row.status != CostStatus::Found || r.cost < row.cost) {
        row.status = CostStatus::Found;
        row.cost = r.cost;
        row.best = k;
      }
    }
    if (row.status == CostStatus::Found) row.ratio = make_rational(row.cost, n);
    rows.push_back(std::move(row));
  }
  fill_running_inf(rows);
  return rows;
}

}  // namespace fsdim
