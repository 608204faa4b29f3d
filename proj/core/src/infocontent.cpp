#include "fsdim/infocontent.hpp"

#include <algorithm>
#include <limits>

namespace fsdim {

std::string_view to_string(CostStatus status) {
  switch (status) {
    case CostStatus::Found: return "found";
    case CostStatus::Unreachable: return "unreachable";
    case CostStatus::CapExceeded: return "cap_exceeded";
  }
  return "unknown";
}

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

struct Visit {
  std::uint32_t parent = kUnseen;
  std::uint32_t depth = 0;
  Digit symbol = 0;
};

bool matches_at(DigitView w, std::size_t i, const Digits& piece) {
  if (i + piece.size() > w.size()) return false;
  return std::equal(piece.begin(), piece.end(), w.begin() + static_cast<std::ptrdiff_t>(i));
}

}  // namespace

CostResult kt(const Fst& t, DigitView w, std::size_t cap) {
  check_digits(w, t.base());
  if (w.empty()) return {CostStatus::Found, 0, {}, {}};

  const std::size_t width = w.size() + 1;
  const std::size_t configs = t.state_count() * width;
  std::vector<Visit> seen(configs);
  auto id = [width](StateId q, std::size_t i) { return static_cast<std::uint32_t>(q * width + i); };

  std::vector<std::uint32_t> frontier{id(t.start(), 0)};
  seen[frontier[0]].parent = frontier[0];
  std::uint32_t depth = 0;
  std::uint32_t goal = kUnseen;

  while (!frontier.empty() && goal == kUnseen) {
    ++depth;
    std::vector<std::uint32_t> next;
    for (std::uint32_t c : frontier) {
      StateId q = static_cast<StateId>(c / width);
      std::size_t i = c % width;
      for (unsigned a = 0; a < t.base(); ++a) {
        const Edge& e = t.edge(q, static_cast<Digit>(a));
        if (!matches_at(w, i, e.output)) continue;
        std::uint32_t n = id(e.next, i + e.output.size());
        if (seen[n].parent != kUnseen) continue;
        seen[n] = {c, depth, static_cast<Digit>(a)};
        if (i + e.output.size() == w.size()) {
          goal = n;
          break;
        }
        next.push_back(n);
      }
      if (goal != kUnseen) break;
    }
    frontier = std::move(next);
  }

  if (goal == kUnseen) return {CostStatus::Unreachable, 0, {}, {}};
  if (depth > cap) return {CostStatus::CapExceeded, 0, {}, {}};

  Digits pi;
  for (std::uint32_t c = goal; seen[c].parent != c; c = seen[c].parent) pi.push_back(seen[c].symbol);
  std::reverse(pi.begin(), pi.end());
  return {CostStatus::Found, pi.size(), pi, Digits(w.begin(), w.end())};
}

CostResult kt_oracle(const Fst& t, DigitView w, std::size_t max_len) {
  check_digits(w, t.base());
  // Depth-first over inputs of one fixed length at a time. A subtree is skipped
  // once its output stops being a prefix of w: outputs only ever grow.
  struct Frame {
    StateId state;
    std::size_t out_len;
    Digit next_symbol;
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    Digits pi;
    Digits out;
    std::vector<Frame> stack{{t.start(), 0, 0}};
    if (len == 0) {
      if (w.empty()) return {CostStatus::Found, 0, {}, {}};
      continue;
    }
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_symbol >= t.base()) {
        stack.pop_back();
        if (!pi.empty()) pi.pop_back();
        if (!stack.empty()) out.resize(stack.back().out_len);
        continue;
      }
      Digit a = f.next_symbol++;
      out.resize(f.out_len);
      const Edge& e = t.edge(f.state, a);
      out.insert(out.end(), e.output.begin(), e.output.end());
      bool prefix = out.size() <= w.size() && std::equal(out.begin(), out.end(), w.begin());
      if (!prefix) continue;
      pi.push_back(a);
      if (pi.size() == len) {
        if (out.size() == w.size()) return {CostStatus::Found, len, pi, out};
        pi.pop_back();
        continue;
      }
      stack.push_back({e.next, out.size(), 0});
    }
  }
  return {CostStatus::CapExceeded, 0, {}, {}};
}

}  // namespace fsdim
