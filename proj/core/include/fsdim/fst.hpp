#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fsdim/digits.hpp"

namespace fsdim {

using StateId = std::uint32_t;

/// One entry of the transition table: delta(q, a) and nu(q, a).
struct Edge {
  StateId next = 0;
  Digits output;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A complete deterministic finite-state transducer (Q, delta, nu, q0) whose
/// input and output alphabets are both the base-b digits.
///
/// The table is total: every (state, digit) pair has exactly one edge. Values
/// are immutable once constructed.
class Fst {
 public:
  /// `edges` is indexed by q * base + a. Throws InvalidBase, StateOutOfRange,
  /// InvalidDigit, MissingTransition.
  Fst(unsigned base, std::size_t state_count, StateId start, std::vector<Edge> edges);

  unsigned base() const { return base_; }
  std::size_t state_count() const { return state_count_; }
  StateId start() const { return start_; }

  const Edge& edge(StateId q, Digit a) const { return edges_[q * base_ + a]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Longest single-step output, max |nu(q, a)|.
  std::size_t max_burst() const { return max_burst_; }

  friend bool operator==(const Fst&, const Fst&) = default;

 private:
  unsigned base_;
  std::size_t state_count_;
  StateId start_;
  std::vector<Edge> edges_;
  std::size_t max_burst_ = 0;
};

struct RunResult {
  Digits output;
  StateId state = 0;
};

/// T(pi) = nu(q0, pi). Throws InvalidDigit.
Digits run(const Fst& t, DigitView pi);

/// nu(q, pi) together with the state reached after reading pi.
RunResult run_from(const Fst& t, StateId q, DigitView pi);

/// Same states and transitions; every output string complemented, so that
/// run(complement_lift(t), pi) == comp(run(t, pi)).
Fst complement_lift(const Fst& t);

/// Parses the line-oriented `fst 1` text format. Errors carry line:col.
Fst parse_fst(std::string_view text);

/// Canonical text; transitions in (state, symbol) order.
std::string format_fst(const Fst& t);

Fst load_fst(const std::string& path);
void save_fst(const Fst& t, const std::string& path);

// ---------------------------------------------------------------------------
// Transducer families

/// One state, nu(q, a) = a.
Fst make_identity(unsigned base);

/// One state; every input digit emits `pattern` repeated `copies` times.
Fst make_periodic_decoder(DigitView pattern, std::size_t copies, unsigned base);

/// Decoder for a b-ary Huffman code over the blockLen-blocks of the first
/// prefix_len training digits.
///
/// States are the proper prefixes of codewords (internal code-tree nodes,
/// root = start). Reading a digit descends the tree; completing a codeword
/// emits its block and returns to the root. Digits that leave the set of
/// codeword prefixes self-loop with empty output. A single observed block
/// gets the one-digit codeword "0".
Fst make_block_huffman(const DigitStream& train, std::size_t prefix_len,
                       std::size_t block_len, unsigned base);

/// The codeword assignment behind make_block_huffman, block -> codeword.
struct HuffmanCode {
  std::vector<Digits> blocks;
  std::vector<Digits> codewords;
};
HuffmanCode build_huffman_code(const DigitStream& train, std::size_t prefix_len,
                               std::size_t block_len, unsigned base);

}  // namespace fsdim
