#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fsdim/digits.hpp"
#include "fsdim/dimension.hpp"
#include "fsdim/fst.hpp"
#include "fsdim/infocontent.hpp"
#include "fsdim/rational.hpp"

namespace fsdim {

enum class EnumeratorKind { Canonical, BlockPermuted, Targeted };

using BlockPermutation = std::map<Digits, Digits>;

/// A computable map f from digit strings to rationals in [0,1) whose image
/// is dense. Density holds by construction for the provided kinds: canonical
/// and block-permuted have image D_b, and targeted agrees with canonical
/// off the strings 0^k.
class SeparatorEnumerator {
 public:
  /// f(w) = real_b(w).
  static SeparatorEnumerator canonical(unsigned base);

  /// Pads w with trailing zeros to a multiple of m, applies sigma to each
  /// length-m block, then takes real_b. Throws InvalidPermutation unless
  /// sigma is a bijection on all b^m blocks.
  static SeparatorEnumerator block_permuted(unsigned base, std::size_t block_len,
                                            BlockPermutation sigma);

  /// f(0^k) = real_b(seq_b(x) restricted to 2^k digits) for k >= 1; f(w) =
  /// real_b(w) for every other w.
  static SeparatorEnumerator targeted(const DigitStream& x, std::string description = "");

  unsigned alphabet_size() const { return base_; }
  EnumeratorKind kind() const { return kind_; }
  const std::string& description() const { return description_; }

  Rational eval(DigitView w) const;

 private:
  SeparatorEnumerator(unsigned base, EnumeratorKind kind, std::string description)
      : base_(base), kind_(kind), description_(std::move(description)) {}

  unsigned base_;
  EnumeratorKind kind_;
  std::string description_;
  std::size_t block_len_ = 1;
  BlockPermutation sigma_;
  std::optional<DigitStream> target_;
};

/// Reads `block -> block` lines; '#' comments and blank lines ignored.
BlockPermutation read_permutation_file(const std::filesystem::path& path, unsigned base,
                                       std::size_t block_len);

/// `canonical`, `blockperm:m:PERMFILE` or `targeted:SPEC`.
SeparatorEnumerator parse_enumerator(std::string_view spec, unsigned base);

/// Default input-length bound: about 2^20 inputs, i.e. 20 for base 2.
std::size_t default_max_input_len(unsigned base);

/// Outputs longer than this are enumerated without deduplication.
inline constexpr std::size_t kDedupOutputBound = 64;

/// K^{T,f}_delta(x) = min { K^T(w) : |f(w) - x| < delta }.
///
/// Inputs are enumerated by increasing length (lexicographic within a
/// length) up to max_input_len; inputs reaching the same (state, output)
/// are merged while the output is shorter than dedup_bound. Exponential by
/// nature; no boundary pruning is possible for arbitrary f.
CostResult ktf_delta(const Fst& t, const SeparatorEnumerator& f, const DigitStream& x,
                     const Rational& delta, std::size_t max_input_len,
                     std::size_t dedup_bound = kDedupOutputBound);

/// f-enumerator dimension proxy for a point: as dim_point_estimate with
/// K^{T,f}_{b^-n} in place of K^T_{b^-n}. caps.cap_input is the input bound.
EstimateReport dimf_estimate(const Family& family, const SeparatorEnumerator& f,
                             const DigitStream& x, const EstimateOptions& opts);

/// Set form, with the inf-sup order.
EstimateReport dimf_set_estimate(const Family& family, const SeparatorEnumerator& f,
                                 std::span<const DigitStream> xs, const EstimateOptions& opts);

}  // namespace fsdim
