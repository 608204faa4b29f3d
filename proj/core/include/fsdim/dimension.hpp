#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsdim/digits.hpp"
#include "fsdim/fst.hpp"
#include "fsdim/precision.hpp"
#include "fsdim/rational.hpp"

namespace fsdim {

struct NamedFst {
  std::string id;
  Fst fst;
};

using Family = std::vector<NamedFst>;

struct EstimateOptions {
  std::size_t n_max = 0;
  Rational window_frac{1, 2};
  ProfileCaps caps;
};

/// The tail window [ceil(window_frac * n_max), n_max] the liminf proxy ranges over.
struct Window {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

Window window_for(const EstimateOptions& opts);

/// One transducer's contribution to an estimate.
struct TransducerEstimate {
  std::string id;
  /// Min of cost/n over usable window rows (point, sequence), or the max of
  /// per-point proxies (sets). Absent when the transducer has no usable row.
  std::optional<Rational> proxy;
  std::vector<ProfileRow> rows;                     // window rows, point/sequence
  std::vector<std::optional<Rational>> per_point;   // set form only
  std::size_t flagged_rows = 0;
};

/// An upper-bound estimate of finite-state dimension over a finite family.
/// Adding transducers to the family can only lower it.
struct EstimateReport {
  Rational estimate;
  std::size_t best = 0;  // index of the minimizing transducer
  std::vector<TransducerEstimate> per_transducer;
  Window window;
  std::vector<std::string> flags;
  std::string verdict;
};

/// Cost of one transducer at grid precision n. Anything but Found flags the row.
using RowCost = std::function<CostResult(const Fst&, std::size_t n)>;

/// Per-transducer window rows and proxies, without choosing an estimate.
EstimateReport collect_estimate(const Family& family, const EstimateOptions& opts,
                                const RowCost& cost);

/// Shared proxy machinery: per transducer, min cost/n over the window.
/// Throws AllRowsFlagged when no transducer has a usable row.
EstimateReport estimate_from_costs(const Family& family, const EstimateOptions& opts,
                                   const RowCost& cost);

/// Set form: value(T) = max over points of T's point proxy; estimate = min
/// over T. A transducer without a proxy at some point cannot bound the set.
EstimateReport set_estimate_from_points(const Family& family,
                                        const std::vector<EstimateReport>& points,
                                        const EstimateOptions& opts);

/// Upper bound on dim_FS^b(x) from K^T_{b^-n}(x) over the window.
EstimateReport dim_point_estimate(const Family& family, const DigitStream& x,
                                  const EstimateOptions& opts);

/// Upper bound on dim_FS(S) from K^T(S restricted to n) over the window.
EstimateReport dim_seq_estimate(const Family& family, const DigitStream& s,
                                const EstimateOptions& opts);

/// inf over T of sup over xs of the point proxy.
EstimateReport dim_set_estimate(const Family& family, std::span<const DigitStream> xs,
                                const EstimateOptions& opts);

struct NormalityOptions {
  std::size_t n_max = 0;
  std::size_t max_block = 4;  // block-Huffman decoders for k = 1..max_block
  Rational threshold{95, 100};
  Rational window_frac{1, 2};
  ProfileCaps caps;
};

/// Built-in family for normality evidence: identity, block-Huffman decoders
/// trained on x's own prefix, and periodic decoders for a detected period.
Family normality_family(const DigitStream& x, const NormalityOptions& opts);

/// Smallest p <= max_period such that the first `horizon` digits (or fewer,
/// for finite streams) repeat with period p from the start.
std::optional<Digits> detect_period(const DigitStream& x, std::size_t horizon = 256,
                                    std::size_t max_period = 32);

inline constexpr const char* kVerdictCompressible = "compressible (not normal)";
inline constexpr const char* kVerdictNoCompression =
    "no compression found (consistent with normality)";

/// Dimension upper bound plus a verdict: evidence about normality, never proof.
EstimateReport normality_report(const DigitStream& x, const NormalityOptions& opts);

}  // namespace fsdim
