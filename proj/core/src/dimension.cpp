#include "fsdim/dimension.hpp"

#include <algorithm>

#include "fsdim/error.hpp"
#include "fsdim/infocontent.hpp"

namespace fsdim {

Window window_for(const EstimateOptions& opts) {
  if (opts.n_max < 2) throw Error(ErrorCode::InvalidArgument, "nmax must be >= 2");
  if (opts.window_frac < 0 || opts.window_frac > 1) {
    throw Error(ErrorCode::InvalidArgument, "window fraction must lie in [0,1]");
  }
  Integer lo = ceil(opts.window_frac * Rational(opts.n_max));
  Window w;
  w.lo = std::max<std::size_t>(1, lo.get_ui());
  w.hi = opts.n_max;
  return w;
}

namespace {

void require_family(const Family& family) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "transducer family is empty");
}

// Picks the minimizing transducer; false when none has a proxy.
bool pick_best(EstimateReport& report) {
  bool any = false;
  for (std::size_t k = 0; k < report.per_transducer.size(); ++k) {
    const auto& p = report.per_transducer[k].proxy;
    if (p && (!any || *p < report.estimate)) {
      report.estimate = *p;
      report.best = k;
      any = true;
    }
  }
  return any;
}

}  // namespace

EstimateReport collect_estimate(const Family& family, const EstimateOptions& opts,
                                const RowCost& cost) {
  require_family(family);
  EstimateReport report;
  report.window = window_for(opts);
  for (const NamedFst& t : family) {
    TransducerEstimate te;
    te.id = t.id;
    for (std::size_t n = report.window.lo; n <= report.window.hi; ++n) {
      CostResult r = cost(t.fst, n);
      ProfileRow row;
      row.n = n;
      row.status = r.status;
      if (r.found()) {
        row.cost = r.cost;
        row.ratio = make_rational(Integer(static_cast<unsigned long>(r.cost)),
                                  Integer(static_cast<unsigned long>(n)));
        if (!te.proxy || row.ratio < *te.proxy) te.proxy = row.ratio;
      } else {
        row.flagged = true;
        ++te.flagged_rows;
      }
      te.rows.push_back(std::move(row));
    }
    fill_running_inf(te.rows);
    if (te.flagged_rows > 0) {
      report.flags.push_back(t.id + ": " + std::to_string(te.flagged_rows) + " flagged rows");
    }
    report.per_transducer.push_back(std::move(te));
  }
  return report;
}

namespace {

void finish(EstimateReport& report) {
  if (!pick_best(report)) {
    throw Error(ErrorCode::AllRowsFlagged, "no transducer produced a usable row in window [" +
                                               std::to_string(report.window.lo) + "," +
                                               std::to_string(report.window.hi) + "]");
  }
}

std::size_t cap_for(const ProfileCaps& caps, std::size_t n) {
  return caps.cap_input ? *caps.cap_input : default_cap_input(n);
}

RowCost point_cost(const DigitStream& x, const ProfileCaps& caps) {
  return [x, caps](const Fst& t, std::size_t n) {
    PrecisionQuery q = grid_query(x, n, t);
    q.cap_input = cap_for(caps, n);
    q.cap_output = caps.cap_output ? *caps.cap_output
                                   : std::max<std::size_t>(1, t.max_burst()) * q.cap_input;
    q.lookahead = caps.lookahead;
    return kdelta(t, q);
  };
}

}  // namespace

EstimateReport estimate_from_costs(const Family& family, const EstimateOptions& opts,
                                   const RowCost& cost) {
  EstimateReport report = collect_estimate(family, opts, cost);
  finish(report);
  return report;
}

EstimateReport set_estimate_from_points(const Family& family,
                                        const std::vector<EstimateReport>& points,
                                        const EstimateOptions& opts) {
  require_family(family);
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "point set is empty");
  EstimateReport report;
  report.window = window_for(opts);
  for (std::size_t k = 0; k < family.size(); ++k) {
    TransducerEstimate te;
    te.id = family[k].id;
    bool covers_all = true;
    for (const EstimateReport& p : points) {
      const auto& proxy = p.per_transducer.at(k).proxy;
      te.per_point.push_back(proxy);
      if (!proxy) {
        covers_all = false;
      } else if (covers_all && (!te.proxy || *proxy > *te.proxy)) {
        te.proxy = proxy;
      }
    }
    if (!covers_all) {
      te.proxy.reset();
      report.flags.push_back(te.id + ": no usable row for some point");
    }
    report.per_transducer.push_back(std::move(te));
  }
  if (!pick_best(report)) {
    throw Error(ErrorCode::AllRowsFlagged,
                "no transducer in the family bounds every point of the set");
  }
  return report;
}

EstimateReport dim_point_estimate(const Family& family, const DigitStream& x,
                                  const EstimateOptions& opts) {
  return estimate_from_costs(family, opts, point_cost(x, opts.caps));
}

EstimateReport dim_seq_estimate(const Family& family, const DigitStream& s,
                                const EstimateOptions& opts) {
  Window w = window_for(opts);
  const Digits prefix = s.prefix(w.hi);
  ProfileCaps caps = opts.caps;
  return estimate_from_costs(family, opts, [&prefix, caps](const Fst& t, std::size_t n) {
    return kt(t, DigitView(prefix).first(n), cap_for(caps, n));
  });
}

EstimateReport dim_set_estimate(const Family& family, std::span<const DigitStream> xs,
                                const EstimateOptions& opts) {
  std::vector<EstimateReport> points;
  for (const DigitStream& x : xs) points.push_back(collect_estimate(family, opts, point_cost(x, opts.caps)));
  return set_estimate_from_points(family, points, opts);
}

// ---------------------------------------------------------------------------

std::optional<Digits> detect_period(const DigitStream& x, std::size_t horizon,
                                    std::size_t max_period) {
  if (auto avail = x.available()) horizon = std::min(horizon, *avail);
  Digits d = x.prefix(horizon);
  for (std::size_t p = 1; p <= max_period && 2 * p <= d.size(); ++p) {
    bool periodic = true;
    for (std::size_t i = 0; i + p < d.size() && periodic; ++i) periodic = d[i] == d[i + p];
    if (periodic) return Digits(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return std::nullopt;
}

Family normality_family(const DigitStream& x, const NormalityOptions& opts) {
  const unsigned b = x.base();
  Family family;
  family.push_back({"identity", make_identity(b)});

  std::size_t train = std::max<std::size_t>(opts.n_max, 256);
  if (auto avail = x.available()) train = std::min(train, *avail);
  for (std::size_t k = 1; k <= opts.max_block; ++k) {
    std::size_t len = train / k * k;
    if (len < k) break;
    family.push_back({"huffman_k" + std::to_string(k), make_block_huffman(x, len, k, b)});
  }

  if (auto pattern = detect_period(x)) {
    for (std::size_t copies = 1; copies <= 16; copies *= 2) {
      family.push_back({"periodic_" + to_string(*pattern) + "_x" + std::to_string(copies),
                        make_periodic_decoder(*pattern, copies, b)});
    }
  }
  return family;
}

EstimateReport normality_report(const DigitStream& x, const NormalityOptions& opts) {
  Family family = normality_family(x, opts);
  EstimateOptions eo;
  eo.n_max = opts.n_max;
  eo.window_frac = opts.window_frac;
  eo.caps = opts.caps;
  EstimateReport report = dim_point_estimate(family, x, eo);
  report.verdict = report.estimate < opts.threshold ? kVerdictCompressible : kVerdictNoCompression;
  return report;
}

}  // namespace fsdim
