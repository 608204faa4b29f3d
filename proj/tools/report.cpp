#include "report.hpp"

#include <cstdio>

namespace fsdim::cli {

std::string decimal(const Rational& r, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, to_double(r));
  return buf;
}

ordered_json to_json(const CostResult& r) {
  ordered_json j;
  j["status"] = std::string(to_string(r.status));
  if (r.found()) {
    j["cost"] = r.cost;
    j["witness_input"] = to_string(r.witness_input);
    j["witness_output"] = to_string(r.witness_output);
  } else {
    j["cost"] = nullptr;
  }
  return j;
}

namespace {

ordered_json optional_rational(const std::optional<Rational>& r) {
  return r ? ordered_json(to_string(*r)) : ordered_json(nullptr);
}

std::string flags_of(const ProfileRow& row) { return row.flagged ? "flagged" : ""; }

}  // namespace

ordered_json to_json(const ProfileRow& row) {
  ordered_json j;
  j["n"] = row.n;
  j["status"] = std::string(to_string(row.status));
  if (row.status == CostStatus::Found) {
    j["cost"] = row.cost;
    j["ratio"] = to_string(row.ratio);
  } else {
    j["cost"] = nullptr;
    j["ratio"] = nullptr;
  }
  j["running_inf"] = optional_rational(row.running_inf);
  j["flagged"] = row.flagged;
  return j;
}

ordered_json to_json(const EstimateReport& r) {
  ordered_json j;
  j["estimate"] = to_string(r.estimate);
  j["estimate_decimal"] = decimal(r.estimate);
  j["best"] = r.per_transducer.empty() ? "" : r.per_transducer[r.best].id;
  j["window"] = {{"lo", r.window.lo}, {"hi", r.window.hi}};
  ordered_json per = ordered_json::array();
  for (const TransducerEstimate& te : r.per_transducer) {
    ordered_json t;
    t["id"] = te.id;
    t["proxy"] = optional_rational(te.proxy);
    t["flagged_rows"] = te.flagged_rows;
    if (!te.per_point.empty()) {
      ordered_json pts = ordered_json::array();
      for (const auto& p : te.per_point) pts.push_back(optional_rational(p));
      t["per_point"] = pts;
    }
    if (!te.rows.empty()) {
      ordered_json rows = ordered_json::array();
      for (const ProfileRow& row : te.rows) rows.push_back(to_json(row));
      t["rows"] = rows;
    }
    per.push_back(t);
  }
  j["per_transducer"] = per;
  j["flags"] = r.flags;
  if (!r.verdict.empty()) j["verdict"] = r.verdict;
  return j;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows) {
  out << "n,cost,ratio,running_inf,flags\n";
  for (const ProfileRow& row : rows) {
    out << row.n << ',';
    if (row.status == CostStatus::Found) out << row.cost << ',' << to_string(row.ratio);
    else out << ',';
    out << ',' << (row.running_inf ? to_string(*row.running_inf) : "") << ',' << flags_of(row)
        << '\n';
  }
}

void write_estimate_csv(std::ostream& out, const EstimateReport& r) {
  out << "transducer,n,status,cost,ratio,running_inf,flags\n";
  for (const TransducerEstimate& te : r.per_transducer) {
    for (const ProfileRow& row : te.rows) {
      out << te.id << ',' << row.n << ',' << to_string(row.status) << ',';
      if (row.status == CostStatus::Found) out << row.cost << ',' << to_string(row.ratio);
      else out << ',';
      out << ',' << (row.running_inf ? to_string(*row.running_inf) : "") << ','
          << flags_of(row) << '\n';
    }
  }
}

void write_estimate_text(std::ostream& out, const EstimateReport& r) {
  out << "estimate (upper bound) " << to_string(r.estimate) << " (" << decimal(r.estimate) << ")\n";
  out << "best " << r.per_transducer[r.best].id << "\n";
  out << "window " << r.window.lo << ".." << r.window.hi << "\n";
  for (const TransducerEstimate& te : r.per_transducer) {
    out << "  " << te.id << ' ';
    if (te.proxy) out << to_string(*te.proxy) << " (" << decimal(*te.proxy) << ")";
    else out << "-";
    if (te.flagged_rows) out << ", " << te.flagged_rows << " flagged rows";
    out << '\n';
  }
  for (const std::string& f : r.flags) out << "flag " << f << '\n';
  if (!r.verdict.empty()) out << "verdict " << r.verdict << '\n';
}

}  // namespace fsdim::cli
