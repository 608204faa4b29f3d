#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsdim/dimension.hpp"
#include "fsdim/infocontent.hpp"
#include "fsdim/precision.hpp"

namespace fsdim::cli {

using nlohmann::ordered_json;

// Exact rationals print as "p/q"; the decimal is for reading only.
std::string decimal(const Rational& r, int digits = 6);

ordered_json to_json(const CostResult& r);
ordered_json to_json(const ProfileRow& row);
ordered_json to_json(const EstimateReport& r);

void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows);

/// One row per (transducer, n) in the window.
void write_estimate_csv(std::ostream& out, const EstimateReport& r);

void write_estimate_text(std::ostream& out, const EstimateReport& r);

}  // namespace fsdim::cli
