#pragma once

#include <string>

#include <json.hpp>

#include "holoskew/biskew.hpp"
#include "holoskew/constructions.hpp"
#include "holoskew/gamma.hpp"

namespace holoskew::report {

using nlohmann::json;

inline constexpr int kSchema = 1;

json gamma_json(const GammaFunction& gamma);
json subgroup_json(const Subgroup& s);
json biskew_json(const BiskewReport& r);
json beta_json(const BetaReport& r);
json table1_json(const Table1Report& r);
json group_json(const Group& g, const std::string& spec);

/// Everything known about one brace: gamma, circle table and type, kernel.
json brace_json(const GammaFunction& gamma);

/// Whole-group census: every brace with both reports and its orbit.
json census_report(const std::string& spec, const BraceCensus& census);

/// Tab-separated projection of report["rows"]; nested values are written
/// as compact JSON.
std::string to_tsv(const json& report);

}  // namespace holoskew::report
