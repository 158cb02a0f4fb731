#pragma once

// Report emission: JSON {meta, checks, ledger}, CSV and plain text. Doubles
// use the shortest text that parses back to the same value.

#include "dirac_maxwell/dirac_algebra.hpp"
#include "dirac_maxwell/suites.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace dm {

inline constexpr std::string_view kReportVersion = "1.0.0";

/// A plain number when the imaginary part is zero, otherwise [re, im].
nlohmann::json to_json(Complexd z);
/// Always [re, im].
nlohmann::json complex_pair(Complexd z);
nlohmann::json to_json(const CheckReport& c);
nlohmann::json to_json(const DiscrepancyEntry& d);
nlohmann::json to_json(const RunConfig& cfg);
/// Rows of [re, im] pairs.
nlohmann::json to_json(const Matrix4cd& m);
nlohmann::json to_json(const AlphaSet& set);

nlohmann::json report_json(const std::vector<SuiteResult>& results, const RunConfig& cfg);
std::string render_report(const std::vector<SuiteResult>& results, const RunConfig& cfg, OutputFormat format);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view s);
std::string dump(const nlohmann::json& j);

}  // namespace dm
