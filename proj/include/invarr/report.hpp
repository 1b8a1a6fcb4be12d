#pragma once

#include <string>
#include <string_view>

#include "invarr/verify.hpp"
#include "json.hpp"

namespace invarr {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(std::string_view text);

// Field order is fixed: w, inv, code, prod, wk, br, ao, rk, re,
// avoids_231_312, avoids_four, avoids_3412_4231, weak_poly, bruhat_poly,
// product_poly, distance_poly. Absent values are null.
nlohmann::ordered_json record_to_json(const StatRecord& r);

// {"n", "depth", "records", "violations", "class_counts"}; byte-stable for a
// given report.
std::string emit_report(const SweepReport& report, ReportFormat format);

// CSV header and rows: lists and polynomials as quoted space-separated
// integers, null as an empty field.
std::string csv_header();
std::string record_to_csv(const StatRecord& r);

// Human-oriented, not a stable format.
std::string record_to_text(const StatRecord& r);

}  // namespace invarr
