#pragma once

#include <string>
#include <vector>

#include "multrans/laws.hpp"

namespace multrans {

enum class ReportFormat { csv, json };

// Serializes sweep reports. CSV columns: b, m, measured_length,
// measured_carries (semicolon-joined), conjecture1_match, reads_are_unit,
// write_value_is_m, log_formula_length, log_formula_match,
// printed_formula_length, printed_formula_match. The header row is always
// present; JSON uses the same field names. Empty input is rejected.
std::string write_reports(const std::vector<CellReport>& reports,
                          ReportFormat format);

// Inverse of the CSV writer; rejects unknown headers and malformed fields.
std::vector<CellReport> parse_reports_csv(const std::string& text);

}  // namespace multrans
