#include "multrans/reports.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace multrans {

namespace {

constexpr const char* kHeader =
    "b,m,measured_length,measured_carries,conjecture1_match,reads_are_unit,"
    "write_value_is_m,log_formula_length,log_formula_match,"
    "printed_formula_length,printed_formula_match";

const char* bool_text(bool v) { return v ? "true" : "false"; }

std::string join_carries(const std::vector<nat>& carries) {
    std::ostringstream out;
    for (std::size_t i = 0; i < carries.size(); ++i)
        out << (i == 0 ? "" : ";") << carries[i];
    return out.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

nat parse_nat(const std::string& field) {
    if (field.empty())
        throw std::invalid_argument("empty numeric field in report row");
    for (char ch : field) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad numeric field in report row: " + field);
    }
    try {
        return std::stoull(field);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("numeric field out of range in report row: " + field);
    }
}

bool parse_bool(const std::string& field) {
    if (field == "true")
        return true;
    if (field == "false")
        return false;
    throw std::invalid_argument("bad boolean field in report row: " + field);
}

}  // namespace

std::string write_reports(const std::vector<CellReport>& reports,
                          ReportFormat format) {
    if (reports.empty())
        throw std::invalid_argument("no reports to write");

    if (format == ReportFormat::csv) {
        std::ostringstream out;
        out << kHeader << "\n";
        for (const CellReport& r : reports) {
            out << r.b << "," << r.m << "," << r.measured_length << ","
                << join_carries(r.measured_carries) << ","
                << bool_text(r.conjecture1_match) << ","
                << bool_text(r.reads_are_unit) << ","
                << bool_text(r.write_value_is_m) << ","
                << r.log_formula_length << ","
                << bool_text(r.log_formula_match) << ","
                << r.printed_formula_length << ","
                << bool_text(r.printed_formula_match) << "\n";
        }
        return out.str();
    }

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CellReport& r : reports) {
        nlohmann::ordered_json row;
        row["b"] = r.b;
        row["m"] = r.m;
        row["measured_length"] = r.measured_length;
        row["measured_carries"] = r.measured_carries;
        row["conjecture1_match"] = r.conjecture1_match;
        row["reads_are_unit"] = r.reads_are_unit;
        row["write_value_is_m"] = r.write_value_is_m;
        row["log_formula_length"] = r.log_formula_length;
        row["log_formula_match"] = r.log_formula_match;
        row["printed_formula_length"] = r.printed_formula_length;
        row["printed_formula_match"] = r.printed_formula_match;
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

std::vector<CellReport> parse_reports_csv(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty() || lines.front() != kHeader)
        throw std::invalid_argument("report CSV is missing the expected header");

    std::vector<CellReport> reports;
    reports.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> fields = split(lines[i], ',');
        if (fields.size() != 11) {
            std::ostringstream msg;
            msg << "report row " << i << " has " << fields.size()
                << " fields, expected 11";
            throw std::invalid_argument(msg.str());
        }
        CellReport r;
        r.b = parse_nat(fields[0]);
        r.m = parse_nat(fields[1]);
        r.measured_length = parse_nat(fields[2]);
        for (const std::string& part : split(fields[3], ';'))
            r.measured_carries.push_back(parse_nat(part));
        r.conjecture1_match = parse_bool(fields[4]);
        r.reads_are_unit = parse_bool(fields[5]);
        r.write_value_is_m = parse_bool(fields[6]);
        r.log_formula_length = parse_nat(fields[7]);
        r.log_formula_match = parse_bool(fields[8]);
        r.printed_formula_length = parse_nat(fields[9]);
        r.printed_formula_match = parse_bool(fields[10]);
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace multrans
