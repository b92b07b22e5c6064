#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "multrans/reports.hpp"

using namespace multrans;

TEST_CASE("csv row for the worked ternary cell") {
    const std::vector<CellReport> reports{check_cell({3, 10})};
    const std::string text = write_reports(reports, ReportFormat::csv);
    const auto newline = text.find('\n');
    CHECK(text.substr(0, newline) ==
          "b,m,measured_length,measured_carries,conjecture1_match,reads_are_unit,"
          "write_value_is_m,log_formula_length,log_formula_match,"
          "printed_formula_length,printed_formula_match");
    CHECK(text.substr(newline + 1) == "3,10,4,0;3;1;0,true,true,true,4,true,4,true\n");
}

TEST_CASE("csv marks the printed-formula disagreement") {
    const std::vector<CellReport> reports{check_cell({3, 2})};
    const std::string text = write_reports(reports, ReportFormat::csv);
    CHECK(text.find("3,2,2,0;0,true,true,true,2,true,3,false\n") != std::string::npos);
}

TEST_CASE("empty report lists are rejected") {
    CHECK_THROWS_AS(write_reports({}, ReportFormat::csv), std::invalid_argument);
    CHECK_THROWS_AS(write_reports({}, ReportFormat::json), std::invalid_argument);
}

TEST_CASE("csv round trip over a real sweep") {
    const std::vector<CellReport> reports = sweep(9, 9, 1);
    const std::string text = write_reports(reports, ReportFormat::csv);
    CHECK(parse_reports_csv(text) == reports);
}

TEST_CASE("csv round trip keeps every field") {
    CellReport odd;
    odd.b = 7;
    odd.m = 123456;
    odd.measured_length = 9;
    odd.measured_carries = {0, 17636, 2519, 359, 51, 7, 1, 0};
    odd.conjecture1_match = false;
    odd.reads_are_unit = true;
    odd.write_value_is_m = false;
    odd.log_formula_length = 8;
    odd.log_formula_match = false;
    odd.printed_formula_length = 7;
    odd.printed_formula_match = true;
    const std::vector<CellReport> reports{odd, check_cell({2, 2})};
    CHECK(parse_reports_csv(write_reports(reports, ReportFormat::csv)) == reports);
}

TEST_CASE("csv parser rejects malformed input") {
    CHECK_THROWS_AS(parse_reports_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_reports_csv("b,m\n2,2\n"), std::invalid_argument);
    const std::string header =
        "b,m,measured_length,measured_carries,conjecture1_match,reads_are_unit,"
        "write_value_is_m,log_formula_length,log_formula_match,"
        "printed_formula_length,printed_formula_match\n";
    CHECK_THROWS_AS(parse_reports_csv(header + "2,2,3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_reports_csv(header + "2,2,3,0;1;0,yes,true,true,3,true,3,true\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_reports_csv(header + "2,x,3,0;1;0,true,true,true,3,true,3,true\n"),
                    std::invalid_argument);
}

TEST_CASE("json mirrors the csv field names") {
    const std::vector<CellReport> reports = sweep(3, 3, 1);
    const std::string text = write_reports(reports, ReportFormat::json);
    const nlohmann::json parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const nlohmann::json& row = parsed[i];
        CHECK(row["b"] == reports[i].b);
        CHECK(row["m"] == reports[i].m);
        CHECK(row["measured_length"] == reports[i].measured_length);
        CHECK(row["measured_carries"].get<std::vector<nat>>() == reports[i].measured_carries);
        CHECK(row["conjecture1_match"] == reports[i].conjecture1_match);
        CHECK(row["reads_are_unit"] == reports[i].reads_are_unit);
        CHECK(row["write_value_is_m"] == reports[i].write_value_is_m);
        CHECK(row["log_formula_length"] == reports[i].log_formula_length);
        CHECK(row["log_formula_match"] == reports[i].log_formula_match);
        CHECK(row["printed_formula_length"] == reports[i].printed_formula_length);
        CHECK(row["printed_formula_match"] == reports[i].printed_formula_match);
        CHECK(row.size() == 11);
    }
}

TEST_CASE("serialization is byte deterministic") {
    const std::vector<CellReport> reports = sweep(5, 5, 2);
    CHECK(write_reports(reports, ReportFormat::csv) ==
          write_reports(reports, ReportFormat::csv));
    CHECK(write_reports(reports, ReportFormat::json) ==
          write_reports(reports, ReportFormat::json));
}
